#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hsq/checks.hpp"
#include "hsq/errors.hpp"
#include "hsq/genfun.hpp"
#include "hsq/identities.hpp"
#include "hsq/necklace.hpp"
#include "hsq/transfer.hpp"
#include "hsq/witten.hpp"

namespace hsq::cli {
namespace {

using nlohmann::json;

constexpr int kSchema = 1;
constexpr int kMaxRows = 100000;
constexpr int kFitStartTerms = 40;
constexpr int kFitMaxTerms = 640;

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InputError("format " + format + " is not available for this command");
}

GridFamily family_of(const std::string& name) {
  auto family = parse_family(name);
  if (!family) throw InputError("unknown family " + name);
  return *family;
}

// Shared report layout for every sweep: one line per check, then a summary.
int emit_checks(const std::string& command, const std::string& scope, const std::vector<Check>& checks,
                const std::string& format, std::ostream& out) {
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (format == "json") {
    json list = json::array(), failures = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      if (!c.passed) failures.push_back(c.name);
    }
    out << json{{"schema", kSchema}, {"command", command}, {"scope", scope}, {"passed", ok},
                {"checks", list}, {"failures", failures}}
               .dump(2)
        << '\n';
  } else {
    require_format(format, {"text"});
    for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    out << (ok ? "all " + std::to_string(checks.size()) + " checks passed"
               : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed")
        << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

Check property_check(const PropertyReport& r) {
  std::string detail = std::to_string(r.cases) + " cases";
  if (!r.passed()) detail += "; first failure: " + r.failures.front();
  return {r.name, r.passed(), detail};
}

struct Options {
  std::string format = "text";
  std::string family = "cylinder";
  int m = 0;
  int n = 0;
  int k = 0;
  std::optional<int> nmax;
  int mmax = 12;
  std::optional<int> bound_n;
  std::uint64_t seed = 2024;
  std::string action;
  std::string suite;
};

int cmd_witten(const Options& o, std::ostream& out) {
  const int bound = o.bound_n.value_or(kMaxTransferWidth);
  if (o.m < 0 || o.n < 0) throw InputError("-m and -n must be nonnegative");
  if (o.m > kMaxRows || o.n > kMaxRows) throw ResourceError("grid dimension exceeds " + std::to_string(kMaxRows));
  const GridSpec spec{family_of(o.family), o.m, o.n};
  if (std::min(o.m, o.n) > bound) {
    throw ResourceError("grid width " + std::to_string(std::min(o.m, o.n)) + " exceeds --bound-n " + std::to_string(bound));
  }
  const BigInt z = witten_transfer(spec);
  if (o.format == "json") {
    out << json{{"schema", kSchema}, {"command", "witten"}, {"family", o.family}, {"m", o.m}, {"n", o.n}, {"value", big(z)}}.dump()
        << '\n';
  } else if (o.format == "csv") {
    out << "family,m,n,value\n" << o.family << ',' << o.m << ',' << o.n << ',' << z.get_str() << '\n';
  } else {
    require_format(o.format, {"text"});
    out << z.get_str() << '\n';
  }
  return kOk;
}

int cmd_table1(const Options& o, std::ostream& out) {
  const int n_max = o.nmax.value_or(14);
  const int bound = o.bound_n.value_or(kMaxTransferWidth);
  const GridFamily family = family_of(o.family);
  if (o.mmax > kMaxRows) throw ResourceError("--mmax exceeds " + std::to_string(kMaxRows));
  std::vector<int> columns;
  for (int n = 2; n <= n_max; ++n) columns.push_back(n);
  std::vector<std::vector<BigInt>> rows;
  for (int m = 0; m <= o.mmax; ++m) {
    std::vector<BigInt> row;
    for (int n : columns) {
      if (std::min(m, n) > bound) throw ResourceError("grid width exceeds --bound-n " + std::to_string(bound));
      row.push_back(witten_transfer({family, m, n}));
    }
    rows.push_back(std::move(row));
  }
  if (o.format == "json") {
    json body = json::array();
    for (std::size_t m = 0; m < rows.size(); ++m) {
      json values = json::array();
      for (const auto& v : rows[m]) values.push_back(big(v));
      body.push_back({{"m", m}, {"values", values}});
    }
    out << json{{"schema", kSchema}, {"command", "table1"}, {"family", o.family}, {"columns", columns}, {"rows", body}}.dump()
        << '\n';
    return kOk;
  }
  require_format(o.format, {"csv", "text"});
  const bool csv = o.format == "csv";
  std::size_t width = 3;
  for (const auto& row : rows) {
    for (const auto& v : row) width = std::max(width, v.get_str().size() + 1);
  }
  auto cell = [&](const std::string& s) {
    if (csv) {
      out << ',' << s;
    } else {
      out << std::setw(static_cast<int>(width)) << s;
    }
  };
  out << (csv ? "m" : " m");
  for (int n : columns) cell(std::to_string(n));
  out << '\n';
  for (std::size_t m = 0; m < rows.size(); ++m) {
    if (csv) {
      out << m;
    } else {
      out << std::setw(2) << m;
    }
    for (const auto& v : rows[m]) cell(v.get_str());
    out << '\n';
  }
  return kOk;
}

int cmd_genfun(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InputError("genfun needs -n >= 1");
  std::optional<RationalGF> gf;
  std::string method;
  if (o.n % 2 == 0) {
    gf = cylinder_gf(o.n, o.bound_n.value_or(kDefaultGenfunBound));
    method = "patterns";
  } else {
    if (o.n > o.bound_n.value_or(kMaxTransferWidth)) throw ResourceError("odd n exceeds --bound-n");
    for (int terms = kFitStartTerms; terms <= kFitMaxTerms && !gf; terms *= 2) {
      const auto fit = fit_recurrence(column_series(o.n, terms - 1));
      if (fit.status == FitStatus::kFound) gf = fit.gf;
    }
    if (!gf) throw ResourceError("no recurrence found within " + std::to_string(kFitMaxTerms) + " terms");
    method = "recurrence-fit";
  }
  if (o.format == "json") {
    out << json{{"schema", kSchema}, {"command", "genfun"}, {"n", o.n}, {"method", method},
                {"numerator", gf->num().to_string()}, {"denominator", gf->den().to_string()},
                {"factored", gf->to_factored_string()}}
               .dump()
        << '\n';
  } else {
    require_format(o.format, {"text"});
    out << o.n << ": " << gf->to_factored_string() << '\n';
  }
  return kOk;
}

std::vector<Check> cycle_period_checks(int n_max, int bound) {
  const auto r = verify_cycle_periods(n_max, bound);
  std::string detail = std::to_string(r.classes_checked) + " necklace classes with n <= " + std::to_string(n_max);
  for (const auto& f : r.failures) {
    detail += "; cycle of length " + std::to_string(f.cycle_length) + " in (k=" + std::to_string(f.k) +
              ", n=" + std::to_string(f.n) + ") through " + f.witness.to_string();
  }
  return {{"cycle lengths divide n - 3k", r.passed(), detail}};
}

int cmd_necklace(const Options& o, std::ostream& out) {
  const int bound = o.bound_n.value_or(kDefaultNecklaceBound);
  if (o.action == "verify") {
    return emit_checks("necklace verify", "n <= " + std::to_string(o.nmax.value_or(24)),
                       cycle_period_checks(o.nmax.value_or(24), bound), o.format, out);
  }
  if (o.n < 1 || o.n % 2 != 0) throw InputError("necklace needs an even -n");
  if (o.action == "dot") {
    if (o.format != "text") require_format(o.format, {"dot"});
    out << to_dot(o.k, o.n, bound);
    return kOk;
  }
  if (o.action == "enumerate") {
    const auto classes = enumerate_necklaces(o.k, o.n, bound);
    if (o.format == "json") {
      json list = json::array();
      for (const auto& c : classes) list.push_back(to_json(c.canonical()));
      out << json{{"schema", kSchema}, {"command", "necklace enumerate"}, {"k", o.k}, {"n", o.n}, {"classes", list}}.dump()
          << '\n';
    } else {
      require_format(o.format, {"text"});
      for (const auto& c : classes) out << c.canonical().to_string() << '\n';
    }
    return kOk;
  }
  // cycles
  const auto d = cycle_decomposition(o.k, o.n, bound);
  if (o.format == "json") {
    json cycles = json::array();
    for (const auto& [length, count] : d.cycles) cycles.push_back({{"length", length}, {"count", count}});
    out << json{{"schema", kSchema}, {"command", "necklace cycles"}, {"k", o.k}, {"n", o.n},
                {"classes", d.class_count()}, {"cycles", cycles}}
               .dump()
        << '\n';
  } else if (o.format == "csv") {
    out << "length,count\n";
    for (const auto& [length, count] : d.cycles) out << length << ',' << count << '\n';
  } else {
    require_format(o.format, {"text"});
    out << d.to_string() << '\n';
  }
  return kOk;
}

std::vector<Check> identity_checks() {
  std::vector<Check> checks;
  const auto results = verify_index_identities(20, 14);
  for (const auto& id : index_identities()) {
    int total = 0;
    std::string first_failure;
    bool ok = true;
    for (const auto& r : results) {
      if (r.identity != &id) continue;
      ++total;
      if (!r.passed && ok) {
        ok = false;
        first_failure = "; fails at " + to_string(r.lhs.family) + " m=" + std::to_string(r.lhs.m) +
                        " n=" + std::to_string(r.lhs.n) + ": " + r.lhs_value.get_str() + " vs " + r.rhs_value.get_str();
      }
    }
    checks.push_back({id.name, ok && total > 0, std::to_string(total) + " instances" + first_failure});
  }
  return checks;
}

std::vector<Check> conjecture_checks(int n_max, int necklace_n_max, int genfun_bound, int necklace_bound) {
  std::vector<Check> checks;
  for (int n = 2; n <= n_max; n += 2) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const auto gf = cylinder_gf(n, genfun_bound);
    checks.push_back({tag + "denominator zeros are roots of unity", check_roots_of_unity(gf), gf.to_factored_string()});
    const auto den = check_denominator_conjecture(n, genfun_bound);
    checks.push_back({tag + "denominator divides the conjectured product", den.holds, den.conjectured.to_string()});
    const auto mult = check_multiplicity_conjecture(n, genfun_bound);
    std::string detail = "max multiplicity " + std::to_string(mult.max_multiplicity);
    if (mult.period) detail += ", period " + std::to_string(*mult.period);
    checks.push_back({tag + "zero multiplicities", mult.holds, detail});

    long patterns = 0;
    std::string bad;
    for (const auto& c : enumerate_proper(n, std::nullopt, genfun_bound)) {
      ++patterns;
      const auto bound_poly = necklace_denominator_bound(n, mu(c.canonical()), necklace_bound);
      if (!divide_exact(bound_poly, pattern_gf(c.canonical(), genfun_bound).den()) && bad.empty()) {
        bad = "; fails for " + c.canonical().to_string();
      }
    }
    checks.push_back({tag + "pattern denominators divide the necklace bound", bad.empty(),
                      std::to_string(patterns) + " proper classes" + bad});
  }
  for (auto& c : cycle_period_checks(necklace_n_max, necklace_bound)) checks.push_back(std::move(c));
  return checks;
}

std::vector<Check> correspondence_checks(int n_max, int bound) {
  const auto r = check_correspondence(n_max, bound);
  std::string detail = std::to_string(r.classes_checked) + " necklace classes with n <= " + std::to_string(n_max);
  if (!r.passed()) detail += "; " + r.failures.front();
  return {{"necklace and pattern correspondence", r.passed(), detail}};
}

std::vector<Check> property_checks(std::uint64_t seed) {
  return {property_check(check_graph_identities(500, 12, seed)), property_check(check_pattern_operations(8, 8)),
          property_check(check_reduction_soundness(500, 16, seed))};
}

int cmd_verify(const Options& o, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"identities", "conjectures", "correspondence", "properties", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), o.suite) == kSuites.end()) {
    throw InputError("unknown suite " + o.suite + " (identities, conjectures, correspondence, properties, all)");
  }
  const bool all = o.suite == "all";
  const int genfun_bound = o.bound_n.value_or(kDefaultGenfunBound);
  std::vector<Check> checks;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (all || o.suite == "identities") append(identity_checks());
  if (all || o.suite == "conjectures") {
    append(conjecture_checks(o.nmax.value_or(12), o.nmax.value_or(24), genfun_bound, kDefaultNecklaceBound));
  }
  if (all || o.suite == "correspondence") append(correspondence_checks(o.nmax.value_or(14), kDefaultNecklaceBound));
  if (all || o.suite == "properties") append(property_checks(o.seed));
  return emit_checks("verify", o.suite, checks, o.format, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Witten indices of hard-squares grids, pattern generating functions and necklaces", "hsq"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "json", "csv", "dot"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--bound-n", o.bound_n, "Size bound for n (command-specific default)")->check(CLI::PositiveNumber);
  };

  auto* witten = app.add_subcommand("witten", "Z of a single grid graph");
  common(witten);
  witten->add_option("--family", o.family, "free, cylinder or torus")->check(CLI::IsMember({"free", "cylinder", "torus"}));
  witten->add_option("-m", o.m, "Rows")->required();
  witten->add_option("-n", o.n, "Columns")->required();

  auto* table1 = app.add_subcommand("table1", "Z(P_m x C_n) for 0 <= m <= mmax, 2 <= n <= nmax");
  common(table1);
  table1->add_option("--family", o.family, "free, cylinder or torus")->check(CLI::IsMember({"free", "cylinder", "torus"}));
  table1->add_option("--mmax", o.mmax, "Largest m")->check(CLI::NonNegativeNumber);
  table1->add_option("--nmax", o.nmax, "Largest n");

  auto* genfun = app.add_subcommand("genfun", "Generating function of Z(P_m x C_n) in m");
  common(genfun);
  genfun->add_option("-n", o.n, "Columns")->required();

  auto* necklace = app.add_subcommand("necklace", "Necklace classes and the cycles of T");
  common(necklace);
  necklace->add_option("action", o.action, "enumerate, cycles, dot or verify")
      ->required()
      ->check(CLI::IsMember({"enumerate", "cycles", "dot", "verify"}));
  necklace->add_option("-k", o.k, "Half the number of stones");
  necklace->add_option("-n", o.n, "Circumference");
  necklace->add_option("--nmax", o.nmax, "Largest circumference for verify");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  common(verify);
  verify->add_option("suite", o.suite, "identities, conjectures, correspondence, properties or all")->required();
  verify->add_option("--nmax", o.nmax, "Largest n for the sweeps");
  verify->add_option("--seed", o.seed, "Seed for the randomized property suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (witten->parsed()) return cmd_witten(o, out);
    if (table1->parsed()) return cmd_table1(o, out);
    if (genfun->parsed()) return cmd_genfun(o, out);
    if (necklace->parsed()) return cmd_necklace(o, out);
    return cmd_verify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace hsq::cli
