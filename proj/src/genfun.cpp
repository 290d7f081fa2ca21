#include "hsq/genfun.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "hsq/errors.hpp"
#include "hsq/transfer.hpp"
#include "hsq/witten.hpp"

namespace hsq {

namespace {

// num / prod Phi_d^e. Every denominator met while solving the successor graph
// is a product of factors 1 -+ t^a, so keeping it factored makes reduction a
// matter of trial division by the Phi_d present.
struct CycloFraction {
  IntPoly num;
  std::map<int, int> den;
};

IntPoly phi_power(int d, int e) {
  IntPoly out{1};
  for (int i = 0; i < e; ++i) out *= cyclotomic(d);
  return out;
}

void cancel(CycloFraction& f) {
  if (f.num.is_zero()) {
    f.den.clear();
    return;
  }
  for (auto it = f.den.begin(); it != f.den.end();) {
    while (it->second > 0) {
      auto q = divide_exact(f.num, cyclotomic(it->first));
      if (!q) break;
      f.num = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? f.den.erase(it) : std::next(it);
  }
}

CycloFraction add(const CycloFraction& a, const CycloFraction& b) {
  std::map<int, int> den = a.den;
  for (auto [d, e] : b.den) den[d] = std::max(den[d], e);
  auto lift = [&](const CycloFraction& f) {
    IntPoly num = f.num;
    for (auto [d, e] : den) {
      auto it = f.den.find(d);
      num *= phi_power(d, e - (it == f.den.end() ? 0 : it->second));
    }
    return num;
  };
  CycloFraction out{lift(a) + lift(b), std::move(den)};
  cancel(out);
  return out;
}

// sign * t^shift * f
CycloFraction scaled(const CycloFraction& f, int sign, int shift) {
  return {BigInt(sign) * f.num.shifted(shift), f.den};
}

// f / (1 - sigma t^a), a >= 1
CycloFraction over_one_minus(CycloFraction f, int sigma, int a) {
  if (sigma == 1) {
    // 1 - t^a = -prod_{d | a} Phi_d
    f.num = -f.num;
    for (int d = 1; d <= a; ++d) {
      if (a % d == 0) ++f.den[d];
    }
  } else {
    // 1 + t^a = prod_{d | 2a, d does not divide a} Phi_d
    for (int d = 1; d <= 2 * a; ++d) {
      if ((2 * a) % d == 0 && a % d != 0) ++f.den[d];
    }
  }
  cancel(f);
  return f;
}

int den_degree(const CycloFraction& f) {
  int total = 0;
  for (auto [d, e] : f.den) total += e * totient(d);
  return total;
}

RationalGF to_gf(const CycloFraction& f) {
  IntPoly den{1};
  for (auto [d, e] : f.den) den *= phi_power(d, e);
  return RationalGF::from_coprime(f.num, den);
}

// One outgoing edge of the successor graph:
// F_P = constant + sign * t^shift * F_next.
struct Step {
  PatternClass next;
  int sign;
  int shift;
  CycloFraction constant;
  std::optional<PatternClass> side;  // the V result of an N edge
};

class Solver {
 public:
  CycloFraction solve(const Pattern& start) {
    const PatternClass root(start);
    if (auto hit = lookup(root)) return *hit;

    std::vector<PatternClass> path;
    std::vector<Step> steps;
    std::map<PatternClass, int> position;
    PatternClass cur = root;
    std::optional<CycloFraction> tail_value;
    int cycle_start = -1;
    while (true) {
      if (auto hit = lookup(cur)) {
        tail_value = std::move(*hit);
        break;
      }
      if (auto it = position.find(cur); it != position.end()) {
        cycle_start = it->second;
        break;
      }
      position.emplace(cur, static_cast<int>(path.size()));
      path.push_back(cur);
      steps.push_back(successor(cur.canonical()));
      cur = steps.back().next;
    }

    const int count = static_cast<int>(path.size());
    std::vector<CycloFraction> value(count);
    if (cycle_start >= 0) {
      CycloFraction numerator{{}, {}};
      int sigma = 1;
      int shift = 0;
      for (int i = cycle_start; i < count; ++i) {
        numerator = add(numerator, scaled(steps[i].constant, sigma, shift));
        sigma *= steps[i].sign;
        shift += steps[i].shift;
      }
      if (shift == 0) {
        throw ConsistencyError("successor cycle without a row shift at " +
                               path[cycle_start].canonical().to_string());
      }
      value[cycle_start] = over_one_minus(std::move(numerator), sigma, shift);
      tail_value = value[cycle_start];
      record_recurrences(path, steps, cycle_start);
    }
    for (int i = count - 1; i >= 0; --i) {
      if (i == cycle_start) {
        tail_value = value[i];
        continue;
      }
      value[i] = add(steps[i].constant, scaled(*tail_value, steps[i].sign, steps[i].shift));
      tail_value = value[i];
    }
    for (int i = 0; i < count; ++i) {
      validate(path[i].canonical(), value[i]);
      store(path[i], value[i]);
    }
    return value[0];
  }

  std::optional<Recurrence> recurrence(const PatternClass& cls) {
    std::lock_guard lock(mutex_);
    if (auto it = recurrences_.find(cls); it != recurrences_.end()) return it->second;
    return std::nullopt;
  }

 private:
  std::optional<CycloFraction> lookup(const PatternClass& cls) {
    std::lock_guard lock(mutex_);
    if (auto it = solved_.find(cls); it != solved_.end()) return it->second;
    return std::nullopt;
  }

  void store(const PatternClass& cls, const CycloFraction& f) {
    std::lock_guard lock(mutex_);
    solved_.try_emplace(cls, f);
  }

  Step successor(const Pattern& p) {
    if (is_reducible(p)) {
      auto r = op_R(p);
      CycloFraction seed{IntPoly::monomial(z_pattern(p, 2), 2), {}};
      return {PatternClass(r.pattern), r.sign, 1, std::move(seed), std::nullopt};
    }
    // N at the middle of the leftmost top-row block.
    int start = -1;
    for (auto g : row_groups(p.top(), p.length())) {
      if (g.length == 3 && (start < 0 || g.start < start)) start = g.start;
    }
    if (start < 0) throw ConsistencyError("irreducible pattern without a block: " + p.to_string());
    const int mid = start + 1;
    const PatternClass side(op_V(p, mid));
    return {PatternClass(op_N(p, mid)), -1, 0, solve(side.canonical()), side};
  }

  void validate(const Pattern& p, const CycloFraction& f) {
    const int terms = std::max(2 * den_degree(f) + 4, 8);
    const auto expected = pattern_series(p, terms);
    const auto got = series_expand(to_gf(f), terms + 1);
    if (got != expected) {
      throw ConsistencyError("generating function disagrees with direct terms for " + p.to_string());
    }
  }

  void record_recurrences(const std::vector<PatternClass>& path, const std::vector<Step>& steps,
                          int cycle_start) {
    const int len = static_cast<int>(path.size()) - cycle_start;
    for (int r = 0; r < len; ++r) {
      Recurrence rec;
      int sign = 1;
      int shift = 0;
      for (int k = 0; k < len; ++k) {
        const Step& s = steps[cycle_start + (r + k) % len];
        if (s.side) {
          rec.side_terms.push_back({*s.side, sign, shift});
          rec.valid_from = std::max(rec.valid_from, shift + 2);
        } else {
          rec.valid_from = std::max(rec.valid_from, shift + 3);
        }
        sign *= s.sign;
        shift += s.shift;
      }
      rec.self_sign = sign;
      rec.self_shift = shift;
      rec.valid_from = std::max(rec.valid_from, shift + 2);
      std::lock_guard lock(mutex_);
      recurrences_.try_emplace(path[cycle_start + r], std::move(rec));
    }
  }

  std::mutex mutex_;
  std::map<PatternClass, CycloFraction> solved_;
  std::map<PatternClass, Recurrence> recurrences_;
};

Solver& solver() {
  static Solver instance;
  return instance;
}

void check_pattern_input(const Pattern& p, int bound) {
  if (p.length() > bound || p.length() > kMaxTransferWidth) {
    throw ResourceError("pattern length " + std::to_string(p.length()) + " exceeds bound " +
                        std::to_string(std::min(bound, kMaxTransferWidth)));
  }
  if (!is_proper(p)) throw InputError("generating functions need a proper pattern: " + p.to_string());
}

}  // namespace

RationalGF pattern_gf(const Pattern& p, int bound) {
  check_pattern_input(p, bound);
  return to_gf(solver().solve(p));
}

std::optional<Recurrence> pattern_recurrence(const Pattern& p, int bound) {
  check_pattern_input(p, bound);
  solver().solve(p);
  return solver().recurrence(PatternClass(p));
}

RationalGF cylinder_gf(int n, int bound) {
  if (n < 2 || n % 2 != 0) throw InputError("cylinder generating functions need an even n >= 2");
  if (n > bound || n > kMaxTransferWidth) {
    throw ResourceError("circumference " + std::to_string(n) + " exceeds bound " +
                        std::to_string(std::min(bound, kMaxTransferWidth)));
  }
  static std::mutex mutex;
  static std::map<int, RationalGF> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  const auto head = column_series(n, 1);
  CycloFraction total{IntPoly::constant(head[0]) + IntPoly::monomial(head[1], 1), {}};
  for (const auto& [cls, coeff] : initial_patterns(n).terms) {
    const CycloFraction f = solver().solve(cls.canonical());
    total = add(total, {coeff * f.num, f.den});
  }
  const RationalGF gf = to_gf(total);

  const int order = std::max(gf.den().degree(), gf.num().degree() + 1);
  const int terms = 2 * order + 8;
  const auto fit = fit_recurrence(column_series(n, terms - 1));
  if (fit.status != FitStatus::kFound || *fit.gf != gf) {
    throw ConsistencyError("pattern solution for n = " + std::to_string(n) +
                           " disagrees with the fitted recurrence");
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, gf).first->second;
}

bool check_roots_of_unity(const RationalGF& gf) {
  return factor_cyclotomic(gf.den()).fully_cyclotomic();
}

IntPoly conjectured_denominator(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("conjectured denominators need an even n >= 2");
  const IntPoly one{1};
  auto one_minus = [&](int e) { return one - IntPoly::monomial(1, e); };
  int first;
  int last;
  IntPoly out;
  if (n % 4 == 2) {
    const int c = (n - 2) / 4;
    out = one + IntPoly::monomial(1, 2);
    first = 8 * c - 2;
    last = 2 * c + 4;
  } else {
    const int c = n / 4;
    out = one_minus(2);
    first = 8 * c - 6;
    last = 2 * c + 6;
  }
  // For n = 4 the listed range is empty; its leading factor 1 - t^2 still applies.
  if (first > 0 && first < last) out *= one_minus(first);
  for (int e = first; e >= last; e -= 6) out *= one_minus(e);
  return out;
}

DenominatorReport check_denominator_conjecture(int n, int bound) {
  DenominatorReport report;
  report.n = n;
  report.conjectured = conjectured_denominator(n);
  const RationalGF gf = cylinder_gf(n, bound);
  report.holds = divide_exact(report.conjectured, gf.den()).has_value();
  return report;
}

MultiplicityReport check_multiplicity_conjecture(int n, int bound) {
  MultiplicityReport report;
  report.n = n;
  const RationalGF gf = cylinder_gf(n, bound);
  const auto f = factor_cyclotomic(gf.den());
  report.factors = f.factors;
  for (auto [d, e] : f.factors) report.max_multiplicity = std::max(report.max_multiplicity, e);
  if (!f.fully_cyclotomic()) return report;
  report.holds = n % 4 == 2 ? report.max_multiplicity <= 1 : report.max_multiplicity <= 2;
  if (report.max_multiplicity <= 1) {
    long period = 1;
    for (auto [d, e] : f.factors) period = std::lcm(period, static_cast<long>(d));
    const IntPoly cycle = IntPoly{1} - IntPoly::monomial(1, static_cast<int>(period));
    if (!divide_exact(cycle, gf.den())) {
      throw ConsistencyError("denominator does not divide 1 - t^" + std::to_string(period));
    }
    report.period = period;
  }
  return report;
}

}  // namespace hsq
