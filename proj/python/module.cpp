#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "hsq/errors.hpp"
#include "hsq/genfun.hpp"
#include "hsq/necklace.hpp"
#include "hsq/pattern.hpp"
#include "hsq/reduction.hpp"
#include "hsq/witten.hpp"

namespace py = pybind11;
using namespace hsq;

namespace {

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& value) { return BigInt(py::str(value).cast<std::string>()); }

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::dict to_py(const RationalGF& gf) {
  py::dict out;
  out["numerator"] = to_py(gf.num().coeffs());
  out["denominator"] = to_py(gf.den().coeffs());
  out["text"] = gf.to_string();
  out["factored"] = gf.to_factored_string();
  return out;
}

GridFamily family_of(const std::string& name) {
  auto family = parse_family(name);
  if (!family) throw InputError("unknown family " + name);
  return *family;
}

Necklace necklace_of(int n, const std::vector<std::pair<int, int>>& stones) {
  std::vector<Stone> s;
  for (auto [pos, vec] : stones) s.push_back({pos, vec});
  return Necklace(n, std::move(s));
}

py::dict to_py(const Necklace& nk) {
  py::list stones;
  for (const auto& s : nk.stones()) stones.append(py::make_tuple(s.pos, s.vec));
  py::dict out;
  out["n"] = nk.n();
  out["stones"] = stones;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hardsquares, m) {
  m.doc() = "Witten indices of hard-squares grids, pattern generating functions and necklaces";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<RuleInapplicable>(m, "RuleInapplicable", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def(
      "witten",
      [](const std::string& family, int rows, int cols) { return to_py(witten_transfer({family_of(family), rows, cols})); },
      py::arg("family"), py::arg("m"), py::arg("n"), "Z of P_m x P_n, P_m x C_n or C_m x C_n by row transfer.");
  m.def(
      "witten_brute",
      [](const std::string& family, int rows, int cols) { return to_py(witten_brute(build_grid({family_of(family), rows, cols}))); },
      py::arg("family"), py::arg("m"), py::arg("n"), "Z of the same grid by branching on vertices.");
  m.def(
      "column_series", [](int n, int max_m) { return to_py(column_series(n, max_m)); }, py::arg("n"), py::arg("max_m"),
      "Z(P_m x C_n) for m = 0..max_m.");

  m.def(
      "cylinder_gf", [](int n, int bound) { return to_py(cylinder_gf(n, bound)); }, py::arg("n"),
      py::arg("bound") = kDefaultGenfunBound, "Generating function of Z(P_m x C_n) in m for even n.");
  m.def(
      "pattern_gf", [](const std::string& pattern, int bound) { return to_py(pattern_gf(Pattern::parse(pattern), bound)); },
      py::arg("pattern"), py::arg("bound") = kDefaultGenfunBound, "sum_{m>=2} Z(P; m) t^m for a proper pattern.");
  m.def(
      "fit_recurrence",
      [](const py::sequence& seq) -> py::object {
        std::vector<BigInt> values;
        for (const auto& v : seq) values.push_back(from_py(v));
        const auto fit = fit_recurrence(values);
        if (fit.status != FitStatus::kFound) return py::none();
        return to_py(*fit.gf);
      },
      py::arg("sequence"), "Shortest rational generating function reproducing the sequence, or None.");

  m.def(
      "z_pattern", [](const std::string& pattern, int rows) { return to_py(z_pattern(Pattern::parse(pattern), rows)); },
      py::arg("pattern"), py::arg("m"), "Z of P_m x C_n with the pattern's vertices removed from rows 1 and 2.");
  m.def(
      "is_proper", [](const std::string& pattern) { return is_proper(Pattern::parse(pattern)); }, py::arg("pattern"));
  m.def(
      "mu", [](const std::string& pattern) { return mu(Pattern::parse(pattern)); }, py::arg("pattern"));
  m.def(
      "canonical_pattern", [](const std::string& pattern) { return canonicalize(Pattern::parse(pattern)).to_string(); },
      py::arg("pattern"));
  m.def(
      "enumerate_proper",
      [](int n) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_proper(n)) out.push_back(c.canonical().to_string());
        return out;
      },
      py::arg("n"), "Canonical proper patterns of length n.");

  m.def(
      "simplify_grid",
      [](const std::string& family, int rows, int cols) {
        const Graph g = build_grid({family_of(family), rows, cols});
        return to_json(simplify(g), g).dump();
      },
      py::arg("family"), py::arg("m"), py::arg("n"), "Reduction verdict for a grid graph as JSON text.");

  m.def(
      "is_valid_necklace", [](int n, const std::vector<std::pair<int, int>>& stones) { return is_valid(necklace_of(n, stones)); },
      py::arg("n"), py::arg("stones"), "Stones are (position, vector) pairs.");
  m.def(
      "transform_T", [](int n, const std::vector<std::pair<int, int>>& stones) { return to_py(transform_T(necklace_of(n, stones))); },
      py::arg("n"), py::arg("stones"));
  m.def(
      "transform_T_inverse",
      [](int n, const std::vector<std::pair<int, int>>& stones) { return to_py(transform_T_inverse(necklace_of(n, stones))); },
      py::arg("n"), py::arg("stones"));
  m.def(
      "enumerate_necklaces",
      [](int k, int n, int bound) {
        py::list out;
        for (const auto& c : enumerate_necklaces(k, n, bound)) out.append(to_py(c.canonical()));
        return out;
      },
      py::arg("k"), py::arg("n"), py::arg("bound") = kDefaultNecklaceBound, "Canonical (k, n)-necklaces.");
  m.def(
      "cycle_decomposition", [](int k, int n, int bound) { return cycle_decomposition(k, n, bound).cycles; }, py::arg("k"),
      py::arg("n"), py::arg("bound") = kDefaultNecklaceBound, "Cycle length -> number of cycles of T.");
  m.def("g_value", &g_value, py::arg("i"), py::arg("n"), py::arg("bound") = kDefaultNecklaceBound);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process: (exit code, stdout, stderr).");
}
