#include "hsq/checks.hpp"

#include <span>
#include <sstream>

#include "hsq/pattern.hpp"
#include "hsq/reduction.hpp"
#include "hsq/witten.hpp"

namespace hsq {
namespace {

constexpr std::size_t kMaxReportedFailures = 20;

void fail(PropertyReport& report, const std::string& what) {
  if (report.failures.size() < kMaxReportedFailures) report.failures.push_back(what);
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " vertices, edges";
  for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
  return out.str();
}

BigInt signed_index(const ReductionState& s) {
  BigInt z = witten_brute(s.graph);
  return s.suspensions % 2 ? BigInt(-z) : z;
}

// Every pattern of length n satisfying the column constraint.
std::vector<Pattern> all_patterns(int n) {
  std::vector<Pattern> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t bottom = 0; bottom <= full; ++bottom) {
    for (std::uint64_t top = bottom;; top = (top - 1) & bottom) {
      out.emplace_back(n, top, bottom);
      if (top == 0) break;
    }
  }
  return out;
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, int vertices, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<std::size_t>(vertices), edges);
}

PropertyReport check_graph_identities(int graphs, int max_vertices, std::uint64_t seed) {
  PropertyReport report{"graph index identities", 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int trial = 0; trial < graphs; ++trial) {
    const int size = 1 + static_cast<int>(rng() % max_vertices);
    const Graph g = random_graph(rng, size, density(rng));
    const BigInt z = witten_brute(g);
    ++report.cases;
    for (int v = 0; v < size; ++v) {
      const int drop[] = {v};
      if (z != witten_brute(g.without_vertices(drop)) - witten_brute(residue_vertex(g, g.name(v)))) {
        fail(report, "vertex additivity at " + std::to_string(v) + " in " + describe(g));
      }
    }
    for (auto [u, v] : g.edges()) {
      const BigInt split = witten_brute(g.without_edge(u, v)) - witten_brute(residue_edge(g, g.name(u), g.name(v)));
      if (z != split) fail(report, "edge additivity at " + std::to_string(u) + "-" + std::to_string(v) + " in " + describe(g));
    }
    const int other_size = 1 + static_cast<int>(rng() % max_vertices);
    const Graph h = random_graph(rng, other_size, density(rng));
    if (g.vertex_count() + h.vertex_count() <= static_cast<std::size_t>(kMaxBruteVertices) &&
        witten_brute(Graph::disjoint_union(g, h)) != z * witten_brute(h)) {
      fail(report, "multiplicativity for " + describe(g) + " and " + describe(h));
    }
  }
  return report;
}

PropertyReport check_pattern_operations(int max_length, int max_m) {
  PropertyReport report{"pattern operations", 0, {}};
  for (int n = 2; n <= max_length; n += 2) {
    for (const auto& p : all_patterns(n)) {
      if (!is_proper(p)) continue;
      ++report.cases;
      const std::string name = p.to_string();
      const auto base = pattern_series(p, max_m);
      for (int i = 0; i < n; ++i) {
        if (!p.top(i)) continue;
        const auto v = pattern_series(op_V(p, i), max_m);
        const auto nn = pattern_series(op_N(p, i), max_m);
        for (int m = 2; m <= max_m; ++m) {
          if (base[m] != v[m] - nn[m]) fail(report, "V/N identity at column " + std::to_string(i) + ", m=" + std::to_string(m) + " for " + name);
        }
      }
      if (is_reducible(p)) {
        const auto r = op_R(p);
        const auto shifted = pattern_series(r.pattern, max_m);
        for (int m = 3; m <= max_m; ++m) {
          if (base[m] != r.sign * shifted[m - 1]) fail(report, "R shift at m=" + std::to_string(m) + " for " + name);
        }
        if (!is_proper(r.pattern) || mu(r.pattern) != mu(p)) fail(report, "R leaves the proper patterns or changes mu for " + name);
        continue;
      }
      for (const auto& g : row_groups(p.top(), n)) {
        if (g.length != 3) continue;
        const int mid = g.start + 1;
        const Pattern pv = op_V(p, mid);
        const Pattern pn = op_N(p, mid);
        if (!is_proper(pv) || mu(pv) != mu(p) - 1) fail(report, "V at a block middle for " + name);
        if (!is_proper(pn) || mu(pn) != mu(p)) fail(report, "N at a block middle for " + name);
      }
    }
  }
  return report;
}

PropertyReport check_reduction_soundness(int graphs, int max_vertices, std::uint64_t seed) {
  PropertyReport report{"reduction soundness", 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int trial = 0; trial < graphs; ++trial) {
    const int size = 1 + static_cast<int>(rng() % max_vertices);
    const Graph g = random_graph(rng, size, density(rng));
    const BigInt z = witten_brute(g);
    ++report.cases;
    const auto verdict = simplify(g);
    if (verdict.kind == VerdictKind::kContractible && z != 0) fail(report, "contractible verdict with nonzero index for " + describe(g));
    if (detect_configuration(g) && z != 0) fail(report, "configuration with nonzero index for " + describe(g));
    const auto& trace = verdict.state.trace;
    for (std::size_t k = 0; k <= trace.size(); ++k) {
      const std::span<const RuleApplication> prefix(trace.data(), k);
      if (signed_index(replay(g, prefix)) != z) {
        fail(report, "trace prefix " + std::to_string(k) + " changes the index for " + describe(g));
        break;
      }
    }
  }
  return report;
}

}  // namespace hsq
