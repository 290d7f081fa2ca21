#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hsq/graph.hpp"

namespace hsq {

/// Outcome of one randomized or exhaustive property sweep.
struct PropertyReport {
  std::string name;
  long cases = 0;
  std::vector<std::string> failures;  // first few, with witnesses
  bool passed() const { return failures.empty(); }
};

/// Erdos-Renyi graph on `vertices` vertices.
Graph random_graph(std::mt19937_64& rng, int vertices, double edge_probability);

/// Vertex and edge additivity of Z, and multiplicativity over disjoint union.
PropertyReport check_graph_identities(int graphs, int max_vertices, std::uint64_t seed);
/// V/N identity, the R shift, and closure of proper patterns with the mu
/// bookkeeping, on every proper pattern of length <= max_length, m in [2, max_m].
PropertyReport check_pattern_operations(int max_length, int max_m);
/// Contractible verdicts have Z = 0 and every trace prefix preserves the signed index.
PropertyReport check_reduction_soundness(int graphs, int max_vertices, std::uint64_t seed);

}  // namespace hsq
