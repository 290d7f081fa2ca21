#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsq/graph.hpp"

namespace hsq {

// Homotopy-preserving rewriting of graphs. Every function here addresses
// vertices by their stable name (Graph::name), never by dense index, so that
// traces stay meaningful as vertices disappear.

/// G - N[v].
Graph residue_vertex(const Graph& g, int v);
/// G - (N[u] ∪ N[v]); {u, v} need not be an edge.
Graph residue_edge(const Graph& g, int u, int v);

enum class RuleKind { kFold, kPendantSuspension, kSquareSuspension };

std::string to_string(RuleKind kind);

struct RuleApplication {
  RuleKind kind;
  std::vector<int> witnesses;  // fold: (u, v); pendant: (u, v); square: (u, v, x, y)
  std::vector<int> removed;    // names deleted by this step, ascending
  int suspensions = 0;         // running total after the step

  bool operator==(const RuleApplication&) const = default;
};

/// Current graph plus the number of suspensions thrown in so far.
/// Invariant: Z(original) = (-1)^suspensions * Z(graph).
struct ReductionState {
  Graph graph;
  int suspensions = 0;
  std::vector<RuleApplication> trace;

  static ReductionState start(Graph g);
};

/// N(u) ⊆ N(v), u != v, u loop-free: delete v.
ReductionState apply_fold(const ReductionState& state, int u, int v);
/// deg(u) = 1 with N(u) = {v}: delete N[v], one more suspension.
ReductionState apply_pendant_suspension(const ReductionState& state, int u, int v);
/// u ~ v both of degree 2 on the 4-cycle u-v-x-y: delete all four, one more suspension.
ReductionState apply_square_suspension(const ReductionState& state, int u, int v, int x,
                                       int y);

/// Re-applies a trace to `original`.
ReductionState replay(const Graph& original, std::span<const RuleApplication> trace);

/// A single pendant or square suspension that leaves an isolated vertex,
/// which forces Ind(G) to be contractible.
enum class ConfigurationKind { kPendant, kSquare };

struct Configuration {
  ConfigurationKind kind;
  std::vector<int> rule_vertices;  // arguments of the suspension rule
  int isolated = -1;               // name of the vertex left isolated
};

std::optional<Configuration> detect_configuration(const Graph& g);

enum class VerdictKind { kContractible, kReduced };

struct Verdict {
  VerdictKind kind;
  ReductionState state;
  std::optional<int> isolated;  // witness when contractible
};

/// Applies, until nothing changes: isolated-vertex check, fold (lowest u,
/// then lowest v), pendant suspension, square suspension.
Verdict simplify(const Graph& g);

nlohmann::json to_json(const RuleApplication& step, const Graph& original);
nlohmann::json to_json(const Verdict& verdict, const Graph& original);

}  // namespace hsq
