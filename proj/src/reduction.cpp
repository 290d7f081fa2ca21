#include "hsq/reduction.hpp"

#include <algorithm>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

int index_of(const Graph& g, int name) {
  auto idx = g.index_of_name(name);
  if (!idx) throw InputError("unknown vertex " + std::to_string(name));
  return *idx;
}

std::vector<int> names_of(const Graph& g, std::span<const int> indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(g.name(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool neighborhood_contained(const Graph& g, int u, int v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<int> isolated_vertex(const Graph& g) {
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (g.degree(v) == 0 && !g.has_loop(v)) return v;
  }
  return std::nullopt;
}

ReductionState remove(const ReductionState& state, RuleKind kind, std::vector<int> witnesses,
                      std::span<const int> drop, int extra_suspensions) {
  ReductionState next;
  next.suspensions = state.suspensions + extra_suspensions;
  next.trace = state.trace;
  next.trace.push_back({kind, std::move(witnesses), names_of(state.graph, drop),
                        next.suspensions});
  next.graph = state.graph.without_vertices(drop);
  return next;
}

// Indices (x, y) completing u-v-x-y-u, or nullopt when the square rule does
// not apply at the adjacent pair (u, v).
std::optional<std::pair<int, int>> square_partners(const Graph& g, int u, int v) {
  if (u == v || !g.adjacent(u, v) || g.has_loop(u) || g.has_loop(v)) return std::nullopt;
  if (g.degree(u) != 2 || g.degree(v) != 2) return std::nullopt;
  auto other = [&](int a, int b) {
    auto nb = g.neighbors(a);
    return nb[0] == b ? nb[1] : nb[0];
  };
  const int y = other(u, v);
  const int x = other(v, u);
  if (x == y || !g.adjacent(x, y)) return std::nullopt;
  return std::pair{x, y};
}

}  // namespace

Graph residue_vertex(const Graph& g, int v) {
  return g.without_vertices(g.closed_neighborhood(index_of(g, v)));
}

Graph residue_edge(const Graph& g, int u, int v) {
  return g.without_vertices(g.closed_neighborhood(index_of(g, u), index_of(g, v)));
}

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::kFold:
      return "fold";
    case RuleKind::kPendantSuspension:
      return "pendant";
    case RuleKind::kSquareSuspension:
      return "square";
  }
  return "?";
}

ReductionState ReductionState::start(Graph g) {
  ReductionState s;
  s.graph = std::move(g);
  return s;
}

ReductionState apply_fold(const ReductionState& state, int u, int v) {
  const Graph& g = state.graph;
  const int iu = index_of(g, u);
  const int iv = index_of(g, v);
  if (iu == iv || g.has_loop(iu) || !neighborhood_contained(g, iu, iv)) {
    throw RuleInapplicable("fold needs N(" + std::to_string(u) + ") within N(" +
                           std::to_string(v) + ")");
  }
  const int drop[] = {iv};
  return remove(state, RuleKind::kFold, {u, v}, drop, 0);
}

ReductionState apply_pendant_suspension(const ReductionState& state, int u, int v) {
  const Graph& g = state.graph;
  const int iu = index_of(g, u);
  const int iv = index_of(g, v);
  if (g.has_loop(iu) || g.degree(iu) != 1 || g.neighbors(iu)[0] != iv) {
    throw RuleInapplicable("pendant suspension needs N(" + std::to_string(u) + ") = {" +
                           std::to_string(v) + "}");
  }
  return remove(state, RuleKind::kPendantSuspension, {u, v}, g.closed_neighborhood(iv), 1);
}

ReductionState apply_square_suspension(const ReductionState& state, int u, int v, int x,
                                       int y) {
  const Graph& g = state.graph;
  const int iu = index_of(g, u);
  const int iv = index_of(g, v);
  const int ix = index_of(g, x);
  const int iy = index_of(g, y);
  auto partners = square_partners(g, iu, iv);
  if (!partners || std::minmax(partners->first, partners->second) != std::minmax(ix, iy)) {
    throw RuleInapplicable("square suspension needs adjacent degree-2 vertices on a 4-cycle");
  }
  const int drop[] = {iu, iv, ix, iy};
  return remove(state, RuleKind::kSquareSuspension, {u, v, x, y}, drop, 1);
}

ReductionState replay(const Graph& original, std::span<const RuleApplication> trace) {
  auto state = ReductionState::start(original);
  for (const auto& step : trace) {
    const auto& w = step.witnesses;
    switch (step.kind) {
      case RuleKind::kFold:
        state = apply_fold(state, w.at(0), w.at(1));
        break;
      case RuleKind::kPendantSuspension:
        state = apply_pendant_suspension(state, w.at(0), w.at(1));
        break;
      case RuleKind::kSquareSuspension:
        state = apply_square_suspension(state, w.at(0), w.at(1), w.at(2), w.at(3));
        break;
    }
  }
  return state;
}

std::optional<Configuration> detect_configuration(const Graph& g) {
  const int count = static_cast<int>(g.vertex_count());
  for (int u = 0; u < count; ++u) {
    if (g.has_loop(u) || g.degree(u) != 1) continue;
    const int v = g.neighbors(u)[0];
    const Graph rest = g.without_vertices(g.closed_neighborhood(v));
    if (auto iso = isolated_vertex(rest)) {
      return Configuration{ConfigurationKind::kPendant, {g.name(u), g.name(v)},
                           rest.name(*iso)};
    }
  }
  for (int u = 0; u < count; ++u) {
    for (int v : g.neighbors(u)) {
      auto partners = square_partners(g, u, v);
      if (!partners) continue;
      const int drop[] = {u, v, partners->first, partners->second};
      const Graph rest = g.without_vertices(drop);
      if (auto iso = isolated_vertex(rest)) {
        return Configuration{
            ConfigurationKind::kSquare,
            {g.name(u), g.name(v), g.name(partners->first), g.name(partners->second)},
            rest.name(*iso)};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<ReductionState> try_fold(const ReductionState& state) {
  const Graph& g = state.graph;
  const int count = static_cast<int>(g.vertex_count());
  for (int u = 0; u < count; ++u) {
    if (g.has_loop(u)) continue;
    for (int v = 0; v < count; ++v) {
      if (v != u && neighborhood_contained(g, u, v)) {
        return apply_fold(state, g.name(u), g.name(v));
      }
    }
  }
  return std::nullopt;
}

std::optional<ReductionState> try_pendant(const ReductionState& state) {
  const Graph& g = state.graph;
  for (int u = 0; u < static_cast<int>(g.vertex_count()); ++u) {
    if (!g.has_loop(u) && g.degree(u) == 1) {
      return apply_pendant_suspension(state, g.name(u), g.name(g.neighbors(u)[0]));
    }
  }
  return std::nullopt;
}

std::optional<ReductionState> try_square(const ReductionState& state) {
  const Graph& g = state.graph;
  for (int u = 0; u < static_cast<int>(g.vertex_count()); ++u) {
    for (int v : g.neighbors(u)) {
      if (auto p = square_partners(g, u, v)) {
        return apply_square_suspension(state, g.name(u), g.name(v), g.name(p->first),
                                       g.name(p->second));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict simplify(const Graph& g) {
  auto state = ReductionState::start(g);
  while (true) {
    if (auto iso = isolated_vertex(state.graph)) {
      const int name = state.graph.name(*iso);
      return {VerdictKind::kContractible, std::move(state), name};
    }
    std::optional<ReductionState> next = try_fold(state);
    if (!next) next = try_pendant(state);
    if (!next) next = try_square(state);
    if (!next) return {VerdictKind::kReduced, std::move(state), std::nullopt};
    state = std::move(*next);
  }
}

nlohmann::json to_json(const RuleApplication& step, const Graph& original) {
  auto describe = [&](const std::vector<int>& names) {
    nlohmann::json arr = nlohmann::json::array();
    for (int nm : names) {
      auto idx = original.index_of_name(nm);
      if (idx && original.has_labels()) {
        arr.push_back(to_string(*original.label(*idx)));
      } else {
        arr.push_back(nm);
      }
    }
    return arr;
  };
  return {{"rule", to_string(step.kind)},
          {"witnesses", describe(step.witnesses)},
          {"removed", describe(step.removed)},
          {"suspensions", step.suspensions}};
}

nlohmann::json to_json(const Verdict& verdict, const Graph& original) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : verdict.state.trace) steps.push_back(to_json(step, original));
  nlohmann::json out = {
      {"schema", 1},
      {"verdict", verdict.kind == VerdictKind::kContractible ? "contractible" : "reduced"},
      {"suspensions", verdict.state.suspensions},
      {"remaining_vertices", verdict.state.graph.vertex_count()},
      {"trace", std::move(steps)}};
  if (verdict.isolated) out["isolated"] = *verdict.isolated;
  return out;
}

}  // namespace hsq
