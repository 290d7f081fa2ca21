#include <catch_amalgamated.hpp>

#include <random>

#include "hsq/errors.hpp"
#include "hsq/reduction.hpp"
#include "hsq/witten.hpp"
#include "test_support.hpp"

using namespace hsq;

namespace {

BigInt signed_z(const ReductionState& s) {
  BigInt z = witten_brute(s.graph);
  return s.suspensions % 2 ? BigInt(-z) : z;
}

int at(const Graph& g, int row, int col) {
  auto idx = g.index_of_label({row, col});
  REQUIRE(idx.has_value());
  return g.name(*idx);
}

std::vector<int> names(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) out.push_back(g.name(v));
  return out;
}

}  // namespace

TEST_CASE("residue graphs", "[reduction]") {
  auto r = residue_vertex(cycle_graph(5), 0);
  CHECK(names(r) == std::vector<int>{2, 3});
  CHECK(r.edge_count() == 1);

  auto c4 = residue_vertex(cycle_graph(4), 0);
  CHECK(names(c4) == std::vector<int>{2});

  // {0, 4} is not an edge of C_n; vertex 2 becomes isolated.
  const int n = 11;
  auto e = residue_edge(cycle_graph(n), 0, 4);
  std::vector<int> expected{2};
  for (int v = 6; v <= n - 2; ++v) expected.push_back(v);
  CHECK(names(e) == expected);
  CHECK(e.degree(*e.index_of_name(2)) == 0);

  CHECK_THROWS_AS(residue_vertex(cycle_graph(3), 7), InputError);
}

TEST_CASE("fold rule", "[reduction]") {
  auto p3 = ReductionState::start(path_graph(3));
  auto s = apply_fold(p3, 0, 2);
  CHECK(s.graph.vertex_count() == 2);
  CHECK(s.suspensions == 0);

  std::vector<Edge> star_edges{{0, 1}, {0, 2}, {0, 3}};
  auto star = ReductionState::start(Graph(4, star_edges));
  auto folded = apply_fold(star, 1, 3);
  CHECK(folded.graph.vertex_count() == 3);
  CHECK(folded.graph.edge_count() == 2);

  auto c4 = ReductionState::start(cycle_graph(4));
  auto p = apply_fold(c4, 0, 2);
  CHECK(p.graph.edge_count() == 2);
  CHECK(signed_z(p) == witten_brute(cycle_graph(4)));

  CHECK_THROWS_AS(apply_fold(p3, 0, 1), RuleInapplicable);
}

TEST_CASE("pendant suspension", "[reduction]") {
  auto p2 = apply_pendant_suspension(ReductionState::start(path_graph(2)), 0, 1);
  CHECK(p2.graph.empty());
  CHECK(p2.suspensions == 1);
  CHECK(signed_z(p2) == -1);

  auto p3 = apply_pendant_suspension(ReductionState::start(path_graph(3)), 0, 1);
  CHECK(p3.graph.empty());
  CHECK(signed_z(p3) == witten_brute(path_graph(3)));

  auto p4 = apply_pendant_suspension(ReductionState::start(path_graph(4)), 0, 1);
  CHECK(p4.graph.vertex_count() == 1);
  CHECK(signed_z(p4) == 0);
  CHECK(witten_brute(path_graph(4)) == 0);

  CHECK_THROWS_AS(apply_pendant_suspension(ReductionState::start(path_graph(3)), 1, 0),
                  RuleInapplicable);
}

TEST_CASE("square suspension", "[reduction]") {
  auto c4 = apply_square_suspension(ReductionState::start(cycle_graph(4)), 0, 1, 2, 3);
  CHECK(c4.graph.empty());
  CHECK(signed_z(c4) == -1);

  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}};
  Graph host(5, edges);
  auto s = apply_square_suspension(ReductionState::start(host), 0, 1, 2, 3);
  CHECK(s.graph.vertex_count() == 1);
  CHECK(s.suspensions == 1);
  CHECK(witten_brute(host) == 0);

  // The configuration inside a larger host: host minus the four square vertices.
  auto grid = build_grid({GridFamily::kFree, 2, 5});
  auto state = ReductionState::start(grid);
  auto after = apply_square_suspension(state, at(grid, 1, 0), at(grid, 2, 0), at(grid, 2, 1),
                                       at(grid, 1, 1));
  CHECK(after.graph.vertex_count() == 6);
  CHECK(signed_z(after) == witten_brute(grid));

  CHECK_THROWS_AS(apply_square_suspension(ReductionState::start(cycle_graph(5)), 0, 1, 2, 3),
                  RuleInapplicable);
}

TEST_CASE("configuration detection", "[reduction]") {
  CHECK_FALSE(detect_configuration(cycle_graph(5)).has_value());
  CHECK_FALSE(detect_configuration(cycle_graph(6)).has_value());

  // Residue of {(1,0),(1,5)} in P_2 x C_n: (2,1) and (2,4) have degree one.
  auto grid = build_grid({GridFamily::kCylinder, 2, 11});
  auto residue = residue_edge(grid, at(grid, 1, 0), at(grid, 1, 5));
  auto config = detect_configuration(residue);
  REQUIRE(config.has_value());
  CHECK(config->kind == ConfigurationKind::kPendant);
  CHECK(witten_brute(residue) == 0);

  // Residue of {(3,0),(4,0)} in P_m x C_3 contains a square leaving (1,0) isolated.
  auto c3 = build_grid({GridFamily::kCylinder, 6, 3});
  auto r3 = residue_edge(c3, at(c3, 3, 0), at(c3, 4, 0));
  auto sq = detect_configuration(r3);
  REQUIRE(sq.has_value());
  CHECK(witten_brute(r3) == 0);
}

TEST_CASE("simplify", "[reduction]") {
  auto c6 = simplify(cycle_graph(6));
  CHECK(c6.kind == VerdictKind::kReduced);
  CHECK(c6.state.graph == cycle_graph(6));
  CHECK(c6.state.trace.empty());

  auto p2 = simplify(path_graph(2));
  CHECK(p2.kind == VerdictKind::kReduced);
  CHECK(p2.state.suspensions == 1);
  CHECK(p2.state.graph.empty());

  CHECK(simplify(path_graph(4)).kind == VerdictKind::kContractible);
}

TEST_CASE("insertable-edge residues in P_3 x C_n are contractible", "[reduction][fig3]") {
  for (int n : {12, 14, 17}) {
    auto grid = build_grid({GridFamily::kCylinder, 3, n});

    // Residue of e_1 = {(1,0),(1,9)}, replayed with the hand-written sequence.
    auto residue = residue_edge(grid, at(grid, 1, 0), at(grid, 1, 9));
    auto s = ReductionState::start(residue);
    s = apply_fold(s, at(grid, 2, 1), at(grid, 3, 2));
    s = apply_fold(s, at(grid, 1, 2), at(grid, 2, 3));
    s = apply_pendant_suspension(s, at(grid, 3, 3), at(grid, 3, 4));
    s = apply_fold(s, at(grid, 1, 7), at(grid, 2, 6));
    s = apply_pendant_suspension(s, at(grid, 2, 5), at(grid, 1, 5));
    auto config = detect_configuration(s.graph);
    REQUIRE(config.has_value());
    CHECK(config->kind == ConfigurationKind::kPendant);
    CHECK(witten_brute(residue) == 0);

    auto verdict = simplify(residue);
    CHECK(verdict.kind == VerdictKind::kContractible);
    CHECK(replay(residue, verdict.state.trace).graph == verdict.state.graph);

    // Residue of e_2 = {(2,0),(2,9)}: the component spanning columns 1..8.
    auto residue2 = residue_edge(grid, at(grid, 2, 0), at(grid, 2, 9));
    const int anchor = *residue2.index_of_label({1, 4});
    for (const auto& comp : residue2.components()) {
      if (!std::binary_search(comp.begin(), comp.end(), anchor)) continue;
      auto component = residue2.induced(comp);
      auto t = ReductionState::start(component);
      for (auto [r, c] : {std::pair{1, 2}, {1, 7}, {3, 2}, {3, 7}}) {
        const int v = at(component, r, c);
        const int idx = *t.graph.index_of_name(v);
        int pendant = -1;
        for (int w : t.graph.neighbors(idx)) {
          if (t.graph.degree(w) == 1) pendant = t.graph.name(w);
        }
        REQUIRE(pendant >= 0);
        t = apply_pendant_suspension(t, pendant, v);
      }
      CHECK(detect_configuration(t.graph).has_value());
      CHECK(simplify(component).kind == VerdictKind::kContractible);
      CHECK(witten_brute(component) == 0);
    }
  }
}

TEST_CASE("certificate soundness on random graphs", "[reduction][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 16);
    auto g = testing::random_graph(rng, size, 0.15 + 0.3 * (trial % 3) / 2.0);
    const BigInt z = witten_brute(g);

    auto verdict = simplify(g);
    if (verdict.kind == VerdictKind::kContractible) CHECK(z == 0);
    CHECK(signed_z(verdict.state) == z);
    // Every prefix of the trace is a reachable state.
    for (std::size_t k = 0; k <= verdict.state.trace.size(); ++k) {
      std::span<const RuleApplication> prefix(verdict.state.trace.data(), k);
      CHECK(signed_z(replay(g, prefix)) == z);
    }
    auto again = simplify(g);
    CHECK(again.state.trace == verdict.state.trace);

    if (auto config = detect_configuration(g)) CHECK(z == 0);

    // Consequences on every vertex: additivity, and removability
    // whenever the residue has vanishing index.
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
      const int drop[] = {v};
      const BigInt without = witten_brute(g.without_vertices(drop));
      const BigInt residue = witten_brute(residue_vertex(g, g.name(v)));
      CHECK(z == without - residue);
      if (residue == 0) CHECK(z == without);
    }
  }
}
