#include <catch_amalgamated.hpp>

#include <random>

#include "hsq/errors.hpp"
#include "hsq/witten.hpp"
#include "test_support.hpp"

using namespace hsq;

TEST_CASE("grid builder applies the degenerate cycle conventions", "[graph]") {
  auto c4 = build_grid({GridFamily::kCylinder, 1, 4});
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);

  auto cyl22 = build_grid({GridFamily::kCylinder, 2, 2});
  auto free22 = build_grid({GridFamily::kFree, 2, 2});
  CHECK(cyl22 == free22);
  CHECK(cyl22.edge_count() == 4);

  auto c1 = build_grid({GridFamily::kCylinder, 1, 1});
  CHECK(c1.vertex_count() == 1);
  CHECK(c1.has_loop(0));
  CHECK(witten_brute(c1) == 1);

  CHECK(build_grid({GridFamily::kCylinder, 0, 5}).empty());
  CHECK(build_grid({GridFamily::kTorus, 3, 3}).edge_count() == 18);
  CHECK(c4.label(2) == GridLabel{1, 2});
}

TEST_CASE("induced subgraphs keep names and labels", "[graph]") {
  auto g = build_grid({GridFamily::kCylinder, 2, 5});
  const int a = *g.index_of_label({1, 3});
  auto h = g.without_vertices(std::vector<int>{0, 1});
  auto idx = h.index_of_label({1, 3});
  REQUIRE(idx.has_value());
  CHECK(h.name(*idx) == g.name(a));
  CHECK(h.vertex_count() == 8);
}

TEST_CASE("witten_brute small graphs", "[graph][brute]") {
  CHECK(witten_brute(Graph{}) == 1);
  CHECK(witten_brute(path_graph(1)) == 0);
  CHECK(witten_brute(cycle_graph(3)) == -2);
  // P_3 has independent sets {}, {0}, {1}, {2}, {0,2}: 1 - 3 + 1.
  CHECK(witten_brute(path_graph(3)) == -1);
  CHECK(witten_brute(path_graph(5)) == 1);
  CHECK(witten_brute(path_graph(2)) == -1);
  CHECK(witten_brute(cycle_graph(5)) == 1);
}

TEST_CASE("witten_brute agrees with subset enumeration", "[graph][brute][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.3);
    CHECK(witten_brute(g) == testing::enumerate_witten(g));
  }
}

TEST_CASE("witten_transfer matches the brute force on small grids", "[graph][transfer]") {
  for (auto family : {GridFamily::kFree, GridFamily::kCylinder, GridFamily::kTorus}) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        if (m * n > 20) continue;
        INFO(to_string(family) << " m=" << m << " n=" << n);
        CHECK(witten_transfer({family, m, n}) == witten_brute(build_grid({family, m, n})));
      }
    }
  }
}

TEST_CASE("witten_transfer on printed table values", "[graph][transfer]") {
  CHECK(witten_transfer({GridFamily::kCylinder, 4, 6}) == 4);
  CHECK(witten_transfer({GridFamily::kCylinder, 9, 10}) == -11);
  for (int n = 0; n <= 14; ++n) CHECK(witten_transfer({GridFamily::kCylinder, 0, n}) == 1);
}

TEST_CASE("column_series", "[graph][transfer]") {
  CHECK(testing::as_ints(column_series(3, 5)) == std::vector<long>{1, -2, 1, 1, -2, 1});
  CHECK(testing::as_ints(column_series(2, 4)) == std::vector<long>{1, -1, -1, 1, 1});
  for (int n : {5, 7, 11, 13}) {
    for (const auto& z : column_series(n, 30)) CHECK(z == 1);
  }
  for (int n : {3, 9, 15}) {
    auto s = column_series(n, 30);
    for (int m = 0; m <= 30; ++m) CHECK(s[m] == (m % 3 == 1 ? -2 : 1));
  }
}

TEST_CASE("oversized brute-force input is refused", "[graph][brute]") {
  CHECK_THROWS_AS(witten_brute(path_graph(65)), ResourceError);
}

TEST_CASE("wide cylinders sweep around the cycle", "[graph][transfer]") {
  for (int m = 1; m <= 3; ++m) {
    for (int n : {19, 20, 21}) {
      if (m * n > 40) continue;
      INFO("m=" << m << " n=" << n);
      CHECK(witten_transfer({GridFamily::kCylinder, m, n}) == witten_brute(build_grid({GridFamily::kCylinder, m, n})));
    }
  }
  CHECK(witten_transfer({GridFamily::kCylinder, 1, 19}) == witten_brute(cycle_graph(19)));
}
