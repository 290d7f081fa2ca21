#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/graph.hpp"

namespace hsq {

enum class GridFamily { kFree, kCylinder, kTorus };

std::string to_string(GridFamily family);
std::optional<GridFamily> parse_family(std::string_view text);

/// P_m x P_n, P_m x C_n or C_m x C_n. Row index runs over the first factor.
struct GridSpec {
  GridFamily family = GridFamily::kCylinder;
  int m = 0;
  int n = 0;
};

/// Product graph with vertices labelled (row 1..m, column 0..n-1).
/// Cyclic factors follow C_2 = P_2, C_1 = looped vertex, C_0 = empty.
Graph build_grid(const GridSpec& spec);

/// Largest graph witten_brute accepts.
inline constexpr int kMaxBruteVertices = 64;

/// Z(G) = 1 - chi(Ind(G)), i.e. the signed count of independent sets
/// sum_S (-1)^{|S|}, by component splitting and pivoting on a maximum-degree
/// vertex with Z(G) = Z(G - v) - Z(G - N[v]).
BigInt witten_brute(const Graph& g);

/// Same value as witten_brute(build_grid(spec)), by a row transfer recursion.
BigInt witten_transfer(const GridSpec& spec);

/// Z(P_m x C_n) for m = 0..max_m.
std::vector<BigInt> column_series(int n, int max_m);

}  // namespace hsq
