#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hsq {

/// (row, column) coordinate of a grid vertex. Rows are 1-based, columns 0-based.
struct GridLabel {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridLabel&) const = default;
};

std::string to_string(const GridLabel& label);

using Edge = std::pair<int, int>;

/// Finite undirected graph with optional self-loops.
///
/// Vertices are indexed 0..vertex_count()-1. Every vertex also carries a
/// stable integer name and, for grid-derived graphs, a GridLabel; both
/// survive induced-subgraph and deletion operations unchanged, while the
/// dense index is renumbered.
///
/// A looped vertex can never be part of an independent set.
class Graph {
 public:
  Graph() = default;

  /// Vertices are named 0..vertex_count-1. Duplicate edges are merged.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<GridLabel> labels);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;  // loops count as edges
  bool empty() const { return adjacency_.empty(); }

  bool has_loop(int v) const;
  bool adjacent(int u, int v) const;
  /// Neighbours other than v itself, ascending.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int name(int v) const;
  std::optional<int> index_of_name(int name) const;
  bool has_labels() const { return !labels_.empty(); }
  std::optional<GridLabel> label(int v) const;
  std::optional<int> index_of_label(GridLabel label) const;

  /// All edges (u <= v), loops included as (v, v), sorted.
  std::vector<Edge> edges() const;

  Graph induced(std::span<const int> keep) const;
  Graph without_vertices(std::span<const int> drop) const;
  Graph without_edge(int u, int v) const;
  Graph with_edge(int u, int v) const;

  /// Closed neighbourhood N[v] (sorted), or N[u] ∪ N[v] for a pair.
  std::vector<int> closed_neighborhood(int v) const;
  std::vector<int> closed_neighborhood(int u, int v) const;

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;

  static Graph disjoint_union(const Graph& a, const Graph& b);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adjacency_;
  std::vector<bool> loops_;
  std::vector<int> names_;
  std::vector<GridLabel> labels_;
};

/// P_n with vertices 0..n-1.
Graph path_graph(int n);
/// C_n with the degenerate conventions C_2 = P_2, C_1 = looped vertex, C_0 = empty.
Graph cycle_graph(int n);

}  // namespace hsq
