#include "hsq/graph.hpp"

#include <algorithm>
#include <numeric>

#include "hsq/errors.hpp"

namespace hsq {

std::string to_string(const GridLabel& label) {
  return "(" + std::to_string(label.row) + "," + std::to_string(label.col) + ")";
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count), loops_(vertex_count, false), names_(vertex_count) {
  std::iota(names_.begin(), names_.end(), 0);
  const int n = static_cast<int>(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) {
      loops_[u] = true;
    } else {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<GridLabel> labels)
    : Graph(vertex_count, edges) {
  if (!labels.empty() && labels.size() != vertex_count) {
    throw InputError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= static_cast<int>(vertex_count())) {
    throw InputError("unknown vertex " + std::to_string(v));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2 + static_cast<std::size_t>(std::count(loops_.begin(), loops_.end(), true));
}

bool Graph::has_loop(int v) const {
  check_vertex(v);
  return loops_[v];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return loops_[u];
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[v];
}

int Graph::name(int v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<int> Graph::index_of_name(int name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::optional<GridLabel> Graph::label(int v) const {
  check_vertex(v);
  if (labels_.empty()) return std::nullopt;
  return labels_[v];
}

std::optional<int> Graph::index_of_label(GridLabel label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < static_cast<int>(vertex_count()); ++u) {
    if (loops_[u]) out.emplace_back(u, u);
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const int> keep) const {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> new_index(vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(sorted[i]);
    new_index[sorted[i]] = static_cast<int>(i);
  }
  Graph out;
  out.adjacency_.resize(sorted.size());
  out.loops_.resize(sorted.size());
  out.names_.resize(sorted.size());
  if (!labels_.empty()) out.labels_.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const int old = sorted[i];
    out.loops_[i] = loops_[old];
    out.names_[i] = names_[old];
    if (!labels_.empty()) out.labels_[i] = labels_[old];
    for (int w : adjacency_[old]) {
      if (new_index[w] >= 0) out.adjacency_[i].push_back(new_index[w]);
    }
  }
  return out;
}

Graph Graph::without_vertices(std::span<const int> drop) const {
  std::vector<bool> dropped(vertex_count(), false);
  for (int v : drop) {
    check_vertex(v);
    dropped[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < static_cast<int>(vertex_count()); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return induced(keep);
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph out = *this;
  if (u == v) {
    out.loops_[u] = false;
    return out;
  }
  std::erase(out.adjacency_[u], v);
  std::erase(out.adjacency_[v], u);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph out = *this;
  if (u == v) {
    out.loops_[u] = true;
    return out;
  }
  if (!adjacent(u, v)) {
    auto& a = out.adjacency_[u];
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    auto& b = out.adjacency_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  }
  return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  std::vector<int> out(adjacency_[v]);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<int> Graph::closed_neighborhood(int u, int v) const {
  auto a = closed_neighborhood(u);
  auto b = closed_neighborhood(v);
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  const int n = static_cast<int>(vertex_count());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : adjacency_[members[head]]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph out = a;
  const int offset = static_cast<int>(a.vertex_count());
  int name_offset = 0;
  for (int nm : a.names_) name_offset = std::max(name_offset, nm + 1);
  for (std::size_t i = 0; i < b.vertex_count(); ++i) {
    std::vector<int> list;
    for (int w : b.adjacency_[i]) list.push_back(w + offset);
    out.adjacency_.push_back(std::move(list));
    out.loops_.push_back(b.loops_[i]);
    out.names_.push_back(b.names_[i] + name_offset);
  }
  if (a.labels_.empty() || b.labels_.empty()) {
    out.labels_.clear();
  } else {
    out.labels_.insert(out.labels_.end(), b.labels_.begin(), b.labels_.end());
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return adjacency_ == other.adjacency_ && loops_ == other.loops_;
}

Graph path_graph(int n) {
  if (n < 0) throw InputError("negative path length");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph cycle_graph(int n) {
  if (n < 0) throw InputError("negative cycle length");
  if (n <= 2) {
    if (n == 1) {
      std::vector<Edge> loop{{0, 0}};
      return Graph(1, loop);
    }
    return path_graph(n);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace hsq
