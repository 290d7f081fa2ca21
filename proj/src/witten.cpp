#include "hsq/witten.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "hsq/errors.hpp"
#include "hsq/transfer.hpp"

namespace hsq {

std::string to_string(GridFamily family) {
  switch (family) {
    case GridFamily::kFree:
      return "free";
    case GridFamily::kCylinder:
      return "cylinder";
    case GridFamily::kTorus:
      return "torus";
  }
  return "?";
}

std::optional<GridFamily> parse_family(std::string_view text) {
  if (text == "free") return GridFamily::kFree;
  if (text == "cylinder") return GridFamily::kCylinder;
  if (text == "torus") return GridFamily::kTorus;
  return std::nullopt;
}

namespace {

// Edges of the factor graph on 0..size-1: a path, or a cycle with the
// degenerate conventions (a loop for size 1, one edge for size 2).
std::vector<Edge> factor_edges(int size, bool cyclic) {
  std::vector<Edge> out;
  for (int i = 0; i + 1 < size; ++i) out.emplace_back(i, i + 1);
  if (cyclic) {
    if (size == 1) out.emplace_back(0, 0);
    if (size >= 3) out.emplace_back(size - 1, 0);
  }
  return out;
}

}  // namespace

Graph build_grid(const GridSpec& spec) {
  if (spec.m < 0 || spec.n < 0) throw InputError("grid dimensions must be nonnegative");
  const bool rows_cyclic = spec.family == GridFamily::kTorus;
  const bool cols_cyclic = spec.family != GridFamily::kFree;
  const int m = spec.m;
  const int n = spec.n;
  auto index = [n](int r, int c) { return r * n + c; };

  std::vector<Edge> edges;
  std::vector<GridLabel> labels;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) labels.push_back({r + 1, c});
  }
  // Cartesian product: (r, c) ~ (r', c) when r ~ r', and (r, c) ~ (r, c') when c ~ c'.
  for (auto [a, b] : factor_edges(m, rows_cyclic)) {
    for (int c = 0; c < n; ++c) edges.emplace_back(index(a, c), index(b, c));
  }
  for (auto [a, b] : factor_edges(n, cols_cyclic)) {
    for (int r = 0; r < m; ++r) edges.emplace_back(index(r, a), index(r, b));
  }
  return Graph(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), edges,
               std::move(labels));
}

namespace {

class BruteForce {
 public:
  explicit BruteForce(const Graph& g) : adj_(g.vertex_count(), 0) {
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
      for (int w : g.neighbors(v)) adj_[v] |= bit(w);
      if (!g.has_loop(v)) usable_ |= bit(v);
    }
  }

  // Looped vertices never occur in an independent set, so they are simply dropped.
  BigInt run() { return eval(usable_); }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  BigInt eval(std::uint64_t mask) {
    if (mask == 0) return 1;
    for (auto rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj_[v] & mask) == 0) return 0;  // isolated vertex: Ind is a cone
    }
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    BigInt result;
    const auto first = component_of(mask);
    if (first != mask) {
      result = eval(first) * eval(mask & ~first);
    } else {
      int pivot = -1;
      int best = -1;
      for (auto rest = mask; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(adj_[v] & mask);
        if (d > best) {
          best = d;
          pivot = v;
        }
      }
      result = eval(mask & ~bit(pivot)) - eval(mask & ~(adj_[pivot] | bit(pivot)));
    }
    memo_.emplace(mask, result);
    return result;
  }

  std::uint64_t component_of(std::uint64_t mask) const {
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t grow = 0;
      for (auto rest = frontier; rest != 0; rest &= rest - 1) {
        grow |= adj_[std::countr_zero(rest)];
      }
      grow &= mask & ~seen;
      seen |= grow;
      frontier = grow;
    }
    return seen;
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t usable_ = 0;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace

BigInt witten_brute(const Graph& g) {
  if (g.vertex_count() > static_cast<std::size_t>(kMaxBruteVertices)) {
    throw ResourceError("witten_brute supports at most " + std::to_string(kMaxBruteVertices) +
                        " vertices, got " + std::to_string(g.vertex_count()));
  }
  return BruteForce(g).run();
}

BigInt witten_transfer(const GridSpec& spec) {
  if (spec.m < 0 || spec.n < 0) throw InputError("grid dimensions must be nonnegative");
  switch (spec.family) {
    case GridFamily::kCylinder: {
      if (spec.m == 0 || spec.n == 0) return 1;
      // Too wide a cycle: sweep around it with path rows instead.
      if (spec.n > kMaxTransferWidth && spec.m <= kMaxTransferWidth) {
        return RowTransfer::get(spec.m, false).cyclic_trace(spec.n);
      }
      const auto& kernel = RowTransfer::get(spec.n, true);
      return kernel.series({}, spec.m).back();
    }
    case GridFamily::kFree: {
      // P_m x P_n is symmetric; sweep along the longer side.
      const int width = std::min(spec.m, spec.n);
      const int length = std::max(spec.m, spec.n);
      return RowTransfer::get(width, false).series({}, length).back();
    }
    case GridFamily::kTorus: {
      const int width = std::min(spec.m, spec.n);
      const int length = std::max(spec.m, spec.n);
      if (width == 0) return 1;
      return RowTransfer::get(width, true).cyclic_trace(length);
    }
  }
  return 0;
}

std::vector<BigInt> column_series(int n, int max_m) {
  if (n < 0 || max_m < 0) throw InputError("column_series needs n >= 0 and max_m >= 0");
  return RowTransfer::get(n, true).series({}, max_m);
}

}  // namespace hsq
