#pragma once

// Shared test helpers: random graph generators and independent oracles.

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/graph.hpp"
#include "hsq/necklace.hpp"
#include "hsq/poly.hpp"

namespace hsq::testing {

inline Graph random_graph(std::mt19937_64& rng, int vertices, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<std::size_t>(vertices), edges);
}

/// Signed count of independent sets by plain subset enumeration (<= ~20 vertices).
inline BigInt enumerate_witten(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::uint32_t> adj(n, 0);
  std::uint32_t looped = 0;
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) adj[v] |= 1U << w;
    if (g.has_loop(v)) looped |= 1U << v;
  }
  long total = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (s & looped) continue;
    bool independent = true;
    for (int v = 0; v < n && independent; ++v) {
      if (((s >> v) & 1U) && (adj[v] & s)) independent = false;
    }
    if (independent) total += (__builtin_popcount(s) % 2) ? -1 : 1;
  }
  return BigInt(total);
}

inline std::vector<long> as_ints(const std::vector<BigInt>& values) {
  std::vector<long> out;
  for (const auto& v : values) out.push_back(v.get_si());
  return out;
}

/// Lines "n: numerator / Phi_a(t)Phi_b(t)^e" from the generating-function table.
inline std::map<int, RationalGF> read_gf_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<int, RationalGF> out;
  const std::regex factor(R"(Phi_(\d+)\(t\)(\^(\d+))?)");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const auto slash = line.find(" / ");
    const int n = std::stoi(line.substr(0, colon));
    const IntPoly num = IntPoly::parse(line.substr(colon + 1, slash - colon - 1));
    const std::string den_text = line.substr(slash + 3);
    IntPoly den{1};
    for (std::sregex_iterator it(den_text.begin(), den_text.end(), factor), end; it != end; ++it) {
      const int d = std::stoi((*it)[1]);
      const int e = (*it)[3].matched ? std::stoi((*it)[3]) : 1;
      for (int i = 0; i < e; ++i) den *= cyclotomic(d);
    }
    out.emplace(n, RationalGF(num, den));
  }
  return out;
}

/// Rows "m,v_2,v_3,..." under a header "m,2,3,...": (m, n) -> printed value.
inline std::map<std::pair<int, int>, long> read_value_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);
  std::vector<int> columns;
  {
    std::istringstream header(line);
    std::string cell;
    std::getline(header, cell, ',');
    while (std::getline(header, cell, ',')) columns.push_back(std::stoi(cell));
  }
  std::map<std::pair<int, int>, long> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    const int m = std::stoi(cell);
    for (int n : columns) {
      std::getline(row, cell, ',');
      out[{m, n}] = std::stol(cell);
    }
  }
  return out;
}

/// Lines "n k length^count ..." from the necklace cycle table.
inline std::map<std::pair<int, int>, CycleDecomposition> read_cycle_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::pair<int, int>, CycleDecomposition> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int n = 0, k = 0;
    row >> n >> k;
    CycleDecomposition d;
    std::string entry;
    while (row >> entry) {
      const auto caret = entry.find('^');
      d.cycles[std::stoi(entry.substr(0, caret))] = std::stoi(entry.substr(caret + 1));
    }
    table[{n, k}] = d;
  }
  return table;
}

}  // namespace hsq::testing
