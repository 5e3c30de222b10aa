#pragma once

// Brute-force reference implementations used only by tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hamloc/graph.hpp"

namespace oracle {

using hamloc::FiniteGraph;
using hamloc::VertexId;

inline std::vector<std::vector<int>> all_pairs(const FiniteGraph& g) {
  const int n = static_cast<int>(g.order());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Spanning cycles as sets of vertex pairs, by permutation.
inline std::set<std::set<std::pair<VertexId, VertexId>>> hamilton_cycles(const FiniteGraph& g) {
  std::set<std::set<std::pair<VertexId, VertexId>>> out;
  const auto n = g.order();
  if (n < 3) return out;
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    std::set<std::pair<VertexId, VertexId>> es;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto a = p[i], b = p[(i + 1) % n];
      ok = g.adjacent(a, b);
      es.insert(std::minmax(a, b));
    }
    if (ok) out.insert(es);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

inline std::size_t hamilton_path_count(const FiniteGraph& g) {
  const auto n = g.order();
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    if (n > 1 && p.front() > p.back()) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool connected_without(const FiniteGraph& g, std::vector<char> dead) {
  std::vector<VertexId> stack;
  std::size_t alive = 0, seen = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!dead[v]) {
      ++alive;
      if (stack.empty()) {
        stack.push_back(v);
        dead[v] = 1;
        ++seen;
      }
    }
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : g.neighbors(x))
      if (!dead[y]) {
        dead[y] = 1;
        ++seen;
        stack.push_back(y);
      }
  }
  return seen == alive;
}

}  // namespace oracle
