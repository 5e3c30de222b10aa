#include "hamloc/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hamloc/error.hpp"
#include "hamloc/generators.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/isomorphism.hpp"

namespace hamloc {
namespace {

FiniteGraph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& es) {
  FiniteGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(index_name(i, n));
  for (auto [a, b] : es) g.add_edge(a, b);
  return g;
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const FiniteGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.a, e.b);
  return es;
}

// Adds one vertex to every graph in `base`, attached to each allowed
// neighbour subset, and keeps one representative per isomorphism class.
std::vector<FiniteGraph> extend(const std::vector<FiniteGraph>& base, std::size_t n, bool leaves_only) {
  std::set<Certificate> seen;
  std::vector<FiniteGraph> out;
  for (const auto& h : base) {
    auto es = edge_pairs(h);
    const auto m = n - 1;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      if (leaves_only && std::popcount(mask) != 1) continue;
      auto es2 = es;
      for (VertexId i = 0; i < m; ++i)
        if (mask >> i & 1u) es2.emplace_back(i, static_cast<VertexId>(m));
      auto g = from_edges(n, es2);
      if (seen.insert(canonical_certificate(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<FiniteGraph> all_trees(std::size_t n) {
  if (n == 0) throw InputError("all_trees needs n >= 1");
  std::vector<FiniteGraph> cur{from_edges(1, {})};
  for (std::size_t k = 2; k <= n; ++k) cur = extend(cur, k, true);
  // Rename with the final width.
  std::vector<FiniteGraph> out;
  for (auto& t : cur) out.push_back(from_edges(n, edge_pairs(t)));
  return out;
}

std::vector<FiniteGraph> all_connected_graphs(std::size_t n) {
  if (n == 0 || n > 9) throw InputError("all_connected_graphs supports 1..9 vertices");
  // Every connected graph has a non-cut vertex, so extending connected
  // graphs by one vertex with a nonempty neighbourhood reaches them all.
  std::vector<FiniteGraph> cur{from_edges(1, {})};
  for (std::size_t k = 2; k <= n; ++k) cur = extend(cur, k, false);
  std::vector<FiniteGraph> out;
  for (auto& t : cur) out.push_back(from_edges(n, edge_pairs(t)));
  return out;
}

namespace {

// Non-crossing chord sets of the polygon 0..n-1: chords (i,j) with j-i >= 2,
// excluding (0,n-1).
void dissections(std::size_t n, std::vector<std::pair<VertexId, VertexId>>& chosen,
                 const std::vector<std::pair<VertexId, VertexId>>& chords, std::size_t idx,
                 std::vector<std::vector<std::pair<VertexId, VertexId>>>& out) {
  if (idx == chords.size()) {
    out.push_back(chosen);
    return;
  }
  dissections(n, chosen, chords, idx + 1, out);
  auto [a, b] = chords[idx];
  for (auto [c, d] : chosen) {
    bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
    if (cross) return;
  }
  chosen.emplace_back(a, b);
  dissections(n, chosen, chords, idx + 1, out);
  chosen.pop_back();
}

std::vector<VertexId> fixed_shuffle(std::size_t n) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rng rng(0x5eed0000 + n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

std::vector<FiniteGraph> all_outerplanar_two_connected(std::size_t n) {
  if (n < 3) throw InputError("outerplanar corpus needs n >= 3");
  std::vector<std::pair<VertexId, VertexId>> chords;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
  std::vector<std::pair<VertexId, VertexId>> chosen;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> sets;
  dissections(n, chosen, chords, 0, sets);
  auto perm = fixed_shuffle(n);
  std::set<Certificate> seen;
  std::vector<FiniteGraph> out;
  for (const auto& s : sets) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (VertexId i = 0; i < n; ++i) es.emplace_back(perm[i], perm[(i + 1) % n]);
    for (auto [a, b] : s) es.emplace_back(perm[a], perm[b]);
    auto g = from_edges(n, es);
    if (seen.insert(canonical_certificate(g)).second) out.push_back(std::move(g));
  }
  return out;
}

FiniteGraph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return from_edges(n, es);
}

FiniteGraph random_two_connected(Rng& rng, std::size_t max_n, double extra_ears) {
  if (max_n < 3) throw InputError("random_two_connected needs max_n >= 3");
  std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
  std::size_t c = std::uniform_int_distribution<std::size_t>(3, n)(rng);
  std::vector<std::pair<VertexId, VertexId>> es;
  std::set<std::pair<VertexId, VertexId>> have;
  auto add = [&](VertexId a, VertexId b) {
    auto k = std::minmax(a, b);
    if (have.insert(k).second) es.push_back(k);
  };
  for (VertexId i = 0; i < c; ++i) add(i, static_cast<VertexId>((i + 1) % c));
  VertexId next = static_cast<VertexId>(c);
  // Open ears: a path of fresh vertices between two distinct old vertices.
  while (next < n) {
    std::uniform_int_distribution<VertexId> pick(0, next - 1);
    VertexId a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, n - next)(rng);
    VertexId prev = a;
    for (std::size_t k = 0; k < len; ++k) {
      add(prev, next);
      prev = next++;
    }
    add(prev, b);
  }
  std::poisson_distribution<int> chords(extra_ears);
  for (int k = chords(rng); k > 0; --k) {
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    VertexId a = pick(rng), b = pick(rng);
    if (a != b) add(a, b);
  }
  auto perm = std::vector<VertexId>(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : es) {
    a = perm[a];
    b = perm[b];
  }
  return from_edges(n, es);
}

FiniteGraph random_outerplanar_two_connected(Rng& rng, std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (VertexId i = 0; i < n; ++i) es.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  std::vector<std::pair<VertexId, VertexId>> chords;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
  std::shuffle(chords.begin(), chords.end(), rng);
  std::bernoulli_distribution keep(0.5);
  std::vector<std::pair<VertexId, VertexId>> chosen;
  for (auto [a, b] : chords) {
    if (!keep(rng)) continue;
    bool ok = true;
    for (auto [c, d] : chosen)
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ok = false;
    if (ok) chosen.emplace_back(a, b);
  }
  es.insert(es.end(), chosen.begin(), chosen.end());
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : es) {
    a = perm[a];
    b = perm[b];
  }
  return from_edges(n, es);
}

std::vector<VertexId> random_connected_subset(Rng& rng, const FiniteGraph& g, std::size_t min_size) {
  if (g.order() < min_size) throw InputError("graph too small for requested subset");
  std::size_t size = std::uniform_int_distribution<std::size_t>(min_size, g.order())(rng);
  std::vector<char> in(g.order(), 0);
  std::vector<VertexId> s{std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(g.order() - 1))(rng)};
  in[s[0]] = 1;
  while (s.size() < size) {
    std::vector<VertexId> frontier;
    for (auto x : s)
      for (auto y : g.neighbors(x))
        if (!in[y]) frontier.push_back(y);
    if (frontier.empty()) break;
    auto y = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
    if (in[y]) continue;
    in[y] = 1;
    s.push_back(y);
  }
  std::sort(s.begin(), s.end());
  return s;
}

MultiGraph random_eulerian_multigraph(Rng& rng, std::size_t max_vertices, bool degrees_2_4) {
  if (max_vertices < 3) throw InputError("random_eulerian_multigraph needs at least 3 vertices");
  for (;;) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_vertices)(rng);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    // A closed walk that visits every vertex, with one vertex visited twice;
    // extra visits are added while degree limits allow.
    std::vector<VertexId> walk(n);
    std::iota(walk.begin(), walk.end(), 0);
    std::shuffle(walk.begin(), walk.end(), rng);
    std::vector<int> visits(n, 1);
    int extra = std::uniform_int_distribution<int>(1, static_cast<int>(n))(rng);
    for (int k = 0; k < extra; ++k) {
      VertexId v = pick(rng);
      if (degrees_2_4 && visits[v] >= 2) continue;
      std::size_t pos = std::uniform_int_distribution<std::size_t>(0, walk.size())(rng);
      walk.insert(walk.begin() + static_cast<long>(pos), v);
      ++visits[v];
    }
    bool ok = true;
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i] == walk[(i + 1) % walk.size()]) ok = false;
    if (!ok || std::find(visits.begin(), visits.end(), 2) == visits.end()) continue;
    MultiGraph m;
    for (std::size_t i = 0; i < n; ++i) m.add_vertex(index_name(i, n));
    for (std::size_t i = 0; i < walk.size(); ++i) m.add_edge(walk[i], walk[(i + 1) % walk.size()]);
    return m;
  }
}

}  // namespace hamloc
