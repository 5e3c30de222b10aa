#include "hamloc/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hamloc/error.hpp"

namespace hamloc {

std::vector<int> bfs_distances(const FiniteGraph& g, VertexId s) {
  std::vector<int> d(g.order(), kUnreached);
  std::deque<VertexId> q{s};
  d[s] = 0;
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    for (auto y : g.neighbors(x))
      if (d[y] == kUnreached) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

std::vector<int> component_labels(const FiniteGraph& g, const std::vector<char>& alive) {
  std::vector<int> lab(g.order(), -1);
  auto ok = [&](VertexId v) { return alive.empty() || alive[v]; };
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (!ok(s) || lab[s] != -1) continue;
    lab[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : g.neighbors(x))
        if (ok(y) && lab[y] == -1) {
          lab[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return lab;
}

int component_count(const std::vector<int>& labels) {
  int m = -1;
  for (int l : labels) m = std::max(m, l);
  return m + 1;
}

bool is_connected(const FiniteGraph& g) {
  return g.order() == 0 || component_count(component_labels(g)) == 1;
}

bool is_connected_subset(const FiniteGraph& g, const std::vector<VertexId>& s) {
  if (s.empty()) return false;
  std::vector<char> alive(g.order(), 0);
  for (auto v : s) alive[v] = 1;
  return component_count(component_labels(g, alive)) == 1;
}

FiniteGraph kth_power(const FiniteGraph& g, int k) {
  if (k < 1) throw InputError("kth_power needs k >= 1");
  FiniteGraph h;
  for (VertexId v = 0; v < g.order(); ++v) h.add_vertex(g.name(v));
  for (const auto& e : g.edges()) h.add_edge(e.a, e.b);
  if (k == 1) return h;
  for (VertexId v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    for (VertexId w = v + 1; w < g.order(); ++w)
      if (d[w] > 1 && d[w] <= k) h.add_edge(v, w);
  }
  return h;
}

bool is_two_connected(const FiniteGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  std::vector<char> alive(g.order(), 1);
  for (VertexId v = 0; v < g.order(); ++v) {
    alive[v] = 0;
    bool ok = component_count(component_labels(g, alive)) == 1;
    alive[v] = 1;
    if (!ok) return false;
  }
  return true;
}

EdgeSet cut_edges(const FiniteGraph& g, const std::vector<VertexId>& s) {
  std::vector<char> in(g.order(), 0);
  for (auto v : s) in[v] = 1;
  EdgeSet out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (in[g.edge(e).a] != in[g.edge(e).b]) out.push_back(e);
  return out;
}

bool is_even_cut_parity(const FiniteGraph& g, const EdgeSet& d) {
  std::vector<int> deg(g.order(), 0);
  for (auto e : d) {
    ++deg[g.edge(e).a];
    ++deg[g.edge(e).b];
  }
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x % 2 == 0; });
}

bool is_even_cut_parity_bruteforce(const FiniteGraph& g, const EdgeSet& d) {
  auto n = g.order();
  if (n > 20) throw InputError("cut enumeration limited to 20 vertices");
  if (n == 0) return true;
  // Subsets containing vertex 0 cover every cut once.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::uint32_t s = (mask << 1) | 1u;
    int cross = 0;
    for (auto e : d) cross += ((s >> g.edge(e).a) & 1u) != ((s >> g.edge(e).b) & 1u);
    if (cross % 2) return false;
  }
  return true;
}

FiniteGraph contract_subgraph(const FiniteGraph& g, const std::vector<VertexId>& h,
                              std::string merged) {
  if (!is_connected_subset(g, h)) throw InputError("contract_subgraph: h must be nonempty and connected");
  std::vector<char> in(g.order(), 0);
  for (auto v : h) in[v] = 1;
  while (g.find(merged)) merged += "'";
  FiniteGraph out;
  std::vector<VertexId> map(g.order());
  VertexId z = UINT32_MAX;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (in[v]) {
      if (z == UINT32_MAX) z = out.add_vertex(merged);
      map[v] = z;
    } else {
      map[v] = out.add_vertex(g.name(v));
    }
  }
  for (const auto& e : g.edges())
    if (map[e.a] != map[e.b]) out.ensure_edge(map[e.a], map[e.b]);
  return out;
}

bool is_spanning_cycle(const FiniteGraph& g, const EdgeSet& d) {
  if (g.order() < 3 || d.size() != g.order()) return false;
  FiniteGraph c;
  for (VertexId v = 0; v < g.order(); ++v) c.add_vertex(g.name(v));
  for (auto e : d) {
    if (e >= g.size()) return false;
    if (c.adjacent(g.edge(e).a, g.edge(e).b)) return false;
    c.add_edge(g.edge(e).a, g.edge(e).b);
  }
  for (VertexId v = 0; v < c.order(); ++v)
    if (c.degree(v) != 2) return false;
  return is_connected(c);
}

bool is_eulerian(const MultiGraph& m) {
  std::vector<int> lab(m.order(), -1);
  int comps = 0;
  for (VertexId s = 0; s < m.order(); ++s) {
    if (m.degree(s) % 2) return false;
    if (m.degree(s) == 0 || lab[s] != -1) continue;
    if (++comps > 1) return false;
    std::vector<VertexId> stack{s};
    lab[s] = 0;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto p : m.incident(x)) {
        auto y = m.other(p, x);
        if (lab[y] == -1) {
          lab[y] = 0;
          stack.push_back(y);
        }
      }
    }
  }
  return true;
}

namespace {

std::string fresh_name(const MultiGraph& m, const std::string& base) {
  std::string s = base;
  while (m.find(s)) s += "'";
  return s;
}

}  // namespace

std::vector<VSplitResult> eulerian_v_splits(const MultiGraph& m, VertexId v) {
  if (!is_eulerian(m)) throw InputError("eulerian_v_splits: multigraph is not Eulerian");
  if (m.degree(v) != 4) throw InputError("eulerian_v_splits: vertex degree must be 4");
  std::vector<std::int64_t> inc;
  for (auto p : m.incident(v)) inc.push_back(m.edges()[p].id);
  std::sort(inc.begin(), inc.end());
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  auto n1 = fresh_name(m, m.name(v) + "/1");
  auto n2 = fresh_name(m, m.name(v) + "/2");
  std::vector<VSplitResult> out;
  for (const auto& pr : pairings) {
    VSplitResult r;
    r.v1 = n1;
    r.v2 = n2;
    r.e1 = {inc[pr[0]], inc[pr[1]]};
    r.e2 = {inc[pr[2]], inc[pr[3]]};
    std::vector<VertexId> map(m.order());
    for (VertexId x = 0; x < m.order(); ++x)
      if (x != v) map[x] = r.graph.add_vertex(m.name(x));
    auto a1 = r.graph.add_vertex(n1);
    auto a2 = r.graph.add_vertex(n2);
    for (const auto& e : m.edges()) {
      auto end = [&](VertexId x) {
        if (x != v) return map[x];
        return (e.id == r.e1[0] || e.id == r.e1[1]) ? a1 : a2;
      };
      r.graph.add_edge_with_id(e.id, end(e.a), end(e.b));
    }
    if (is_eulerian(r.graph)) out.push_back(std::move(r));
  }
  return out;
}

MultiGraph identify_vertices(const MultiGraph& m, const std::string& v1, const std::string& v2,
                             const std::string& name) {
  auto a = m.id(v1), b = m.id(v2);
  MultiGraph out;
  std::vector<VertexId> map(m.order());
  VertexId z = UINT32_MAX;
  for (VertexId x = 0; x < m.order(); ++x) {
    if (x == a || x == b) {
      if (z == UINT32_MAX) z = out.add_vertex(name);
      map[x] = z;
    } else {
      map[x] = out.add_vertex(m.name(x));
    }
  }
  for (const auto& e : m.edges()) out.add_edge_with_id(e.id, map[e.a], map[e.b]);
  return out;
}

bool same_multigraph(const MultiGraph& a, const MultiGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (VertexId v = 0; v < a.order(); ++v)
    if (!b.find(a.name(v))) return false;
  for (const auto& e : a.edges()) {
    auto p = b.position(e.id);
    if (!p) return false;
    const auto& f = b.edges()[*p];
    auto x = std::minmax(a.name(e.a), a.name(e.b));
    auto y = std::minmax(b.name(f.a), b.name(f.b));
    if (x != y) return false;
  }
  return true;
}

}  // namespace hamloc
