#include "hamloc/lazy.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <memory>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hamloc/error.hpp"
#include "hamloc/flow.hpp"

namespace hamloc {

namespace {

void check_radius(int r, const ExploreBudget& budget) {
  if (r < 0) throw InputError("radius must be nonnegative");
  if (r > budget.max_radius) throw BudgetError("radius " + std::to_string(r) + " exceeds the radius budget");
}

void count_vertex(std::size_t n, const ExploreBudget& budget, const char* what) {
  if (n > budget.max_vertices) throw BudgetError(std::string(what) + " exceeded the vertex budget");
}

// BFS from root limited by distance; returns vertices and distances.
std::vector<std::pair<std::string, int>> bfs_ball(const LazyGraph& lg, int r, const ExploreBudget& budget) {
  check_radius(r, budget);
  std::vector<std::pair<std::string, int>> order{{lg.root(), 0}};
  std::unordered_set<std::string> seen{lg.root()};
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto [v, d] = order[k];
    if (d == r) continue;
    for (auto& x : lg.neighbors(v))
      if (seen.insert(x).second) {
        order.emplace_back(x, d + 1);
        count_vertex(order.size(), budget, "ball");
      }
  }
  return order;
}

struct UnionFind {
  std::vector<std::size_t> p;
  std::size_t add() {
    p.push_back(p.size());
    return p.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

struct ComponentParts {
  std::set<std::string> fingers;
  std::set<std::string> contacts;
  std::size_t cut = 0;
};

std::vector<DeepComponent> assemble(std::map<std::string, ComponentParts>& groups, int r, RegionKind kind) {
  std::vector<DeepComponent> out;
  for (auto& [key, g] : groups) {
    DeepComponent c;
    c.radius = r;
    c.region = kind;
    c.fingers.assign(g.fingers.begin(), g.fingers.end());
    c.contacts.assign(g.contacts.begin(), g.contacts.end());
    c.cut_edges = g.cut;
    c.representative = c.contacts.front();
    if (kind == RegionKind::Level) c.key = key;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const DeepComponent& a, const DeepComponent& b) { return a.representative < b.representative; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_ladder(const std::string& v) {
  auto bad = [&] { return InputError("not a double ladder vertex: " + v); };
  if (v.size() < 7 || v.compare(0, 2, "L:") != 0) throw bad();
  auto colon = v.find(':', 2);
  if (colon == std::string::npos) throw bad();
  std::int64_t i = 0;
  auto [ptr, ec] = std::from_chars(v.data() + 2, v.data() + colon, i);
  if (ec != std::errc() || ptr != v.data() + colon) throw bad();
  auto side = v.substr(colon + 1);
  if (side != "top" && side != "bot") throw bad();
  return {i, side == "top" ? 1 : 0};
}

}  // namespace

RegionKind parse_region(const std::string& s) {
  if (s == "level") return RegionKind::Level;
  if (s == "ball") return RegionKind::Ball;
  throw InputError("unknown region kind: " + s);
}

std::string region_name(RegionKind k) { return k == RegionKind::Level ? "level" : "ball"; }

BallView ball(const LazyGraph& lg, int r, const ExploreBudget& budget) {
  auto order = bfs_ball(lg, r, budget);
  BallView b;
  b.radius = r;
  for (auto& [v, d] : order) {
    b.graph.add_vertex(v);
    if (d == r) b.boundary.push_back(v);
  }
  for (VertexId a = 0; a < b.graph.order(); ++a)
    for (auto& x : lg.neighbors(b.graph.name(a))) {
      auto y = b.graph.find(x);
      if (y && *y > a) b.graph.add_edge(a, *y);
    }
  return b;
}

std::vector<std::string> region_vertices(const LazyGraph& lg, int r, RegionKind kind, const ExploreBudget& budget) {
  std::vector<std::string> out;
  if (kind == RegionKind::Ball) {
    for (auto& [v, d] : bfs_ball(lg, r, budget)) out.push_back(v);
    return out;
  }
  if (!lg.hint()) throw InputError("graph " + lg.name() + " has no level structure; use ball regions");
  check_radius(r, budget);
  const auto& level = lg.hint()->level;
  if (level(lg.root()) > r) throw InputError("root lies outside the level region");
  std::unordered_set<std::string> seen{lg.root()};
  out.push_back(lg.root());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto& x : lg.neighbors(out[k]))
      if (level(x) <= r && seen.insert(x).second) {
        out.push_back(x);
        count_vertex(out.size(), budget, "level region");
      }
  return out;
}

std::vector<DeepComponent> deep_components(const LazyGraph& lg, int r, RegionKind kind, const ExploreBudget& budget) {
  auto region = region_vertices(lg, r, kind, budget);
  std::unordered_set<std::string> in_region(region.begin(), region.end());
  std::map<std::string, ComponentParts> groups;

  if (kind == RegionKind::Level) {
    const auto& key = lg.hint()->component;
    for (auto& a : region)
      for (auto& b : lg.neighbors(a)) {
        if (in_region.count(b)) continue;
        auto& g = groups[key(b, r)];
        g.fingers.insert(a);
        g.contacts.insert(b);
        ++g.cut;
      }
    return assemble(groups, r, kind);
  }

  // Multi-source BFS from the contacts, merging trees that meet; a class is
  // deep when it still has unexplored vertices at the depth budget.
  UnionFind uf;
  std::unordered_map<std::string, std::pair<std::size_t, int>> label;  // vertex -> (class, depth)
  std::vector<std::string> queue;
  std::vector<std::tuple<std::string, std::string>> cut;
  for (auto& a : region)
    for (auto& b : lg.neighbors(a)) {
      if (in_region.count(b)) continue;
      cut.emplace_back(a, b);
      if (!label.count(b)) {
        label[b] = {uf.add(), 1};
        queue.push_back(b);
      }
    }
  std::vector<std::size_t> growing_marks;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto x = queue[k];
    auto [cx, dx] = label[x];
    for (auto& y : lg.neighbors(x)) {
      if (in_region.count(y)) continue;
      auto it = label.find(y);
      if (it != label.end()) {
        uf.unite(cx, it->second.first);
      } else if (dx < budget.depth) {
        label[y] = {cx, dx + 1};
        queue.push_back(y);
        count_vertex(queue.size(), budget, "component exploration");
      } else {
        growing_marks.push_back(cx);
      }
    }
  }
  std::set<std::size_t> growing;
  for (auto c : growing_marks) growing.insert(uf.find(c));
  for (auto& [a, b] : cut) {
    auto root = uf.find(label[b].first);
    if (!growing.count(root)) continue;
    auto& g = groups[std::to_string(root)];
    g.fingers.insert(a);
    g.contacts.insert(b);
    ++g.cut;
  }
  return assemble(groups, r, kind);
}

std::vector<int> end_nesting(const LazyGraph& lg, int r1, int r2, RegionKind kind, const ExploreBudget& budget) {
  if (r1 >= r2) throw InputError("end nesting needs r1 < r2");
  auto outer = deep_components(lg, r1, kind, budget);
  auto inner = deep_components(lg, r2, kind, budget);
  std::vector<int> map;
  if (kind == RegionKind::Level) {
    const auto& key = lg.hint()->component;
    for (auto& c : inner) {
      auto k = key(c.representative, r1);
      int hit = -1;
      for (auto& o : outer)
        if (key(o.representative, r1) == k) hit = o.id;
      if (hit < 0) throw InternalError("deep component without an enclosing component");
      map.push_back(hit);
    }
    return map;
  }
  auto region = region_vertices(lg, r1, kind, budget);
  std::unordered_set<std::string> in_region(region.begin(), region.end());
  std::unordered_map<std::string, int> contact_of;
  for (auto& o : outer)
    for (auto& x : o.contacts) contact_of[x] = o.id;
  for (auto& c : inner) {
    int hit = -1;
    std::vector<std::string> q{c.representative};
    std::unordered_set<std::string> seen{c.representative};
    for (std::size_t k = 0; k < q.size() && hit < 0; ++k) {
      if (auto it = contact_of.find(q[k]); it != contact_of.end()) {
        hit = it->second;
        break;
      }
      for (auto& y : lg.neighbors(q[k]))
        if (!in_region.count(y) && seen.insert(y).second) {
          q.push_back(y);
          count_vertex(q.size(), budget, "end nesting");
        }
    }
    if (hit < 0) throw BudgetError("could not place a deep component inside a shallower one");
    map.push_back(hit);
  }
  return map;
}

DegreeBound end_degree_bound(const LazyGraph& lg, const DeepComponent& comp, DegreeMode mode,
                             const ExploreBudget& budget) {
  auto region = region_vertices(lg, comp.radius, comp.region, budget);
  std::unordered_set<std::string> in_region(region.begin(), region.end());
  std::unordered_map<std::string, int> depth;
  std::vector<std::string> order;
  for (auto& c : comp.contacts) {
    depth[c] = 1;
    order.push_back(c);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (depth[order[k]] >= budget.depth) continue;
    for (auto& y : lg.neighbors(order[k]))
      if (!in_region.count(y) && !depth.count(y)) {
        depth[y] = depth[order[k]] + 1;
        order.push_back(y);
        count_vertex(order.size(), budget, "end degree exploration");
      }
  }
  std::unordered_map<std::string, std::size_t> idx;
  std::vector<std::string> nodes(comp.fingers.begin(), comp.fingers.end());
  nodes.insert(nodes.end(), order.begin(), order.end());
  for (std::size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = i;
  const std::size_t n = nodes.size();
  const bool split = mode == DegreeMode::Vertex;
  MaxFlow f(split ? 2 * n + 2 : n + 2);
  const std::size_t S = f.size() - 2, T = f.size() - 1;
  auto in = [&](std::size_t i) { return i; };
  auto out = [&](std::size_t i) { return split ? n + i : i; };
  if (split)
    for (std::size_t i = 0; i < n; ++i) f.add_edge(in(i), out(i), 1);
  for (std::size_t i = 0; i < comp.fingers.size(); ++i) f.add_edge(S, in(i), kInfCap);
  const int max_depth = budget.depth;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = nodes[i];
    const bool finger = i < comp.fingers.size();
    if (!finger && depth[x] == max_depth) f.add_edge(out(i), T, kInfCap);
    for (auto& y : lg.neighbors(x)) {
      auto it = idx.find(y);
      if (it == idx.end() || it->second <= i) continue;
      const std::size_t j = it->second;
      if (finger && j < comp.fingers.size()) continue;
      if (split) {
        f.add_edge(out(i), in(j), kInfCap);
        f.add_edge(out(j), in(i), kInfCap);
      } else {
        f.add_edge(i, j, 1, 1);
      }
    }
  }
  DegreeBound b;
  b.lower = f.run(S, T);
  b.upper = static_cast<std::int64_t>(split ? comp.fingers.size() : comp.cut_edges);
  return b;
}

Json ball_json(const BallView& b) {
  Json j = to_json(b.graph);
  j["radius"] = b.radius;
  j["boundary"] = b.boundary;
  return j;
}

Json end_report_json(const LazyGraph& lg, int r, RegionKind kind, const ExploreBudget& budget) {
  Json j;
  j["graph"] = lg.name();
  j["radius"] = r;
  j["region"] = region_name(kind);
  j["budget"] = {{"max_vertices", budget.max_vertices}, {"max_radius", budget.max_radius}, {"depth", budget.depth}};
  Json comps = Json::array();
  for (auto& c : deep_components(lg, r, kind, budget)) {
    auto v = end_degree_bound(lg, c, DegreeMode::Vertex, budget);
    auto e = end_degree_bound(lg, c, DegreeMode::Edge, budget);
    comps.push_back({{"id", c.id},
                     {"representative", c.representative},
                     {"fingers", c.fingers},
                     {"cut_edges", c.cut_edges},
                     {"degree_bounds", {{"vertex", {v.lower, v.upper}}, {"edge", {e.lower, e.upper}}}}});
  }
  j["components"] = comps;
  return j;
}

std::string ladder_name(std::int64_t i, bool top) {
  return "L:" + std::to_string(i) + (top ? ":top" : ":bot");
}

LazyGraph double_ladder() {
  auto fn = [](const std::string& v) {
    auto [i, top] = parse_ladder(v);
    return std::vector<std::string>{ladder_name(i - 1, top), ladder_name(i + 1, top), ladder_name(i, !top)};
  };
  LevelHint hint;
  hint.level = [](const std::string& v) {
    auto i = parse_ladder(v).first;
    return static_cast<int>(std::min<std::int64_t>(i < 0 ? -i : i, 1 << 30));
  };
  hint.component = [](const std::string& v, int) { return std::string(parse_ladder(v).first > 0 ? "+" : "-"); };
  return LazyGraph("double-ladder", ladder_name(0, true), fn, hint);
}

LazyGraph lazy_power(const LazyGraph& lg, int k) {
  if (k < 1) throw InputError("power must be at least 1");
  if (k == 1) return lg;
  auto fn = [lg, k](const std::string& v) {
    std::vector<std::pair<std::string, int>> order{{v, 0}};
    std::unordered_set<std::string> seen{v};
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [x, d] = order[i];
      if (d == k) continue;
      for (auto& y : lg.neighbors(x))
        if (seen.insert(y).second) order.emplace_back(y, d + 1);
    }
    std::vector<std::string> out;
    for (std::size_t i = 1; i < order.size(); ++i) out.push_back(order[i].first);
    return out;
  };
  return LazyGraph(lg.name() + "^" + std::to_string(k), lg.root(), fn);
}

LazyGraph lazy_from_finite(const FiniteGraph& g, const std::string& root) {
  auto shared = std::make_shared<const FiniteGraph>(g);
  if (!g.find(root)) throw InputError("root " + root + " not in graph");
  auto fn = [shared](const std::string& v) {
    auto id = shared->find(v);
    if (!id) throw InputError("vertex " + v + " not in graph");
    std::vector<std::string> out;
    for (auto x : shared->neighbors(*id)) out.push_back(shared->name(x));
    std::sort(out.begin(), out.end());
    return out;
  };
  return LazyGraph("finite", root, fn);
}

std::string symmetry_audit(const LazyGraph& lg, std::mt19937_64& rng, int probes, int walk_length) {
  std::string v = lg.root();
  for (int p = 0; p < probes; ++p) {
    if (walk_length > 0 && p % walk_length == 0) v = lg.root();
    auto nbrs = lg.neighbors(v);
    for (auto& u : nbrs) {
      auto back = lg.neighbors(u);
      if (std::find(back.begin(), back.end(), v) == back.end())
        return "asymmetric adjacency: " + v + " -> " + u;
      if (u == v) return "loop at " + v;
    }
    if (nbrs.empty()) {
      v = lg.root();
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
    v = nbrs[pick(rng)];
  }
  return {};
}

}  // namespace hamloc
