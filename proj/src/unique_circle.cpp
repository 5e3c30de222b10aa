#include "hamloc/unique_circle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hamloc/error.hpp"

namespace hamloc {

namespace {

int unused_index(const std::array<bool, 3>& used) {
  int k = -1, n = 0;
  for (int i = 0; i < 3; ++i)
    if (!used[i]) {
      k = i;
      ++n;
    }
  if (n != 1) throw InternalError("pattern does not use exactly two of three edges");
  return k;
}

// Image of fragment edge x-y of copy `path` in the graph at `level`.
NamedEdge map_edge(const FragmentScheme& sc, const std::string& path, VertexId x, VertexId y, int level) {
  const auto& f = sc.fragment();
  const bool expanded = static_cast<int>(path.size()) < level;
  auto end_name = [&](VertexId a, VertexId other) {
    if (int m = f.contact_index(a); m >= 0) return sc.resolve_contact(path, m, level);
    if (expanded && (a == f.c || a == f.v)) {
      const auto& roles = a == f.c ? f.c_roles : f.v_roles;
      int k = static_cast<int>(std::find(roles.begin(), roles.end(), other) - roles.begin());
      return sc.attach(path + (a == f.c ? "c" : "v"), k, level);
    }
    return sc.vertex_name(path, a);
  };
  return named_edge(end_name(x, y), end_name(y, x));
}

std::set<NamedEdge> intersect(const std::set<NamedEdge>& a, const std::set<NamedEdge>& b) {
  std::set<NamedEdge> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

struct CutEdge {
  std::string finger;
  std::string contact;
  int component;
};

std::vector<CutEdge> collect_cut(const LazyGraph& lg, const std::vector<std::string>& region,
                                 const std::unordered_set<std::string>& in_region,
                                 const std::vector<DeepComponent>& comps) {
  std::unordered_map<std::string, int> comp_of;
  for (const auto& c : comps)
    for (const auto& x : c.contacts) comp_of[x] = c.id;
  std::vector<CutEdge> out;
  for (const auto& a : region)
    for (const auto& b : lg.neighbors(a)) {
      if (in_region.count(b)) continue;
      auto it = comp_of.find(b);
      if (it == comp_of.end()) throw InputError("a finite component lies outside the region; the quotient is undefined");
      out.push_back({a, b, it->second});
    }
  return out;
}

}  // namespace

int TransferPath::child_c_missing() const { return unused_index(at_c); }
int TransferPath::child_v_missing() const { return unused_index(at_v); }

NamedEdge named_edge(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

TransferTable transfer_table(const Fragment& f) {
  TransferTable tt;
  for (int m = 0; m < 3; ++m)
    for (auto& p : fragment_paths_missing(f, m)) {
      TransferPath tp;
      tp.vertices = p;
      for (std::size_t i = 1; i < p.size(); ++i)
        for (int k = 0; k < 3; ++k) {
          auto is = [&](VertexId a, VertexId b) { return (p[i - 1] == a && p[i] == b) || (p[i - 1] == b && p[i] == a); };
          if (is(f.c, f.c_roles[k])) tp.at_c[k] = true;
          if (is(f.v, f.v_roles[k])) tp.at_v[k] = true;
        }
      tt.missing[m].push_back(tp);
    }
  return tt;
}

PatternLists viable_patterns(const TransferTable& tt, int depth) {
  if (depth < 0) throw InputError("depth must be nonnegative");
  PatternLists cur;
  for (int m = 0; m < 3; ++m)
    for (std::size_t i = 0; i < tt.missing[m].size(); ++i) cur[m].push_back(i);
  for (int d = 0; d < depth; ++d) {
    PatternLists next;
    for (int m = 0; m < 3; ++m)
      for (std::size_t i : cur[m]) {
        const auto& p = tt.missing[m][i];
        if (!cur[p.child_c_missing()].empty() && !cur[p.child_v_missing()].empty()) next[m].push_back(i);
      }
    cur = next;
  }
  return cur;
}

Viability stabilize(const TransferTable& tt, int max_depth) {
  Viability v;
  v.by_depth.push_back(viable_patterns(tt, 0));
  for (int d = 1; d <= max_depth; ++d) {
    v.by_depth.push_back(viable_patterns(tt, d));
    if (v.by_depth[d] == v.by_depth[d - 1]) {
      v.by_depth.pop_back();
      v.stabilized_at = d - 1;
      v.stable = v.by_depth.back();
      if (v.stable[kR].size() != 1)
        throw InternalError("stable missing-r list has " + std::to_string(v.stable[kR].size()) + " entries");
      return v;
    }
  }
  throw InternalError("viable patterns did not stabilize");
}

bool persistent_edge(const FragmentScheme& sc, const std::string& a, const std::string& b) {
  for (const auto* x : {&a, &b}) {
    auto [path, local] = sc.parse(*x);
    if (local && !sc.exists(path, *local, FragmentScheme::kLimit)) return false;
  }
  auto nb = sc.neighbors(a, FragmentScheme::kLimit);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

LevelVerdict fragment_tree_dp(const FragmentTree& ft, const TransferTable& tt, const Viability& via) {
  const int n = ft.level;
  FragmentScheme sc(load_tutte_fragment());

  // Counts depend only on depth and the missing contact.
  std::vector<std::array<std::uint64_t, 3>> closed(n + 1), limit(n + 1);
  for (int m = 0; m < 3; ++m) {
    closed[n][m] = tt.missing[m].size();
    limit[n][m] = via.stable[m].size();
  }
  for (int d = n - 1; d >= 0; --d)
    for (int m = 0; m < 3; ++m) {
      closed[d][m] = limit[d][m] = 0;
      for (const auto& p : tt.missing[m]) {
        closed[d][m] += closed[d + 1][p.child_c_missing()] * closed[d + 1][p.child_v_missing()];
        limit[d][m] += limit[d + 1][p.child_c_missing()] * limit[d + 1][p.child_v_missing()];
      }
    }
  LevelVerdict out;
  out.level = n;
  for (int m = 0; m < 3; ++m) {
    out.closed_count += closed[0][m];
    out.count += limit[0][m];
  }

  // Edges common to every counted assignment below copy `path` missing m.
  auto forced = [&](auto&& self, const std::string& path, int m) -> std::optional<std::set<NamedEdge>> {
    const int d = static_cast<int>(path.size());
    if (limit[d][m] == 0) return std::nullopt;
    if (d == n) {
      // A frontier copy must itself use a stably viable pattern.
      std::optional<std::set<NamedEdge>> acc;
      for (auto i : via.stable[m]) {
        const auto& p = tt.missing[m][i];
        std::set<NamedEdge> s;
        for (std::size_t k = 1; k < p.vertices.size(); ++k) s.insert(map_edge(sc, path, p.vertices[k - 1], p.vertices[k], n));
        acc = acc ? intersect(*acc, s) : s;
      }
      return acc;
    }
    std::optional<std::set<NamedEdge>> acc;
    for (const auto& p : tt.missing[m]) {
      auto cs = self(self, path + "c", p.child_c_missing());
      auto vs = self(self, path + "v", p.child_v_missing());
      if (!cs || !vs) continue;
      std::set<NamedEdge> s = *cs;
      s.insert(vs->begin(), vs->end());
      for (std::size_t i = 1; i < p.vertices.size(); ++i) s.insert(map_edge(sc, path, p.vertices[i - 1], p.vertices[i], n));
      acc = acc ? intersect(*acc, s) : s;
    }
    return acc;
  };
  std::optional<std::set<NamedEdge>> all;
  for (int m = 0; m < 3; ++m)
    if (auto s = forced(forced, "", m)) all = all ? intersect(*all, *s) : *s;
  if (all)
    for (const auto& e : *all)
      if (persistent_edge(sc, e.first, e.second)) out.forced.push_back(e);
  return out;
}

std::vector<LevelVerdict> fragment_dp_levels(int max_level, const TransferTable& tt, const Viability& via) {
  FragmentScheme sc(load_tutte_fragment());
  std::vector<LevelVerdict> out;
  std::set<NamedEdge> prev_persistent;
  for (int n = 0; n <= max_level; ++n) {
    auto ft = build_tree(n, std::max(max_level, kDefaultLevelCap));
    auto v = fragment_tree_dp(ft, tt, via);
    if (n > 0) {
      std::set<NamedEdge> restricted;
      for (const auto& e : v.forced)
        if (prev_persistent.count(e)) restricted.insert(e);
      v.stable = restricted == std::set<NamedEdge>(out.back().forced.begin(), out.back().forced.end());
    }
    prev_persistent.clear();
    for (const auto& e : ft.graph.edges()) {
      auto ne = named_edge(ft.graph.name(e.a), ft.graph.name(e.b));
      if (persistent_edge(sc, ne.first, ne.second)) prev_persistent.insert(ne);
    }
    out.push_back(std::move(v));
  }
  return out;
}

QuotientResult quotient_hamilton(const LazyGraph& lg, int r, RegionKind kind, const ExploreBudget& budget) {
  QuotientResult q;
  q.level = r;
  auto region = region_vertices(lg, r, kind, budget);
  std::unordered_set<std::string> in_region(region.begin(), region.end());
  q.components = deep_components(lg, r, kind, budget);
  for (const auto& a : region) q.quotient.add_vertex(a);
  for (VertexId i = 0; i < region.size(); ++i)
    for (const auto& b : lg.neighbors(region[i])) {
      auto j = q.quotient.find(b);
      if (j && *j > i) {
        q.quotient.add_edge(i, *j);
        q.edge_info.push_back({region[i], b, -1});
      }
    }
  std::vector<VertexId> sur;
  for (const auto& c : q.components) sur.push_back(q.quotient.add_vertex("S:" + std::to_string(c.id)));
  for (const auto& e : collect_cut(lg, region, in_region, q.components)) {
    q.quotient.add_edge(q.quotient.id(e.finger), sur[e.component]);
    q.edge_info.push_back({e.finger, e.contact, e.component});
  }
  auto cycles = enumerate_hamilton_cycles(q.quotient);
  q.raw_count = cycles.size();
  const LevelHint* hint = lg.hint() ? &*lg.hint() : nullptr;
  for (auto& cyc : cycles) {
    std::vector<std::vector<std::string>> used(q.components.size());
    for (auto id : cyc) {
      const auto& info = q.edge_info[*q.quotient.position(id)];
      if (info.component >= 0) used[info.component].push_back(info.b);
    }
    bool ok = true;
    for (std::size_t c = 0; c < used.size() && ok; ++c) {
      if (used[c].size() != 2) throw InternalError("Hamilton cycle does not use two edges at a surrogate");
      if (hint && hint->admissible && kind == RegionKind::Level)
        ok = hint->admissible(q.components[c].key, used[c][0], used[c][1]);
      else
        ok = used[c][0] != used[c][1];
    }
    if (ok) q.cycles.push_back(cyc);
  }
  std::optional<std::set<NamedEdge>> common;
  for (auto& cyc : q.cycles) {
    std::set<NamedEdge> s;
    for (auto id : cyc) {
      const auto& info = q.edge_info[*q.quotient.position(id)];
      if (info.component < 0) s.insert(named_edge(info.a, info.b));
    }
    common = common ? intersect(*common, s) : s;
  }
  if (common) q.forced.assign(common->begin(), common->end());
  return q;
}

FiniteGraph quotient_as_simple(const QuotientResult& q) {
  FiniteGraph g;
  for (VertexId a = 0; a < q.quotient.order(); ++a) g.add_vertex(q.quotient.name(a));
  for (const auto& e : q.quotient.edges()) g.add_edge(e.a, e.b);
  return g;
}

std::vector<CircleCheck> verify_candidate_circle(const LazyGraph& lg, const EdgePredicate& member,
                                                 const std::vector<int>& levels, RegionKind kind,
                                                 const ExploreBudget& budget) {
  std::vector<CircleCheck> out;
  for (int r : levels) {
    CircleCheck chk;
    chk.level = r;
    auto fail = [&](std::string why) {
      if (chk.ok) chk.reason = std::move(why);
      chk.ok = false;
    };
    auto region = region_vertices(lg, r, kind, budget);
    std::unordered_set<std::string> in_region(region.begin(), region.end());
    auto comps = deep_components(lg, r, kind, budget);
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < region.size(); ++i) idx[region[i]] = i;
    const std::size_t total = region.size() + comps.size();
    std::vector<std::size_t> parent(total);
    for (std::size_t i = 0; i < total; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : region) {
      int deg = 0;
      for (const auto& b : lg.neighbors(a)) {
        if (!member(a, b)) continue;
        ++deg;
        if (auto it = idx.find(b); it != idx.end()) parent[find(idx[a])] = find(it->second);
      }
      if (deg != 2) fail("vertex " + a + " has " + std::to_string(deg) + " member edges");
    }
    std::vector<std::size_t> crossing(comps.size(), 0);
    for (const auto& e : collect_cut(lg, region, in_region, comps))
      if (member(e.finger, e.contact)) {
        ++crossing[e.component];
        parent[find(idx[e.finger])] = find(region.size() + e.component);
      }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto k = crossing[c];
      if (k % 2 != 0 || k < 2 || k > comps[c].cut_edges)
        fail("finger cut of component " + std::to_string(c) + " is crossed " + std::to_string(k) + " times");
    }
    for (std::size_t i = 1; i < total; ++i)
      if (find(i) != find(0)) {
        fail("member edges do not connect the quotient");
        break;
      }
    out.push_back(chk);
  }
  return out;
}

LazyGraph section5_with_viability(const Viability& via) {
  auto base = section5_graph();
  auto hint = *base.hint();
  auto scheme = std::make_shared<FragmentScheme>(load_tutte_fragment());
  auto stable = via.stable;
  hint.admissible = [scheme, stable](const std::string& key, const std::string& a, const std::string& b) {
    int ma = -1, mb = -1;
    for (int m = 0; m < 3; ++m) {
      auto at = scheme->attach(key, m, FragmentScheme::kLimit);
      if (at == a) ma = m;
      if (at == b) mb = m;
    }
    if (ma < 0 || mb < 0 || ma == mb) return false;
    return !stable[3 - ma - mb].empty();
  };
  return LazyGraph(base.name(), base.root(), [base](const std::string& v) { return base.neighbors(v); }, hint);
}

EdgePredicate fragment_path_member(const TransferTable& tt, const Viability& via) {
  auto scheme = std::make_shared<FragmentScheme>(load_tutte_fragment());
  const TransferPath path = tt.missing[kR][via.stable[kR].at(0)];
  return [scheme, path](const std::string& a, const std::string& b) {
    const auto target = named_edge(a, b);
    std::set<std::string> copies;
    for (const auto* x : {&a, &b}) {
      auto p = scheme->parse(*x).first;
      for (std::size_t k = 0; k <= p.size(); ++k) copies.insert(p.substr(0, k));
    }
    for (const auto& q : copies)
      for (std::size_t i = 1; i < path.vertices.size(); ++i)
        if (map_edge(*scheme, q, path.vertices[i - 1], path.vertices[i], FragmentScheme::kLimit) == target) return true;
    return false;
  };
}

EdgePredicate ladder_rails_member() {
  return [](const std::string& a, const std::string& b) {
    auto side = [](const std::string& s) { return s.substr(s.rfind(':') + 1); };
    return side(a) == side(b);
  };
}

Json transfer_json(const Fragment& f, const TransferTable& tt, const Viability& via) {
  Json j;
  Json counts, paths, stable;
  for (int m = 0; m < 3; ++m) {
    counts[contact_name(m)] = tt.missing[m].size();
    Json arr = Json::array();
    for (const auto& p : tt.missing[m]) {
      Json seq = Json::array();
      for (auto x : p.vertices) seq.push_back(f.graph.name(x));
      arr.push_back({{"path", seq},
                     {"child_c_missing", contact_name(p.child_c_missing())},
                     {"child_v_missing", contact_name(p.child_v_missing())}});
    }
    paths[contact_name(m)] = arr;
    stable[contact_name(m)] = via.stable[m];
  }
  j["counts"] = counts;
  j["paths"] = paths;
  j["stabilized_at"] = via.stabilized_at;
  j["stable"] = stable;
  return j;
}

Json level_verdict_json(const LevelVerdict& v) {
  Json forced = Json::array();
  for (const auto& e : v.forced) forced.push_back({e.first, e.second});
  return {{"level", v.level},
          {"count", v.count},
          {"closed_count", v.closed_count},
          {"forced", forced},
          {"stable", v.stable}};
}

}  // namespace hamloc
