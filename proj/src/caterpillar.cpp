#include "hamloc/caterpillar.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hamloc/error.hpp"
#include "hamloc/graph_ops.hpp"

namespace hamloc {

namespace {

void sort_by_name(const FiniteGraph& g, std::vector<VertexId>& vs) {
  std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
}

void require_tree(const FiniteGraph& t) {
  if (t.order() == 0) throw InputError("tree must have at least one vertex");
  if (t.size() + 1 != t.order() || !is_connected(t)) throw InputError("graph is not a tree");
}

// Distance at most 2 in t.
bool near2(const FiniteGraph& t, VertexId a, VertexId b) {
  if (a == b || t.adjacent(a, b)) return true;
  for (VertexId x : t.neighbors(a))
    if (t.adjacent(x, b)) return true;
  return false;
}

// Empty when path is a path of t^2 with distinct vertices.
std::string check_square_path(const FiniteGraph& t, const std::vector<VertexId>& path) {
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!seen.insert(path[i]).second) return "repeated vertex " + t.name(path[i]);
    if (i > 0 && !near2(t, path[i - 1], path[i]))
      return "non-edge of the square: " + t.name(path[i - 1]) + "-" + t.name(path[i]);
  }
  return {};
}

class Sweeper {
 public:
  Sweeper(const FiniteGraph& t, const CaterpillarPartition& p) : t_(t), p_(p) {}

  int K() const { return static_cast<int>(p_.size()) - 1; }
  int cls(VertexId v) const { return p_.class_of[v]; }
  bool jumping(VertexId v) const {
    const auto& j = p_.jumping[cls(v)];
    return j && *j == v;
  }

  // Class q, exiting at its jumping vertex when it has one.
  void up(int q, std::vector<VertexId>& out, VertexId skip = kNone) const {
    const auto& j = p_.jumping[q];
    for (VertexId x : p_.classes[q])
      if (x != skip && (!j || x != *j)) out.push_back(x);
    if (j && *j != skip) out.push_back(*j);
  }
  // Class q, entering at its jumping vertex.
  void down(int q, std::vector<VertexId>& out) const {
    const auto& j = p_.jumping[q];
    if (j) out.push_back(*j);
    for (VertexId x : p_.classes[q])
      if (!j || x != *j) out.push_back(x);
  }
  // From the jumping vertex of class i-1 back to the first class, picking up
  // unused leaves hanging off each spine vertex.
  void left_tail(int i, const std::set<VertexId>& used, std::vector<VertexId>& out) const {
    for (int q = i - 1; q >= 0; --q) {
      out.push_back(*p_.jumping[q]);
      const auto& j = p_.jumping[q + 1];
      for (VertexId x : p_.classes[q + 1])
        if ((!j || x != *j) && !used.count(x)) out.push_back(x);
    }
  }
  void right_tail(int j, std::vector<VertexId>& out) const {
    for (int q = j + 1; q <= K(); ++q) up(q, out);
  }
  // v followed by the rest of its class when v is a leaf, ending at the
  // jumping vertex.
  void v_part(VertexId v, std::vector<VertexId>& out) const {
    out.push_back(v);
    if (!jumping(v)) up(cls(v), out, v);
  }

  static constexpr VertexId kNone = static_cast<VertexId>(-1);

 private:
  const FiniteGraph& t_;
  const CaterpillarPartition& p_;
};

std::set<VertexId> as_set(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::optional<std::vector<VertexId>> is_caterpillar(const FiniteGraph& t) {
  require_tree(t);
  const std::size_t n = t.order();
  if (n == 1) return std::vector<VertexId>{0};
  if (n == 2) return std::vector<VertexId>{};
  std::vector<char> inner(n, 0);
  for (VertexId v = 0; v < n; ++v) inner[v] = t.degree(v) >= 2;
  std::vector<VertexId> ends;
  for (VertexId v : t.canonical_order()) {
    if (!inner[v]) continue;
    int k = 0;
    for (VertexId x : t.neighbors(v)) k += inner[x];
    if (k > 2) return std::nullopt;
    if (k <= 1) ends.push_back(v);
  }
  std::vector<VertexId> spine{ends.front()};
  std::optional<VertexId> prev;
  for (;;) {
    std::optional<VertexId> next;
    for (VertexId x : t.neighbors(spine.back()))
      if (inner[x] && x != prev) next = x;
    if (!next) break;
    prev = spine.back();
    spine.push_back(*next);
  }
  return spine;
}

std::optional<SubdividedClaw> find_s_k13(const FiniteGraph& g) {
  for (VertexId z : g.canonical_order()) {
    std::vector<VertexId> xs;
    for (VertexId x : g.neighbors(z))
      if (g.degree(x) >= 2) xs.push_back(x);
    sort_by_name(g, xs);
    const std::size_t d = xs.size();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t c = b + 1; c < d; ++c) {
          const VertexId mid[3] = {xs[a], xs[b], xs[c]};
          auto bad = [&](VertexId y) { return y == z || y == mid[0] || y == mid[1] || y == mid[2]; };
          for (VertexId y0 : g.neighbors(mid[0])) {
            if (bad(y0)) continue;
            for (VertexId y1 : g.neighbors(mid[1])) {
              if (bad(y1) || y1 == y0) continue;
              for (VertexId y2 : g.neighbors(mid[2])) {
                if (bad(y2) || y2 == y0 || y2 == y1) continue;
                return SubdividedClaw{z, {mid[0], mid[1], mid[2]}, {y0, y1, y2}};
              }
            }
          }
        }
  }
  return std::nullopt;
}

CaterpillarPartition caterpillar_partition(const FiniteGraph& t) {
  auto spine = is_caterpillar(t);
  if (!spine) throw InputError("tree is not a caterpillar");
  if (t.order() < 2) throw InputError("caterpillar partition needs at least 2 vertices");
  CaterpillarPartition p;
  p.spine = *spine;
  // A single edge uses its smaller-named end as the one-vertex arc.
  std::vector<VertexId> arc = p.spine;
  if (arc.empty()) arc.push_back(t.canonical_order().front());
  auto leaves_of = [&](VertexId a) {
    std::vector<VertexId> out;
    for (VertexId x : t.neighbors(a))
      if (t.degree(x) == 1) out.push_back(x);
    return out;
  };
  p.classes.push_back({arc[0]});
  p.jumping.push_back(arc[0]);
  for (std::size_t q = 1; q < arc.size(); ++q) {
    auto c = leaves_of(arc[q - 1]);
    c.push_back(arc[q]);
    p.classes.push_back(c);
    p.jumping.push_back(arc[q]);
  }
  p.classes.push_back(leaves_of(arc.back()));
  p.jumping.push_back(std::nullopt);
  p.class_of.assign(t.order(), -1);
  for (std::size_t q = 0; q < p.classes.size(); ++q) {
    sort_by_name(t, p.classes[q]);
    for (VertexId x : p.classes[q]) p.class_of[x] = static_cast<int>(q);
  }
  if (auto why = check_partition(t, p); !why.empty()) throw InternalError("caterpillar partition: " + why);
  return p;
}

std::string check_partition(const FiniteGraph& t, const CaterpillarPartition& p) {
  std::vector<int> count(t.order(), 0);
  for (const auto& c : p.classes)
    for (VertexId x : c) ++count[x];
  for (VertexId v = 0; v < t.order(); ++v)
    if (count[v] != 1) return "classes do not partition the vertices at " + t.name(v);
  for (const auto& c : p.classes)
    for (VertexId a : c) {
      auto d = bfs_distances(t, a);
      for (VertexId b : c)
        if (a != b && d[b] != 2) return "class members not at distance 2: " + t.name(a) + "," + t.name(b);
    }
  for (std::size_t q = 0; q + 1 < p.classes.size(); ++q) {
    if (!p.jumping[q]) return "class without jumping vertex before the last";
    for (VertexId r : p.classes[q + 1])
      if (!t.adjacent(*p.jumping[q], r)) return "jumping vertex not adjacent to next class";
  }
  return {};
}

std::vector<VertexId> square_string(const FiniteGraph& t, const CaterpillarPartition& p,
                                    const SquareStringSpec& s) {
  Sweeper sw(t, p);
  const int i = sw.cls(s.v), j = sw.cls(s.w);
  if (i > j) throw InputError("square string endpoints out of class order");
  if ((j - i) % 2 != 0) throw InputError("square string endpoints in classes of different parity");
  std::vector<VertexId> out;
  if (i == j) {
    const auto& c = p.classes[i];
    const bool closed = s.left_closed || s.right_closed;
    const bool open = !s.left_closed || !s.right_closed;
    const std::size_t ends = s.v == s.w ? 1 : 2;
    if (closed && open && c.size() > ends) throw InputError("closure flags conflict inside one class");
    out.push_back(s.v);
    if (closed)
      for (VertexId x : c)
        if (x != s.v && x != s.w) out.push_back(x);
    if (s.w != s.v) out.push_back(s.w);
  } else {
    const auto& ci = p.classes[i];
    if (s.left_closed) {
      if (sw.jumping(s.v) && ci.size() > 1) throw InputError("left-closed string cannot start at a jumping vertex");
      sw.v_part(s.v, out);
    } else {
      if (!sw.jumping(s.v)) throw InputError("left-open string must start at the jumping vertex");
      out.push_back(s.v);
    }
    for (int q = i + 2; q < j; q += 2) sw.up(q, out);
    if (s.right_closed)
      for (VertexId x : p.classes[j])
        if (x != s.w) out.push_back(x);
    out.push_back(s.w);
  }
  if (auto why = check_square_path(t, out); !why.empty()) throw InternalError("square string: " + why);
  return out;
}

SquareCycle hamilton_cycle_of_square(const FiniteGraph& t) {
  require_tree(t);
  if (t.order() < 3) throw InputError("square cycle needs at least 3 vertices");
  auto p = caterpillar_partition(t);
  Sweeper sw(t, p);
  const int K = sw.K();
  SquareCycle r;
  for (int q = 0; q <= K; q += 2) sw.up(q, r.order);
  for (int q = (K % 2 == 1) ? K : K - 1; q >= 1; q -= 2) sw.down(q, r.order);
  r.square = kth_power(t, 2);
  for (std::size_t k = 0; k < r.order.size(); ++k) {
    auto e = r.square.edge_between(r.order[k], r.order[(k + 1) % r.order.size()]);
    if (!e) throw InternalError("square cycle uses a non-edge");
    r.cycle.push_back(*e);
  }
  std::sort(r.cycle.begin(), r.cycle.end());
  if (!is_spanning_cycle(r.square, r.cycle)) throw InternalError("square cycle is not a spanning cycle");
  return r;
}

std::optional<FiniteGraph> spanning_caterpillar_search(const FiniteGraph& g) {
  const std::size_t n = g.order();
  if (n > 20) throw InputError("spanning caterpillar search is limited to 20 vertices");
  if (n == 0 || !is_connected(g)) return std::nullopt;
  std::vector<int> dominated(n, 0);
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> path;
  std::size_t covered = 0;
  std::uint64_t nodes = 0;
  const std::uint64_t budget = 20'000'000;
  auto mark = [&](VertexId v, int delta) {
    auto bump = [&](VertexId x) {
      if (delta > 0 && dominated[x]++ == 0) ++covered;
      if (delta < 0 && --dominated[x] == 0) --covered;
    };
    bump(v);
    for (VertexId x : g.neighbors(v)) bump(x);
  };
  auto order = g.canonical_order();
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v = 0; v < n; ++v) {
    nbrs[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    sort_by_name(g, nbrs[v]);
  }
  auto dfs = [&](auto&& self) -> bool {
    if (++nodes > budget) throw BudgetError("spanning caterpillar search exceeded its node budget");
    if (covered == n) return true;
    for (VertexId x : nbrs[path.back()]) {
      if (on_path[x]) continue;
      on_path[x] = 1;
      path.push_back(x);
      mark(x, 1);
      if (self(self)) return true;
      mark(x, -1);
      path.pop_back();
      on_path[x] = 0;
    }
    return false;
  };
  bool found = false;
  for (VertexId s : order) {
    on_path[s] = 1;
    path = {s};
    mark(s, 1);
    if (dfs(dfs)) {
      found = true;
      break;
    }
    mark(s, -1);
    on_path[s] = 0;
  }
  if (!found) return std::nullopt;
  FiniteGraph tree;
  for (VertexId v = 0; v < n; ++v) tree.add_vertex(g.name(v));
  for (std::size_t k = 1; k < path.size(); ++k) tree.add_edge(path[k - 1], path[k]);
  for (VertexId v = 0; v < n; ++v) {
    if (on_path[v]) continue;
    for (VertexId s : path)
      if (g.adjacent(v, s)) {
        tree.add_edge(v, s);
        break;
      }
  }
  return tree;
}

CoverReport decomp_covers(const FiniteGraph& t, const CaterpillarPartition& p, VertexId v, VertexId w) {
  Sweeper sw(t, p);
  const int i = sw.cls(v), j = sw.cls(w);
  if (i > j) throw InputError("cover endpoints out of class order");
  CoverReport r;
  r.even = (j - i) % 2 == 0;
  if (r.even && i == j) {
    std::vector<VertexId> P{v};
    for (VertexId x : p.classes[i])
      if (x != v && x != w) P.push_back(x);
    if (w != v) P.push_back(w);
    std::vector<VertexId> D;
    sw.left_tail(i, as_set(p.classes[i]), D);
    std::reverse(D.begin(), D.end());
    sw.right_tail(j, D);
    r.paths["P"] = P;
    r.paths["D"] = D;
    if (v == w) {
      r.note = "rays omitted: v equals w";
    } else if (sw.jumping(v) && !sw.jumping(w)) {
      r.note = "rays unavailable: v is the jumping vertex and w a leaf of the same class";
    } else {
      std::vector<VertexId> Rv{v}, Rw{w};
      if (sw.jumping(w)) {
        for (VertexId x : p.classes[i])
          if (x != v && x != w) Rv.push_back(x);
      } else {
        sw.up(i, Rw, Rw.front());
        Rw.erase(std::remove(Rw.begin() + 1, Rw.end(), v), Rw.end());
      }
      sw.left_tail(i, as_set(p.classes[i]), Rv);
      sw.right_tail(j, Rw);
      r.paths["R_v"] = Rv;
      r.paths["R_w"] = Rw;
    }
  } else if (r.even) {
    auto P = square_string(t, p, {v, w, !sw.jumping(v), sw.jumping(w)});
    auto inP = as_set(P);
    std::vector<VertexId> D;
    sw.left_tail(i, inP, D);
    std::reverse(D.begin(), D.end());
    for (int q = i + 1; q < j; q += 2) sw.up(q, D);
    std::vector<VertexId> rest;
    sw.up(j, rest);
    for (VertexId x : rest)
      if (!inP.count(x)) D.push_back(x);
    sw.right_tail(j, D);
    r.paths["P"] = P;
    r.paths["D"] = D;

    std::vector<VertexId> Rv;
    sw.v_part(v, Rv);
    for (int q = i + 2; q < j; q += 2) sw.up(q, Rv);
    if (sw.jumping(w))
      for (VertexId x : p.classes[j])
        if (x != w) Rv.push_back(x);
    for (int q = j - 1; q > i; q -= 2) sw.down(q, Rv);
    sw.left_tail(i, as_set(Rv), Rv);
    std::vector<VertexId> Rw{w};
    if (!sw.jumping(w)) sw.up(j, Rw, w);
    sw.right_tail(j, Rw);
    r.paths["R_v"] = Rv;
    r.paths["R_w"] = Rw;
  } else {
    std::vector<VertexId> U;
    sw.v_part(v, U);
    for (int q = i + 2; q < j; q += 2) sw.up(q, U);

    std::vector<VertexId> Rv = U;
    if (sw.jumping(w))
      for (VertexId x : p.classes[j])
        if (x != w) Rv.push_back(x);
    for (int q = j - 2; q > i; q -= 2) sw.down(q, Rv);
    sw.left_tail(i, as_set(Rv), Rv);
    std::vector<VertexId> Rw{w};
    if (!sw.jumping(w)) sw.up(j, Rw, w);
    sw.right_tail(j, Rw);

    std::vector<VertexId> Rv2 = U;
    sw.right_tail(j, Rv2);
    std::vector<VertexId> Rw2{w};
    for (VertexId x : p.classes[j])
      if (x != w) Rw2.push_back(x);
    for (int q = j - 2; q > i; q -= 2) sw.down(q, Rw2);
    sw.left_tail(i, as_set(Rv2), Rw2);

    r.paths["R_v"] = Rv;
    r.paths["R_w"] = Rw;
    r.paths["R'_v"] = Rv2;
    r.paths["R'_w"] = Rw2;
  }
  if (auto why = check_cover(t, p, v, w, r); !why.empty()) throw InternalError("decomp cover: " + why);
  return r;
}

std::string check_cover(const FiniteGraph& t, const CaterpillarPartition& p, VertexId v, VertexId w,
                        const CoverReport& r) {
  const int i = p.class_of[v], j = p.class_of[w];
  for (const auto& [name, path] : r.paths)
    if (auto why = check_square_path(t, path); !why.empty()) return name + ": " + why;
  auto pair_ok = [&](const std::string& a, const std::string& b) -> std::string {
    auto ia = r.paths.find(a), ib = r.paths.find(b);
    if (ia == r.paths.end() || ib == r.paths.end()) return {};
    std::vector<int> hit(t.order(), 0);
    for (VertexId x : ia->second) ++hit[x];
    for (VertexId x : ib->second) ++hit[x];
    for (VertexId x = 0; x < t.order(); ++x)
      if (hit[x] != 1) return a + "/" + b + " do not partition the vertices at " + t.name(x);
    return {};
  };
  auto starts = [&](const std::string& a, VertexId s) -> std::string {
    auto it = r.paths.find(a);
    if (it == r.paths.end()) return {};
    if (it->second.empty() || it->second.front() != s) return a + " does not start at " + t.name(s);
    return {};
  };
  auto avoids_above = [&](const std::string& a) -> std::string {
    auto it = r.paths.find(a);
    if (it == r.paths.end()) return {};
    for (VertexId x : it->second)
      if (p.class_of[x] > j) return a + " enters a class beyond w";
    return {};
  };
  auto avoids_below = [&](const std::string& a) -> std::string {
    auto it = r.paths.find(a);
    if (it == r.paths.end()) return {};
    for (VertexId x : it->second)
      if (p.class_of[x] < i) return a + " enters a class before v";
    return {};
  };
  std::vector<std::string> errs;
  if (r.even) {
    auto P = r.paths.find("P");
    if (P == r.paths.end() || P->second.front() != v || (v != w && P->second.back() != w)) errs.push_back("P is not a v-w path");
    errs.push_back(pair_ok("P", "D"));
    errs.push_back(pair_ok("R_v", "R_w"));
    errs.push_back(starts("R_v", v));
    errs.push_back(starts("R_w", w));
    errs.push_back(avoids_above("R_v"));
    errs.push_back(avoids_below("R_w"));
  } else {
    for (const char* k : {"R_v", "R_w", "R'_v", "R'_w"})
      if (!r.paths.count(k)) errs.push_back(std::string("missing ") + k);
    errs.push_back(pair_ok("R_v", "R_w"));
    errs.push_back(pair_ok("R'_v", "R'_w"));
    errs.push_back(starts("R_v", v));
    errs.push_back(starts("R'_v", v));
    errs.push_back(starts("R_w", w));
    errs.push_back(starts("R'_w", w));
    errs.push_back(avoids_above("R_v"));
    errs.push_back(avoids_above("R'_w"));
    errs.push_back(avoids_below("R_w"));
    errs.push_back(avoids_below("R'_v"));
  }
  for (auto& e : errs)
    if (!e.empty()) return e;
  return {};
}

Json cover_json(const FiniteGraph& t, const CoverReport& r) {
  Json j;
  j["parity"] = r.even ? "even" : "odd";
  Json paths = Json::object();
  for (const auto& [name, path] : r.paths) {
    Json a = Json::array();
    for (VertexId x : path) a.push_back(t.name(x));
    paths[name] = a;
  }
  j["paths"] = paths;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::vector<VertexId> interval_path(const FiniteGraph& g, const FiniteGraph& t, const CaterpillarPartition& part,
                                    VertexId x, VertexId y, VertexId v, VertexId w) {
  if (g.order() != t.order()) throw InputError("caterpillar does not span the graph");
  auto cls = [&](VertexId gv) {
    auto tv = t.find(g.name(gv));
    if (!tv) throw InputError("vertex " + g.name(gv) + " missing from the caterpillar");
    return part.class_of[*tv];
  };
  const int lo = cls(v), hi = cls(w);
  if (!(lo < cls(x) && cls(x) < hi && lo < cls(y) && cls(y) < hi))
    throw InputError("x and y must lie strictly inside the class interval of v and w");
  std::vector<VertexId> parent(g.order(), Sweeper::kNone);
  std::deque<VertexId> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    VertexId a = queue.front();
    queue.pop_front();
    for (VertexId b : g.neighbors(a)) {
      if (parent[b] != Sweeper::kNone) continue;
      int c = cls(b);
      if (c < lo || c > hi) continue;
      parent[b] = a;
      queue.push_back(b);
    }
  }
  if (parent[y] == Sweeper::kNone) throw InternalError("no path inside the class interval");
  std::vector<VertexId> path{y};
  while (path.back() != x) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

SplitToCycle split_to_cycle(const MultiGraph& m) {
  if (!is_eulerian(m)) throw InputError("multigraph is not Eulerian");
  for (VertexId v = 0; v < m.order(); ++v)
    if (m.degree(v) != 2 && m.degree(v) != 4) throw InputError("degrees must be 2 or 4");
  SplitToCycle r;
  r.cycle = m;
  for (;;) {
    std::optional<VertexId> pick;
    for (VertexId v : r.cycle.canonical_order())
      if (r.cycle.degree(v) == 4) {
        pick = v;
        break;
      }
    if (!pick) break;
    auto splits = eulerian_v_splits(r.cycle, *pick);
    if (splits.empty()) throw InternalError("no Eulerian split at " + r.cycle.name(*pick));
    r.history.push_back(splits.front());
    r.cycle = splits.front().graph;
  }
  return r;
}

}  // namespace hamloc
