#include "hamloc/hamilton.hpp"

#include <algorithm>
#include <omp.h>

#include "hamloc/error.hpp"

namespace hamloc {
namespace {

struct State {
  std::vector<std::int8_t> es;  // 0 open, 1 chosen, -1 dropped
  std::vector<int> indeg;
  std::vector<int> open;
  std::vector<int> partner;  // other end of the path segment, for segment ends
  int chosen = 0;
};

class Kernel {
 public:
  explicit Kernel(const MultiGraph& m) : m_(m), n_(static_cast<int>(m.order())) {
    for (const auto& e : m.edges()) {
      ea_.push_back(static_cast<int>(e.a));
      eb_.push_back(static_cast<int>(e.b));
    }
  }

  State initial() const {
    State s;
    s.es.assign(ea_.size(), 0);
    s.indeg.assign(n_, 0);
    s.open.resize(n_);
    s.partner.resize(n_);
    for (int v = 0; v < n_; ++v) {
      s.open[v] = static_cast<int>(m_.degree(v));
      s.partner[v] = v;
    }
    return s;
  }

  // Applies propagation from every vertex. False on contradiction.
  bool settle(State& s) const {
    std::vector<int> work(n_);
    for (int v = 0; v < n_; ++v) work[v] = v;
    return drain(s, work);
  }

  bool complete(const State& s) const { return s.chosen == n_; }

  // Open edge to branch on, or -1 if none.
  int pick(const State& s) const {
    int best = -1, best_key = 1 << 30;
    for (int v = 0; v < n_; ++v) {
      if (s.indeg[v] == 2 || s.open[v] == 0) continue;
      int k = s.open[v] * 4 + (s.indeg[v] == 1 ? 0 : 2);
      if (k < best_key) {
        best_key = k;
        best = v;
      }
    }
    if (best < 0) return -1;
    for (auto p : m_.incident(best))
      if (s.es[p] == 0) return static_cast<int>(p);
    return -1;
  }

  bool choose(State& s, int e) const {
    std::vector<int> work;
    return add(s, e, work) && drain(s, work);
  }

  bool drop(State& s, int e) const {
    std::vector<int> work;
    remove(s, e, work);
    return drain(s, work);
  }

  IdCycle solution(const State& s) const {
    IdCycle c;
    for (std::size_t p = 0; p < s.es.size(); ++p)
      if (s.es[p] == 1) c.push_back(m_.edges()[p].id);
    std::sort(c.begin(), c.end());
    return c;
  }

  void run(State s, std::vector<IdCycle>& out, std::size_t limit) const {
    if (limit && out.size() >= limit) return;
    if (complete(s)) {
      out.push_back(solution(s));
      return;
    }
    int e = pick(s);
    if (e < 0) return;
    State t = s;
    if (choose(t, e)) run(std::move(t), out, limit);
    if (drop(s, e)) run(std::move(s), out, limit);
  }

 private:
  bool add(State& s, int e, std::vector<int>& work) const {
    if (s.es[e] != 0) return s.es[e] == 1;
    int a = ea_[e], b = eb_[e];
    if (s.indeg[a] == 2 || s.indeg[b] == 2) return false;
    if (s.partner[a] == b) {
      if (s.chosen != n_ - 1) return false;
      s.es[e] = 1;
      ++s.indeg[a];
      ++s.indeg[b];
      --s.open[a];
      --s.open[b];
      ++s.chosen;
      work.push_back(a);
      work.push_back(b);
      return true;
    }
    int pa = s.partner[a], pb = s.partner[b];
    s.es[e] = 1;
    ++s.indeg[a];
    ++s.indeg[b];
    --s.open[a];
    --s.open[b];
    ++s.chosen;
    s.partner[pa] = pb;
    s.partner[pb] = pa;
    work.push_back(a);
    work.push_back(b);
    if (s.chosen + 1 < n_) {
      // An edge joining the two ends would close a short cycle.
      for (auto p : m_.incident(pa))
        if (s.es[p] == 0 && static_cast<int>(m_.other(p, pa)) == pb) remove(s, static_cast<int>(p), work);
    }
    return true;
  }

  void remove(State& s, int e, std::vector<int>& work) const {
    if (s.es[e] != 0) return;
    s.es[e] = -1;
    --s.open[ea_[e]];
    --s.open[eb_[e]];
    work.push_back(ea_[e]);
    work.push_back(eb_[e]);
  }

  bool drain(State& s, std::vector<int>& work) const {
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      if (s.indeg[v] == 2) {
        for (auto p : m_.incident(v))
          if (s.es[p] == 0) remove(s, static_cast<int>(p), work);
      } else if (s.indeg[v] + s.open[v] < 2) {
        return false;
      } else if (s.indeg[v] + s.open[v] == 2 && s.open[v] > 0) {
        for (auto p : m_.incident(v))
          if (s.es[p] == 0 && !add(s, static_cast<int>(p), work)) return false;
      }
    }
    return true;
  }

  const MultiGraph& m_;
  int n_;
  std::vector<int> ea_, eb_;
};

}  // namespace

std::vector<IdCycle> enumerate_hamilton_cycles_serial(const MultiGraph& m, const HamiltonOptions& opt) {
  std::vector<IdCycle> out;
  if (m.order() < 3) return out;
  Kernel k(m);
  State s = k.initial();
  if (k.settle(s)) k.run(std::move(s), out, opt.limit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdCycle> enumerate_hamilton_cycles(const MultiGraph& m, const HamiltonOptions& opt) {
  if (opt.limit || omp_in_parallel() || omp_get_max_threads() == 1 || m.order() < 3)
    return enumerate_hamilton_cycles_serial(m, opt);
  Kernel k(m);
  std::vector<IdCycle> out;
  std::vector<State> frontier;
  {
    State s = k.initial();
    if (!k.settle(s)) return out;
    frontier.push_back(std::move(s));
  }
  const std::size_t target =
      static_cast<std::size_t>(omp_get_max_threads()) * static_cast<std::size_t>(std::max(1, opt.tasks_per_thread));
  // Breadth-first split until enough independent subproblems exist.
  for (int round = 0; round < 64 && !frontier.empty() && frontier.size() < target; ++round) {
    std::vector<State> next;
    bool grew = false;
    for (auto& s : frontier) {
      if (k.complete(s)) {
        out.push_back(k.solution(s));
        continue;
      }
      int e = k.pick(s);
      if (e < 0) continue;
      grew = true;
      State t = s;
      if (k.choose(t, e)) next.push_back(std::move(t));
      if (k.drop(s, e)) next.push_back(std::move(s));
    }
    frontier = std::move(next);
    if (!grew) break;
  }
  std::vector<std::vector<IdCycle>> slots(frontier.size());
  const auto count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) k.run(std::move(frontier[i]), slots[i], 0);
  for (auto& sl : slots)
    for (auto& c : sl) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> enumerate_hamilton_cycles(const FiniteGraph& g, const HamiltonOptions& opt) {
  std::vector<EdgeSet> out;
  for (auto& c : enumerate_hamilton_cycles(MultiGraph::from_simple(g), opt))
    out.emplace_back(c.begin(), c.end());
  return out;
}

bool has_hamilton_cycle(const FiniteGraph& g) {
  HamiltonOptions opt;
  opt.limit = 1;
  return !enumerate_hamilton_cycles(g, opt).empty();
}

std::vector<std::vector<VertexId>> enumerate_hamilton_paths(const FiniteGraph& g) {
  const auto n = g.order();
  if (n == 0) throw InputError("enumerate_hamilton_paths needs at least one vertex");
  std::vector<std::vector<VertexId>> out;
  if (n == 1) return {{0}};
  // Paths of g are the cycles of g plus an apex through the apex.
  MultiGraph m = MultiGraph::from_simple(g);
  std::string apex_name = "#apex";
  while (m.find(apex_name)) apex_name += "#";
  auto apex = m.add_vertex(apex_name);
  for (VertexId v = 0; v < n; ++v) m.add_edge(apex, v);
  std::vector<std::vector<VertexId>> nbr(n + 1);
  for (const auto& c : enumerate_hamilton_cycles(m)) {
    for (auto& l : nbr) l.clear();
    for (auto id : c) {
      const auto& e = m.edges()[*m.position(id)];
      nbr[e.a].push_back(e.b);
      nbr[e.b].push_back(e.a);
    }
    std::vector<VertexId> path;
    VertexId prev = apex, cur = nbr[apex][0];
    while (cur != apex) {
      path.push_back(cur);
      VertexId nx = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = nx;
    }
    if (g.name(path.back()) < g.name(path.front())) std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
  });
  return out;
}

std::vector<VertexId> cycle_order(const FiniteGraph& g, const EdgeSet& cycle) {
  std::vector<std::vector<VertexId>> nbr(g.order());
  for (auto e : cycle) {
    nbr[g.edge(e).a].push_back(g.edge(e).b);
    nbr[g.edge(e).b].push_back(g.edge(e).a);
  }
  auto order = g.canonical_order();
  VertexId start = order.front();
  if (nbr[start].size() != 2) throw InternalError("cycle_order: not a spanning cycle");
  auto first = g.name(nbr[start][0]) < g.name(nbr[start][1]) ? nbr[start][0] : nbr[start][1];
  std::vector<VertexId> seq{start};
  VertexId prev = start, cur = first;
  while (cur != start) {
    seq.push_back(cur);
    if (nbr[cur].size() != 2 || seq.size() > g.order()) throw InternalError("cycle_order: not a spanning cycle");
    VertexId nx = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = nx;
  }
  if (seq.size() != g.order()) throw InternalError("cycle_order: not a spanning cycle");
  return seq;
}

}  // namespace hamloc
