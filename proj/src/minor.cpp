#include "hamloc/minor.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>

#include "hamloc/error.hpp"
#include "hamloc/graph_ops.hpp"

namespace hamloc {
namespace {

using Mask = std::uint64_t;

struct PatternSpec {
  std::vector<std::string> names;  // in search order
  std::vector<std::pair<int, int>> edges;
  std::vector<int> sym_prev;  // previous interchangeable pattern vertex or -1
};

PatternSpec spec_of(Pattern p) {
  if (p == Pattern::K4) return {{"p1", "p2", "p3", "p4"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {-1, 0, 1, 2}};
  // Order a1, b1, a2, b2, b3 so every set after the first has an earlier neighbour.
  return {{"a1", "b1", "a2", "b2", "b3"}, {{0, 1}, {2, 1}, {0, 3}, {2, 3}, {0, 4}, {2, 4}}, {-1, -1, 0, 1, 3}};
}

class MinorSearch {
 public:
  MinorSearch(const FiniteGraph& g, Pattern p) : g_(g), spec_(spec_of(p)) {
    order_ = g.canonical_order();
    rank_.resize(g.order());
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = static_cast<int>(i);
    nb_.assign(g.order(), 0);
    for (const auto& e : g.edges()) {
      nb_[rank_[e.a]] |= Mask{1} << rank_[e.b];
      nb_[rank_[e.b]] |= Mask{1} << rank_[e.a];
    }
    const int k = static_cast<int>(spec_.names.size());
    adj_.assign(k, std::vector<char>(k, 0));
    for (auto [a, b] : spec_.edges) adj_[a][b] = adj_[b][a] = 1;
    sets_.assign(k, 0);
    full_ = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  }

  std::optional<std::vector<Mask>> run() {
    if (g_.order() < spec_.names.size()) return std::nullopt;
    if (assign(0, full_)) return sets_;
    return std::nullopt;
  }

  VertexId vertex_at(int r) const { return order_[r]; }

 private:
  Mask neighborhood(Mask s) const {
    Mask n = 0;
    for (Mask t = s; t; t &= t - 1) n |= nb_[std::countr_zero(t)];
    return n & ~s;
  }

  // Every assigned set still owed an adjacency to an unassigned pattern
  // neighbour must touch some free vertex.
  bool viable(int k, Mask free) const {
    const int total = static_cast<int>(spec_.names.size());
    if (std::popcount(free) < total - k) return false;
    for (int i = 0; i < k; ++i) {
      bool owes = false;
      for (int j = k; j < total; ++j) owes = owes || adj_[i][j];
      if (owes && !(neighborhood(sets_[i]) & free)) return false;
    }
    return true;
  }

  bool fits(int k, Mask s) const {
    Mask n = neighborhood(s);
    for (int i = 0; i < k; ++i)
      if (adj_[i][k] && !(n & sets_[i])) return false;
    return true;
  }

  bool assign(int k, Mask free) {
    if (k == static_cast<int>(spec_.names.size())) return true;
    int min_root = 0;
    if (spec_.sym_prev[k] >= 0) min_root = std::countr_zero(sets_[spec_.sym_prev[k]]) + 1;
    for (int r = min_root; r < static_cast<int>(g_.order()); ++r) {
      if (!(free >> r & 1)) continue;
      Mask allowed = free & ~((Mask{1} << r) - 1);
      Mask start = Mask{1} << r;
      if (grow(k, free, allowed, start, nb_[r] & allowed & ~start, 0)) return true;
    }
    return false;
  }

  // Enumerates connected sets containing `s` within `allowed`, each once.
  bool grow(int k, Mask free, Mask allowed, Mask s, Mask ext, Mask excl) {
    if (fits(k, s)) {
      sets_[k] = s;
      if (viable(k + 1, free & ~s) && assign(k + 1, free & ~s)) return true;
      sets_[k] = 0;
    }
    while (ext) {
      int v = std::countr_zero(ext);
      Mask bit = Mask{1} << v;
      ext &= ~bit;
      Mask s2 = s | bit;
      Mask ext2 = (ext | (nb_[v] & allowed)) & ~s2 & ~excl;
      if (grow(k, free, allowed, s2, ext2, excl)) return true;
      excl |= bit;
    }
    return false;
  }

  const FiniteGraph& g_;
  PatternSpec spec_;
  std::vector<VertexId> order_;
  std::vector<int> rank_;
  std::vector<Mask> nb_;
  std::vector<std::vector<char>> adj_;
  std::vector<Mask> sets_;
  Mask full_ = 0;
};

bool interleave(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  bool shared = c == a || c == b || d == a || d == b;
  return !shared && c_in != d_in;
}

}  // namespace

std::string pattern_name(Pattern p) { return p == Pattern::K4 ? "K4" : "K23"; }

Pattern parse_pattern(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "k4") return Pattern::K4;
  if (t == "k23") return Pattern::K23;
  throw InputError("unknown pattern '" + s + "' (expected k4 or k23)");
}

std::optional<std::vector<VertexId>> find_k4_subgraph(const FiniteGraph& g) {
  auto ord = g.canonical_order();
  const auto n = ord.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(ord[i], ord[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!g.adjacent(ord[i], ord[k]) || !g.adjacent(ord[j], ord[k])) continue;
        for (std::size_t l = k + 1; l < n; ++l)
          if (g.adjacent(ord[i], ord[l]) && g.adjacent(ord[j], ord[l]) && g.adjacent(ord[k], ord[l]))
            return std::vector<VertexId>{ord[i], ord[j], ord[k], ord[l]};
      }
    }
  return std::nullopt;
}

std::optional<MinorWitness> find_minor(const FiniteGraph& g, Pattern p) {
  if (g.order() > 64) throw InputError("find_minor is limited to 64 vertices");
  MinorSearch search(g, p);
  auto sets = search.run();
  if (!sets) return std::nullopt;
  auto spec = spec_of(p);
  MinorWitness w{p, {}, {}};
  std::vector<std::vector<VertexId>> members(spec.names.size());
  for (std::size_t i = 0; i < spec.names.size(); ++i) {
    for (Mask t = (*sets)[i]; t; t &= t - 1) members[i].push_back(search.vertex_at(std::countr_zero(t)));
    w.branch_sets[spec.names[i]] = members[i];
  }
  auto ord = g.canonical_order();
  std::vector<int> rank(g.order());
  for (std::size_t i = 0; i < ord.size(); ++i) rank[ord[i]] = static_cast<int>(i);
  for (auto [a, b] : spec.edges) {
    std::optional<EdgeId> best;
    for (auto x : members[a])
      for (auto y : members[b])
        if (auto e = g.edge_between(x, y)) {
          auto key = std::minmax(rank[x], rank[y]);
          if (!best || key < std::minmax(rank[g.edge(*best).a], rank[g.edge(*best).b])) best = e;
        }
    if (!best) throw InternalError("find_minor: branch sets not adjacent");
    w.edges.push_back({{spec.names[a], spec.names[b]}, *best});
  }
  if (auto err = validate_witness(g, w); !err.empty()) throw InternalError("find_minor: " + err);
  return w;
}

std::string validate_witness(const FiniteGraph& g, const MinorWitness& w) {
  auto spec = spec_of(w.pattern);
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < spec.names.size(); ++i) {
    auto it = w.branch_sets.find(spec.names[i]);
    if (it == w.branch_sets.end() || it->second.empty()) return "missing branch set " + spec.names[i];
    for (auto v : it->second) {
      if (v >= g.order()) return "vertex out of range";
      if (owner[v] != -1) return "branch sets overlap";
      owner[v] = static_cast<int>(i);
    }
    if (!is_connected_subset(g, it->second)) return "branch set " + spec.names[i] + " is disconnected";
  }
  if (w.edges.size() != spec.edges.size()) return "wrong number of connecting edges";
  for (std::size_t k = 0; k < spec.edges.size(); ++k) {
    auto [a, b] = spec.edges[k];
    auto e = w.edges[k].second;
    if (e >= g.size()) return "edge out of range";
    int oa = owner[g.edge(e).a], ob = owner[g.edge(e).b];
    if (!((oa == a && ob == b) || (oa == b && ob == a))) return "connecting edge does not join its branch sets";
  }
  return "";
}

Json witness_json(const FiniteGraph& g, const MinorWitness& w) {
  Json j;
  j["pattern"] = pattern_name(w.pattern);
  j["branch_sets"] = Json::object();
  for (const auto& [k, vs] : w.branch_sets) {
    std::vector<std::string> ns;
    for (auto v : vs) ns.push_back(g.name(v));
    std::sort(ns.begin(), ns.end());
    j["branch_sets"][k] = ns;
  }
  j["edges"] = Json::array();
  for (const auto& [pe, e] : w.edges) {
    auto [x, y] = g.edge_names(e);
    j["edges"].push_back({{"pattern", {pe.first, pe.second}}, {"host", {x, y}}});
  }
  return j;
}

std::optional<std::vector<VertexId>> circular_ordering_oracle(const FiniteGraph& g) {
  const auto n = g.order();
  if (n > 10) throw InputError("circular_ordering_oracle is limited to 10 vertices");
  auto ord = g.canonical_order();
  if (n <= 3) return ord;
  std::vector<int> pos(n, -1);
  std::vector<VertexId> seq;
  std::vector<std::pair<int, int>> placed_edges;
  // Positions are final once assigned, so crossings are checked as soon as
  // all four endpoints are placed.
  auto rec = [&](auto&& self) -> bool {
    if (seq.size() == n) return true;
    for (auto v : ord) {
      if (pos[v] != -1) continue;
      int p = static_cast<int>(seq.size());
      std::vector<std::pair<int, int>> fresh;
      for (auto u : g.neighbors(v))
        if (pos[u] != -1) fresh.emplace_back(pos[u], p);
      bool ok = true;
      for (auto [a, b] : fresh)
        for (auto [c, d] : placed_edges)
          if (interleave(a, b, c, d)) ok = false;
      if (!ok) continue;
      pos[v] = p;
      seq.push_back(v);
      auto before = placed_edges.size();
      placed_edges.insert(placed_edges.end(), fresh.begin(), fresh.end());
      if (self(self)) return true;
      placed_edges.resize(before);
      seq.pop_back();
      pos[v] = -1;
      if (seq.empty()) break;  // the first position is fixed by rotation
    }
    return false;
  };
  if (rec(rec)) return seq;
  return std::nullopt;
}

OuterplanarVerdict outerplanar_verdict(const FiniteGraph& g) {
  OuterplanarVerdict v{true, "", std::nullopt, std::nullopt};
  if ((v.k4 = find_k4_subgraph(g))) {
    v.outerplanar = false;
    v.reason = "K4 subgraph";
  } else if ((v.k23 = find_minor(g, Pattern::K23))) {
    v.outerplanar = false;
    v.reason = "K23 minor";
  }
  return v;
}

bool is_outerplanar(const FiniteGraph& g) { return outerplanar_verdict(g).outerplanar; }

bool k4_minor_equals_subgraph(const FiniteGraph& g) {
  if (find_minor(g, Pattern::K23)) throw InputError("k4_minor_equals_subgraph: graph has a K23 minor");
  return find_minor(g, Pattern::K4).has_value() == find_k4_subgraph(g).has_value();
}

}  // namespace hamloc
