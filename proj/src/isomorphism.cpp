#include "hamloc/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hamloc {
namespace {

using Partition = std::vector<std::vector<VertexId>>;

class Canon {
 public:
  explicit Canon(const FiniteGraph& g) : g_(g), n_(g.order()) {
    nb_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) nb_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }

  Certificate run() {
    Partition p;
    if (n_ > 0) {
      std::vector<VertexId> all(n_);
      for (VertexId v = 0; v < n_; ++v) all[v] = v;
      p.push_back(all);
    }
    refine(p);
    search(p);
    Certificate c{static_cast<std::uint32_t>(n_)};
    if (best_) c.insert(c.end(), best_->begin(), best_->end());
    return c;
  }

 private:
  // Splits cells by neighbour counts into each splitter until equitable.
  void refine(Partition& p) const {
    std::vector<int> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (auto v : p[i]) cell_of[v] = static_cast<int>(i);
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        std::vector<int> cnt(n_, 0);
        for (auto x : p[s])
          for (auto y : nb_[x]) ++cnt[y];
        Partition q;
        for (auto& cell : p) {
          if (cell.size() == 1) {
            q.push_back(cell);
            continue;
          }
          std::map<int, std::vector<VertexId>> by;
          for (auto v : cell) by[cnt[v]].push_back(v);
          if (by.size() > 1) changed = true;
          for (auto& [k, vs] : by) q.push_back(std::move(vs));
        }
        if (changed) p = std::move(q);
      }
    }
  }

  bool twins(VertexId a, VertexId b) const {
    auto strip = [&](VertexId x, VertexId y) {
      std::vector<VertexId> r;
      for (auto z : nb_[x])
        if (z != y) r.push_back(z);
      return r;
    };
    return strip(a, b) == strip(b, a);
  }

  void search(const Partition& p) {
    auto it = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (it == p.end()) {
      std::vector<std::uint32_t> lab(n_);
      for (std::size_t i = 0; i < p.size(); ++i) lab[p[i][0]] = static_cast<std::uint32_t>(i);
      std::vector<std::uint32_t> code;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
      for (const auto& e : g_.edges()) es.emplace_back(std::min(lab[e.a], lab[e.b]), std::max(lab[e.a], lab[e.b]));
      std::sort(es.begin(), es.end());
      for (auto [a, b] : es) {
        code.push_back(a);
        code.push_back(b);
      }
      if (!best_ || code < *best_) best_ = std::move(code);
      return;
    }
    std::size_t ci = static_cast<std::size_t>(it - p.begin());
    std::vector<VertexId> tried;
    for (auto v : p[ci]) {
      // Swapping two untouched twins is an automorphism: one branch suffices.
      bool skip = false;
      for (auto t : tried)
        if (twins(t, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      Partition q;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != ci) {
          q.push_back(p[i]);
          continue;
        }
        q.push_back({v});
        std::vector<VertexId> rest;
        for (auto x : p[i])
          if (x != v) rest.push_back(x);
        q.push_back(std::move(rest));
      }
      refine(q);
      search(q);
    }
  }

  const FiniteGraph& g_;
  std::size_t n_;
  std::vector<std::vector<VertexId>> nb_;
  std::optional<std::vector<std::uint32_t>> best_;
};

}  // namespace

Certificate canonical_certificate(const FiniteGraph& g) { return Canon(g).run(); }

bool are_isomorphic(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace hamloc
