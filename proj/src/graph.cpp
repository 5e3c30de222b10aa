#include "hamloc/graph.hpp"

#include <algorithm>
#include <numeric>

#include "hamloc/error.hpp"

namespace hamloc {

VertexId FiniteGraph::add_vertex(std::string name) {
  auto v = static_cast<VertexId>(names_.size());
  auto [it, fresh] = index_.emplace(name, v);
  if (!fresh) throw InputError("duplicate vertex '" + name + "'");
  names_.push_back(std::move(name));
  adj_.emplace_back();
  inc_.emplace_back();
  return v;
}

EdgeId FiniteGraph::add_edge(VertexId a, VertexId b) {
  if (a >= order() || b >= order()) throw InputError("edge endpoint out of range");
  if (a == b) throw InputError("loop at '" + names_[a] + "'");
  if (edge_index_.count(key(a, b)))
    throw InputError("parallel edge " + names_[a] + "-" + names_[b]);
  return ensure_edge(a, b);
}

EdgeId FiniteGraph::ensure_edge(VertexId a, VertexId b) {
  if (a == b) throw InputError("loop at '" + names_[a] + "'");
  auto it = edge_index_.find(key(a, b));
  if (it != edge_index_.end()) return it->second;
  auto e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({std::min(a, b), std::max(a, b)});
  edge_index_.emplace(key(a, b), e);
  auto put = [&](VertexId x, VertexId y) {
    auto& l = adj_[x];
    auto pos = std::lower_bound(l.begin(), l.end(), y);
    inc_[x].insert(inc_[x].begin() + (pos - l.begin()), e);
    l.insert(pos, y);
  };
  put(a, b);
  put(b, a);
  return e;
}

EdgeId FiniteGraph::add_edge(std::string_view a, std::string_view b) {
  return add_edge(id(a), id(b));
}

std::optional<VertexId> FiniteGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId FiniteGraph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::optional<EdgeId> FiniteGraph::edge_between(VertexId a, VertexId b) const {
  auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> FiniteGraph::canonical_order() const {
  std::vector<VertexId> vs(order());
  std::iota(vs.begin(), vs.end(), 0);
  std::sort(vs.begin(), vs.end(), [&](VertexId x, VertexId y) { return names_[x] < names_[y]; });
  return vs;
}

std::pair<std::string, std::string> FiniteGraph::edge_names(EdgeId e) const {
  const auto& x = names_[edges_[e].a];
  const auto& y = names_[edges_[e].b];
  return x < y ? std::pair{x, y} : std::pair{y, x};
}

MultiGraph MultiGraph::from_simple(const FiniteGraph& g) {
  MultiGraph m;
  for (VertexId v = 0; v < g.order(); ++v) m.add_vertex(g.name(v));
  for (EdgeId e = 0; e < g.size(); ++e) m.add_edge_with_id(e, g.edge(e).a, g.edge(e).b);
  return m;
}

VertexId MultiGraph::add_vertex(std::string name) {
  auto v = static_cast<VertexId>(names_.size());
  auto [it, fresh] = index_.emplace(name, v);
  if (!fresh) throw InputError("duplicate vertex '" + name + "'");
  names_.push_back(std::move(name));
  inc_.emplace_back();
  return v;
}

std::int64_t MultiGraph::add_edge(VertexId a, VertexId b) {
  auto id = next_id_;
  add_edge_with_id(id, a, b);
  return id;
}

void MultiGraph::add_edge_with_id(std::int64_t id, VertexId a, VertexId b) {
  if (a >= order() || b >= order()) throw InputError("edge endpoint out of range");
  if (a == b) throw InputError("loop at '" + names_[a] + "'");
  if (pos_.count(id)) throw InputError("duplicate edge id " + std::to_string(id));
  auto p = edges_.size();
  edges_.push_back({id, a, b});
  pos_.emplace(id, p);
  inc_[a].push_back(p);
  inc_[b].push_back(p);
  next_id_ = std::max(next_id_, id + 1);
}

std::optional<VertexId> MultiGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId MultiGraph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::optional<std::size_t> MultiGraph::position(std::int64_t edge_id) const {
  auto it = pos_.find(edge_id);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> MultiGraph::canonical_order() const {
  std::vector<VertexId> vs(order());
  std::iota(vs.begin(), vs.end(), 0);
  std::sort(vs.begin(), vs.end(), [&](VertexId x, VertexId y) { return names_[x] < names_[y]; });
  return vs;
}

FiniteGraph make_graph(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  FiniteGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

FiniteGraph make_graph(const std::vector<std::pair<std::string, std::string>>& edges) {
  FiniteGraph g;
  for (const auto& [a, b] : edges) {
    if (!g.find(a)) g.add_vertex(a);
    if (!g.find(b)) g.add_vertex(b);
    g.add_edge(a, b);
  }
  return g;
}

FiniteGraph induced_subgraph(const FiniteGraph& g, const std::vector<VertexId>& vs) {
  FiniteGraph h;
  std::vector<VertexId> map(g.order(), UINT32_MAX);
  for (auto v : vs) map[v] = h.add_vertex(g.name(v));
  for (const auto& e : g.edges())
    if (map[e.a] != UINT32_MAX && map[e.b] != UINT32_MAX) h.add_edge(map[e.a], map[e.b]);
  return h;
}

}  // namespace hamloc
