#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hamloc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId a;
  VertexId b;
};

// Sorted ascending, no duplicates.
using EdgeSet = std::vector<EdgeId>;

// Simple undirected graph. Vertices carry unique string names; indices are
// dense and stable. Canonical order of vertices is by name.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId a, VertexId b);
  EdgeId add_edge(std::string_view a, std::string_view b);
  // Adds the edge unless present; returns its id either way.
  EdgeId ensure_edge(VertexId a, VertexId b);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  std::span<const EdgeId> incident(VertexId v) const { return inc_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return edge_between(a, b).has_value(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }

  // Vertex indices sorted by name.
  std::vector<VertexId> canonical_order() const;
  // Edge endpoints by name, smaller name first.
  std::pair<std::string, std::string> edge_names(EdgeId e) const;

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

struct MultiEdge {
  std::int64_t id;
  VertexId a;
  VertexId b;
};

// Loopless multigraph; parallel edges are distinguished by integer ids.
class MultiGraph {
 public:
  MultiGraph() = default;
  static MultiGraph from_simple(const FiniteGraph& g);

  VertexId add_vertex(std::string name);
  // Assigns the next free id (one more than the largest so far).
  std::int64_t add_edge(VertexId a, VertexId b);
  void add_edge_with_id(std::int64_t id, VertexId a, VertexId b);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edges_.size(); }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;

  // Positions into edges(), not edge ids.
  std::span<const std::size_t> incident(VertexId v) const { return inc_[v]; }
  std::size_t degree(VertexId v) const { return inc_[v].size(); }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  std::optional<std::size_t> position(std::int64_t edge_id) const;
  VertexId other(std::size_t pos, VertexId v) const {
    return edges_[pos].a == v ? edges_[pos].b : edges_[pos].a;
  }
  std::vector<VertexId> canonical_order() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<MultiEdge> edges_;
  std::unordered_map<std::int64_t, std::size_t> pos_;
  std::int64_t next_id_ = 0;
};

// Builds a graph from name lists; convenient in tests and generators.
FiniteGraph make_graph(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges);
// Same, with vertices inferred from edges in first-seen order.
FiniteGraph make_graph(const std::vector<std::pair<std::string, std::string>>& edges);

// Induced subgraph on the given vertices (kept in the given order).
FiniteGraph induced_subgraph(const FiniteGraph& g, const std::vector<VertexId>& vs);

}  // namespace hamloc
