#pragma once

#include <string>
#include <vector>

#include "hamloc/graph.hpp"

namespace hamloc {

inline constexpr int kUnreached = -1;

// BFS distances from s; kUnreached for other components.
std::vector<int> bfs_distances(const FiniteGraph& g, VertexId s);

// Component label per vertex (labels in order of smallest vertex index),
// restricted to vertices with alive[v] (others get -1). Empty alive = all.
std::vector<int> component_labels(const FiniteGraph& g, const std::vector<char>& alive = {});
int component_count(const std::vector<int>& labels);

bool is_connected(const FiniteGraph& g);
bool is_connected_subset(const FiniteGraph& g, const std::vector<VertexId>& s);

FiniteGraph kth_power(const FiniteGraph& g, int k);

bool is_two_connected(const FiniteGraph& g);

// Edges with exactly one endpoint in s.
EdgeSet cut_edges(const FiniteGraph& g, const std::vector<VertexId>& s);

// Every vertex has even degree in d.
bool is_even_cut_parity(const FiniteGraph& g, const EdgeSet& d);
// Reference check by enumerating all vertex subsets containing vertex 0.
bool is_even_cut_parity_bruteforce(const FiniteGraph& g, const EdgeSet& d);

// Replaces h by one fresh vertex named `merged` (default "z", with '
// appended until fresh). Simple result.
FiniteGraph contract_subgraph(const FiniteGraph& g, const std::vector<VertexId>& h,
                              std::string merged = "z");

// True iff d is the edge set of one cycle through every vertex.
bool is_spanning_cycle(const FiniteGraph& g, const EdgeSet& d);

bool is_eulerian(const MultiGraph& m);

struct VSplitResult {
  MultiGraph graph;
  std::string v1;
  std::string v2;
  std::vector<std::int64_t> e1;  // edge ids moved to v1
  std::vector<std::int64_t> e2;  // edge ids moved to v2
};

// All v-splits of a degree-4 vertex into two pairs (3 pairings in order
// {01|23}, {02|13}, {03|12} over incident edges sorted by id), filtered
// to the Eulerian ones.
std::vector<VSplitResult> eulerian_v_splits(const MultiGraph& m, VertexId v);

// Merges v1 and v2 back into one vertex named `name`.
MultiGraph identify_vertices(const MultiGraph& m, const std::string& v1, const std::string& v2,
                             const std::string& name);

// Same vertex names and same edge ids with the same endpoint names.
bool same_multigraph(const MultiGraph& a, const MultiGraph& b);

}  // namespace hamloc
