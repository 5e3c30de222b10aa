#pragma once

#include <string>
#include <vector>

#include "hamloc/graph.hpp"
#include "hamloc/graph_json.hpp"

namespace hamloc {

// Edges whose contraction leaves a 2-connected graph. Needs 2-connected g.
EdgeSet two_contractible_edges(const FiniteGraph& g);

// The unique Hamilton cycle of a 2-connected outerplanar graph.
EdgeSet unique_hamilton_cycle_outerplanar(const FiniteGraph& g);

// Each component of g - k becomes "comp:<smallest name in it>"; simple.
FiniteGraph contraction_quotient(const FiniteGraph& g, const std::vector<VertexId>& k);

bool check_quotient_two_connected(const FiniteGraph& g, const std::vector<VertexId>& k);

struct Struct1Violation {
  std::vector<VertexId> component;
  std::size_t neighborhood_size;
};
std::vector<Struct1Violation> check_struct1(const FiniteGraph& g, const std::vector<VertexId>& k0);

struct DiskLayout {
  std::vector<VertexId> order;
  std::vector<double> angles;
  std::vector<EdgeId> boundary;
  std::vector<EdgeId> chords;
};

DiskLayout disk_layout(const FiniteGraph& g);
// True iff no two chords interleave in the layout's cyclic order.
bool chords_non_crossing(const FiniteGraph& g, const DiskLayout& d);
Json layout_json(const FiniteGraph& g, const DiskLayout& d);
std::string layout_svg(const FiniteGraph& g, const DiskLayout& d);

}  // namespace hamloc
