#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamloc/graph.hpp"

namespace hamloc {

// A Hamilton cycle of a multigraph as sorted edge ids.
using IdCycle = std::vector<std::int64_t>;

struct HamiltonOptions {
  // 0 = enumerate all. A nonzero limit forces the serial kernel.
  std::size_t limit = 0;
  // Parallel kernel only: number of subproblems to aim for per thread.
  int tasks_per_thread = 8;
};

// Serial reference kernel. Results sorted lexicographically.
std::vector<IdCycle> enumerate_hamilton_cycles_serial(const MultiGraph& m,
                                                      const HamiltonOptions& opt = {});
// OpenMP kernel: splits the branching tree, solves subproblems in parallel.
// Same result as the serial kernel. Falls back to serial inside an active
// parallel region.
std::vector<IdCycle> enumerate_hamilton_cycles(const MultiGraph& m, const HamiltonOptions& opt = {});
std::vector<EdgeSet> enumerate_hamilton_cycles(const FiniteGraph& g, const HamiltonOptions& opt = {});

bool has_hamilton_cycle(const FiniteGraph& g);

// Each path once (oriented with the smaller end name first), sorted by
// name sequence.
std::vector<std::vector<VertexId>> enumerate_hamilton_paths(const FiniteGraph& g);

// Vertex sequence of a spanning cycle, starting at the canonically
// smallest vertex and continuing towards its smaller-named cycle neighbour.
std::vector<VertexId> cycle_order(const FiniteGraph& g, const EdgeSet& cycle);

}  // namespace hamloc
