#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamloc/graph_json.hpp"

namespace hamloc {

// Outcome of one exhaustive or randomized property sweep. `first` holds the
// first violation in enumeration order, so serial and parallel runs agree.
struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first;
  bool ok() const { return violations == 0; }
};

// Trees with min_n..max_n vertices: caterpillar iff no S(K13) iff square
// Hamiltonian, and the constructed square cycle is a spanning cycle.
SuiteResult suite_caterpillar(std::size_t min_n, std::size_t max_n, bool parallel);
// Connected graphs with at most max_n vertices: minor test vs cyclic order oracle.
SuiteResult suite_outerplanar(std::size_t max_n, bool parallel);
// 2-connected outerplanar graphs with min_n..max_n vertices: exactly one
// Hamilton cycle, equal to the 2-contractible edges; K3 checked separately.
SuiteResult suite_unique_cycle(std::size_t min_n, std::size_t max_n, bool parallel);
// Connected K23-minor-free graphs with at most max_n vertices: K4 minor iff K4 subgraph.
SuiteResult suite_k4(std::size_t max_n, bool parallel);
// 2-connected outerplanar graphs with 3..max_n vertices: crossing-free layout.
SuiteResult suite_layout(std::size_t max_n, bool parallel);
// Random Eulerian multigraphs: >= 2 Eulerian splits at a degree-4 vertex;
// split_to_cycle ends in one cycle on {2,4}-degree inputs.
SuiteResult suite_euler_splits(std::uint64_t seed, std::size_t count, std::size_t max_vertices);
SuiteResult suite_split_to_cycle(std::uint64_t seed, std::size_t count, std::size_t max_vertices);
// Random valid inputs for check_struct1 and check_quotient_two_connected.
SuiteResult suite_struct1(std::uint64_t seed, std::size_t count, std::size_t max_vertices);
SuiteResult suite_quotient(std::uint64_t seed, std::size_t count, std::size_t max_vertices);

Json suite_json(const SuiteResult& r);

}  // namespace hamloc
