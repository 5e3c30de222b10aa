#pragma once

#include <cstdint>
#include <vector>

#include "hamloc/graph.hpp"

namespace hamloc {

// Certificate invariant under relabelling: vertex count followed by the
// sorted canonical edge list. Equal certificates <=> isomorphic graphs.
using Certificate = std::vector<std::uint32_t>;

Certificate canonical_certificate(const FiniteGraph& g);
bool are_isomorphic(const FiniteGraph& a, const FiniteGraph& b);

}  // namespace hamloc
