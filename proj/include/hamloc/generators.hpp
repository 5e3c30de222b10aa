#pragma once

#include <string>

#include "hamloc/graph.hpp"

namespace hamloc {

// Zero-padded decimal so that name order equals numeric order.
std::string index_name(std::size_t i, std::size_t n);

FiniteGraph path_graph(std::size_t n);
FiniteGraph cycle_graph(std::size_t n);
FiniteGraph complete_graph(std::size_t n);
// Sides named a0.. and b0..
FiniteGraph complete_bipartite(std::size_t p, std::size_t q);
// Centre "h", rim 0..n-1.
FiniteGraph wheel_graph(std::size_t rim);
// Centre "z", leaves 0..n-1.
FiniteGraph star_graph(std::size_t leaves);
// K4 minus edge cd: vertices a,b (chord), c,d.
FiniteGraph diamond_graph();
// Centre "z" with legs z-xi-yi.
FiniteGraph subdivided_claw();

}  // namespace hamloc
