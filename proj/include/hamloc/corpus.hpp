#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hamloc/graph.hpp"

namespace hamloc {

using Rng = std::mt19937_64;

// All trees on n vertices up to isomorphism (n >= 1).
std::vector<FiniteGraph> all_trees(std::size_t n);
// All connected graphs on n vertices up to isomorphism (n <= 9).
std::vector<FiniteGraph> all_connected_graphs(std::size_t n);
// All 2-connected outerplanar graphs on n >= 3 vertices up to isomorphism,
// built as non-crossing chord sets of an n-gon and then relabelled by a
// fixed shuffle so the boundary is not the identity order.
std::vector<FiniteGraph> all_outerplanar_two_connected(std::size_t n);

FiniteGraph random_graph(Rng& rng, std::size_t n, double p);
// Ear construction from a random cycle; 3 <= order <= max_n.
FiniteGraph random_two_connected(Rng& rng, std::size_t max_n, double extra_ears = 1.0);
// Random non-crossing chords on a shuffled polygon.
FiniteGraph random_outerplanar_two_connected(Rng& rng, std::size_t n);
// Connected vertex subset of at least min_size vertices (grown from a random seed).
std::vector<VertexId> random_connected_subset(Rng& rng, const FiniteGraph& g, std::size_t min_size);

// Eulerian loopless multigraph from random closed walks; guarantees a
// degree-4 vertex. With degrees_2_4 every vertex has degree 2 or 4.
MultiGraph random_eulerian_multigraph(Rng& rng, std::size_t max_vertices, bool degrees_2_4);

}  // namespace hamloc
