#include <doctest.h>

#include "hamloc/corpus.hpp"
#include "hamloc/generators.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "oracles.hpp"

using namespace hamloc;

namespace {

std::set<std::set<std::pair<VertexId, VertexId>>> as_pairs(const FiniteGraph& g, const std::vector<EdgeSet>& cs) {
  std::set<std::set<std::pair<VertexId, VertexId>>> out;
  for (const auto& c : cs) {
    std::set<std::pair<VertexId, VertexId>> s;
    for (auto e : c) s.insert({g.edge(e).a, g.edge(e).b});
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("hamilton path examples") {
  auto p3 = make_graph({{"a", "b"}, {"b", "c"}});
  auto ps = enumerate_hamilton_paths(p3);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(enumerate_hamilton_paths(complete_graph(3)).size() == 3);
  CHECK(oracle::hamilton_path_count(complete_graph(3)) == 3);
  CHECK(enumerate_hamilton_paths(star_graph(3)).empty());
  CHECK(enumerate_hamilton_paths(path_graph(1)).size() == 1);
}

TEST_CASE("hamilton cycle examples") {
  CHECK(enumerate_hamilton_cycles(cycle_graph(5)).size() == 1);
  CHECK(enumerate_hamilton_cycles(complete_graph(4)).size() == 3);
  CHECK(oracle::hamilton_cycles(complete_graph(4)).size() == 3);
  CHECK(enumerate_hamilton_cycles(complete_bipartite(2, 3)).empty());
  CHECK(enumerate_hamilton_cycles(path_graph(2)).empty());
}

TEST_CASE("multigraph parallel edges give distinct cycles") {
  MultiGraph m;
  for (auto v : {"a", "b", "c"}) m.add_vertex(v);
  m.add_edge(0, 1);
  m.add_edge(0, 1);
  m.add_edge(1, 2);
  m.add_edge(2, 0);
  auto cs = enumerate_hamilton_cycles(m);
  CHECK(cs.size() == 2);
  CHECK(cs[0] == IdCycle{0, 2, 3});
  CHECK(cs[1] == IdCycle{1, 2, 3});
}

TEST_CASE("cycle and path enumeration agree with permutation brute force") {
  Rng rng(42);
  for (int it = 0; it < 300; ++it) {
    auto g = random_graph(rng, 3 + it % 6, 0.55);
    auto cs = enumerate_hamilton_cycles(g);
    CHECK(as_pairs(g, cs) == oracle::hamilton_cycles(g));
    CHECK(cs.size() == oracle::hamilton_cycles(g).size());
    for (const auto& c : cs) CHECK(is_spanning_cycle(g, c));
    CHECK(enumerate_hamilton_paths(g).size() == oracle::hamilton_path_count(g));
  }
}

TEST_CASE("serial and parallel kernels return identical lists") {
  Rng rng(7);
  for (int it = 0; it < 60; ++it) {
    auto g = random_graph(rng, 9, 0.6);
    auto m = MultiGraph::from_simple(g);
    CHECK(enumerate_hamilton_cycles_serial(m) == enumerate_hamilton_cycles(m));
  }
  auto k8 = MultiGraph::from_simple(complete_graph(8));
  auto par = enumerate_hamilton_cycles(k8);
  CHECK(par.size() == 2520);
  CHECK(par == enumerate_hamilton_cycles_serial(k8));
}

TEST_CASE("hamiltonian connected graphs on at most 7 vertices are 2-connected") {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& g : all_connected_graphs(n))
      if (has_hamilton_cycle(g)) CHECK(is_two_connected(g));
}

TEST_CASE("cycle_order walks the cycle from the smallest vertex") {
  auto c = cycle_graph(5);
  auto cs = enumerate_hamilton_cycles(c);
  CHECK(cycle_order(c, cs[0]) == std::vector<VertexId>{0, 1, 2, 3, 4});
}
