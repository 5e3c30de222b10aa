#include <doctest.h>

#include <random>

#include "hamloc/corpus.hpp"
#include "hamloc/error.hpp"
#include "hamloc/generators.hpp"
#include "hamloc/graph_json.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/isomorphism.hpp"
#include "oracles.hpp"

using namespace hamloc;

namespace {

std::set<std::pair<std::string, std::string>> names(const FiniteGraph& g) {
  std::set<std::pair<std::string, std::string>> s;
  for (EdgeId e = 0; e < g.size(); ++e) s.insert(g.edge_names(e));
  return s;
}

EdgeSet all_edges(const FiniteGraph& g) {
  EdgeSet s(g.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

MultiGraph bowtie() {
  MultiGraph m;
  for (auto v : {"a", "b", "z", "c", "d"}) m.add_vertex(v);
  auto id = [&](const char* s) { return m.id(s); };
  m.add_edge(id("a"), id("b"));
  m.add_edge(id("b"), id("z"));
  m.add_edge(id("z"), id("a"));
  m.add_edge(id("c"), id("d"));
  m.add_edge(id("d"), id("z"));
  m.add_edge(id("z"), id("c"));
  return m;
}

}  // namespace

TEST_CASE("graph rejects loops, parallels and unknown vertices") {
  FiniteGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b");
  CHECK_THROWS_AS(g.add_edge("a", "b"), InputError);
  CHECK_THROWS_AS(g.add_edge("a", "a"), InputError);
  CHECK_THROWS_AS(g.add_edge("a", "q"), InputError);
  CHECK_THROWS_AS(g.add_vertex("a"), InputError);
}

TEST_CASE("kth_power examples") {
  auto p3 = make_graph({{"a", "b"}, {"b", "c"}});
  CHECK(names(kth_power(p3, 2)) == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto p4 = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(names(kth_power(p4, 2)) ==
        std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "c"}, {"b", "d"}});
  auto sq = kth_power(star_graph(3), 2);
  CHECK(sq.size() == 6);
  CHECK(kth_power(p4, 1).size() == 3);
}

TEST_CASE("kth_power agrees with all-pairs distances and is monotone") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    auto g = random_graph(rng, 2 + it % 8, 0.3);
    auto d = oracle::all_pairs(g);
    for (int k = 1; k <= 4; ++k) {
      auto h = kth_power(g, k);
      auto h2 = kth_power(g, k + 1);
      for (VertexId a = 0; a < g.order(); ++a)
        for (VertexId b = a + 1; b < g.order(); ++b) {
          CHECK(h.adjacent(a, b) == (d[a][b] <= k));
          if (h.adjacent(a, b)) CHECK(h2.adjacent(a, b));
        }
    }
  }
}

TEST_CASE("cube of a small-diameter connected graph is complete") {
  Rng rng(5);
  int tested = 0;
  for (int it = 0; it < 300; ++it) {
    auto g = random_graph(rng, 6, 0.5);
    if (!is_connected(g)) continue;
    auto d = oracle::all_pairs(g);
    int diam = 0;
    for (auto& row : d)
      for (int x : row) diam = std::max(diam, x);
    if (diam > 3) continue;
    ++tested;
    CHECK(kth_power(g, 3).size() == 15);
  }
  CHECK(tested > 50);
}

TEST_CASE("is_two_connected examples") {
  CHECK(is_two_connected(complete_graph(3)));
  CHECK_FALSE(is_two_connected(path_graph(3)));
  CHECK(is_two_connected(diamond_graph()));
  CHECK_FALSE(is_two_connected(complete_graph(2)));
}

TEST_CASE("is_two_connected matches vertex-deletion oracle") {
  Rng rng(3);
  for (int it = 0; it < 300; ++it) {
    auto g = random_graph(rng, 1 + it % 8, 0.45);
    bool expect = g.order() >= 3 && oracle::connected_without(g, std::vector<char>(g.order(), 0));
    for (VertexId v = 0; v < g.order() && expect; ++v) {
      std::vector<char> dead(g.order(), 0);
      dead[v] = 1;
      expect = oracle::connected_without(g, dead);
    }
    CHECK(is_two_connected(g) == expect);
  }
}

TEST_CASE("even cut parity examples") {
  auto c4 = cycle_graph(4);
  CHECK(is_even_cut_parity(c4, all_edges(c4)));
  CHECK_FALSE(is_even_cut_parity(c4, {0}));
  auto bow = make_graph({{"a", "b"}, {"b", "z"}, {"z", "a"}, {"c", "d"}, {"d", "z"}, {"z", "c"}});
  CHECK(is_even_cut_parity(bow, all_edges(bow)));
  CHECK(is_even_cut_parity_bruteforce(bow, all_edges(bow)));
}

TEST_CASE("even degree parity equals even intersection with every cut") {
  Rng rng(17);
  for (int it = 0; it < 400; ++it) {
    auto g = random_graph(rng, 2 + it % 7, 0.5);
    EdgeSet d;
    std::bernoulli_distribution coin(0.5);
    for (EdgeId e = 0; e < g.size(); ++e)
      if (coin(rng)) d.push_back(e);
    CHECK(is_even_cut_parity(g, d) == is_even_cut_parity_bruteforce(g, d));
  }
}

TEST_CASE("cut_edges examples") {
  auto c4 = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  auto s = cut_edges(c4, {c4.id("a")});
  CHECK(edge_set_json(c4, s).dump() == R"([["a","b"],["a","d"]])");
  CHECK(cut_edges(c4, {0, 1, 2, 3}).empty());
  auto c6 = cycle_graph(6);
  CHECK(cut_edges(c6, {0, 1, 2}).size() == 2);
}

TEST_CASE("contract_subgraph examples") {
  auto c4 = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  auto t = contract_subgraph(c4, {c4.id("a"), c4.id("b")});
  CHECK(t.order() == 3);
  CHECK(t.size() == 3);
  auto dia = diamond_graph();
  auto p = contract_subgraph(dia, {dia.id("a"), dia.id("b")});
  CHECK(names(p) == std::set<std::pair<std::string, std::string>>{{"c", "z"}, {"d", "z"}});
  CHECK_FALSE(is_two_connected(p));
  auto c5 = cycle_graph(5);
  CHECK(are_isomorphic(contract_subgraph(c5, {0, 1}), cycle_graph(4)));
  CHECK_THROWS_AS(contract_subgraph(c4, {c4.id("a"), c4.id("c")}), InputError);
}

TEST_CASE("is_eulerian examples") {
  MultiGraph c3 = MultiGraph::from_simple(cycle_graph(3));
  CHECK(is_eulerian(c3));
  CHECK_FALSE(is_eulerian(MultiGraph::from_simple(path_graph(2))));
  CHECK(is_eulerian(bowtie()));
}

TEST_CASE("eulerian_v_splits examples") {
  auto bow = bowtie();
  auto splits = eulerian_v_splits(bow, bow.id("z"));
  CHECK(splits.size() == 2);
  auto k5 = MultiGraph::from_simple(complete_graph(5));
  for (VertexId v = 0; v < 5; ++v) CHECK(eulerian_v_splits(k5, v).size() == 3);
  auto c4 = MultiGraph::from_simple(cycle_graph(4));
  CHECK_THROWS_AS(eulerian_v_splits(c4, 0), InputError);
  CHECK_THROWS_AS(eulerian_v_splits(MultiGraph::from_simple(path_graph(3)), 1), InputError);
}

TEST_CASE("random Eulerian multigraphs: at least two Eulerian splits, identification recovers input") {
  Rng rng(2024);
  for (int it = 0; it < 1000; ++it) {
    auto m = random_eulerian_multigraph(rng, 10, false);
    REQUIRE(is_eulerian(m));
    for (VertexId v = 0; v < m.order(); ++v) {
      if (m.degree(v) != 4) continue;
      auto splits = eulerian_v_splits(m, v);
      CHECK(splits.size() >= 2);
      for (const auto& s : splits) {
        CHECK(s.e1.size() == 2);
        CHECK(s.e2.size() == 2);
        CHECK_FALSE(m.find(s.v1).has_value());
        CHECK_FALSE(m.find(s.v2).has_value());
        CHECK(same_multigraph(identify_vertices(s.graph, s.v1, s.v2, m.name(v)), m));
      }
      break;
    }
  }
}

TEST_CASE("JSON round trip and strictness") {
  auto g = diamond_graph();
  auto j = to_json(g);
  auto h = graph_from_json(j);
  CHECK(to_json(h) == j);
  auto bad = j;
  bad["colour"] = "red";
  CHECK_THROWS_AS(graph_from_json(bad), InputError);
  auto m = bowtie();
  auto mj = to_json(m);
  CHECK(to_json(multigraph_from_json(mj)) == mj);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"multi":false,"vertices":["a"],"edges":[["a","a"]]})")),
                  InputError);
  CHECK_THROWS_AS(parse_json_text("{"), InputError);
}

TEST_CASE("canonical certificates identify isomorphic relabellings") {
  Rng rng(8);
  for (int it = 0; it < 200; ++it) {
    auto g = random_graph(rng, 3 + it % 7, 0.4);
    std::vector<VertexId> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    FiniteGraph h;
    for (VertexId v = 0; v < g.order(); ++v) h.add_vertex("v" + std::to_string(v));
    for (const auto& e : g.edges()) h.add_edge(perm[e.a], perm[e.b]);
    CHECK(are_isomorphic(g, h));
  }
  CHECK_FALSE(are_isomorphic(cycle_graph(6), make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}})));
}

TEST_CASE("small corpus sizes match known counts") {
  const std::size_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(all_trees(n).size() == trees[n - 1]);
  const std::size_t conn[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(all_connected_graphs(n).size() == conn[n - 1]);
}
