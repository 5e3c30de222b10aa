#include <doctest.h>

#include <set>

#include "hamloc/corpus.hpp"
#include "hamloc/error.hpp"
#include "hamloc/generators.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/isomorphism.hpp"
#include "hamloc/minor.hpp"
#include "hamloc/outerplanar.hpp"

using namespace hamloc;

namespace {

std::vector<std::string> seq(const FiniteGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

std::set<std::pair<std::string, std::string>> named(const FiniteGraph& g, const EdgeSet& es) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto e : es) out.insert(g.edge_names(e));
  return out;
}

FiniteGraph fan() {
  return make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"h", "a"}, {"h", "b"}, {"h", "c"}, {"h", "d"}});
}

}  // namespace

TEST_CASE("two_contractible_edges examples") {
  CHECK(two_contractible_edges(cycle_graph(5)).size() == 5);
  auto d = diamond_graph();
  CHECK(named(d, two_contractible_edges(d)) ==
        std::set<std::pair<std::string, std::string>>{{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  CHECK(two_contractible_edges(complete_graph(3)).empty());
  CHECK_THROWS_AS(two_contractible_edges(path_graph(4)), InputError);
}

TEST_CASE("unique_hamilton_cycle_outerplanar examples") {
  auto c6 = cycle_graph(6);
  CHECK(unique_hamilton_cycle_outerplanar(c6).size() == 6);
  auto d = diamond_graph();
  auto hc = unique_hamilton_cycle_outerplanar(d);
  auto all = enumerate_hamilton_cycles(d);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == hc);
  CHECK(seq(d, cycle_order(d, hc)) == std::vector<std::string>{"a", "c", "b", "d"});
  auto f = fan();
  auto fc = unique_hamilton_cycle_outerplanar(f);
  CHECK(enumerate_hamilton_cycles(f) == std::vector<EdgeSet>{fc});
  CHECK(named(f, fc) == std::set<std::pair<std::string, std::string>>{
                            {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "h"}, {"a", "h"}});
  CHECK(unique_hamilton_cycle_outerplanar(complete_graph(3)).size() == 3);
  CHECK_THROWS_AS(unique_hamilton_cycle_outerplanar(complete_graph(4)), InputError);
}

TEST_CASE("contraction_quotient examples") {
  auto c6 = cycle_graph(6);
  auto q = contraction_quotient(c6, {0, 1, 2});
  CHECK(are_isomorphic(q, cycle_graph(4)));
  CHECK(q.find("comp:3"));
  auto same = contraction_quotient(c6, {0, 1, 2, 3, 4, 5});
  CHECK(are_isomorphic(same, c6));
  auto d = diamond_graph();
  auto qd = contraction_quotient(d, {d.id("a"), d.id("b")});
  CHECK(are_isomorphic(qd, d));
  CHECK(qd.find("comp:c"));
  CHECK(qd.find("comp:d"));
}

TEST_CASE("check_quotient_two_connected examples") {
  CHECK(check_quotient_two_connected(cycle_graph(6), {0, 1, 2}));
  auto k4 = complete_graph(4);
  CHECK(check_quotient_two_connected(k4, {0, 1, 2}));
  CHECK(check_quotient_two_connected(k4, {1, 2, 3}));
  CHECK_THROWS_AS(check_quotient_two_connected(cycle_graph(6), {0, 2, 4}), InputError);
  CHECK_THROWS_AS(check_quotient_two_connected(cycle_graph(6), {0, 1}), InputError);
}

TEST_CASE("check_struct1 examples") {
  CHECK(check_struct1(cycle_graph(8), {0}).empty());
  auto d = diamond_graph();
  CHECK(check_struct1(d, {d.id("c")}).empty());
  CHECK_THROWS_AS(check_struct1(complete_bipartite(2, 3), {0}), InputError);
}

TEST_CASE("disk_layout examples") {
  auto c4 = cycle_graph(4);
  auto l = disk_layout(c4);
  CHECK(l.boundary.size() == 4);
  CHECK(l.chords.empty());
  auto d = diamond_graph();
  auto ld = disk_layout(d);
  CHECK(seq(d, ld.order) == std::vector<std::string>{"a", "c", "b", "d"});
  REQUIRE(ld.chords.size() == 1);
  CHECK(d.edge_names(ld.chords[0]) == std::pair<std::string, std::string>{"a", "b"});
  auto f = fan();
  auto lf = disk_layout(f);
  CHECK(named(f, lf.chords) == std::set<std::pair<std::string, std::string>>{{"b", "h"}, {"c", "h"}});
  CHECK(chords_non_crossing(f, lf));
  for (std::size_t i = 1; i < lf.angles.size(); ++i) CHECK(lf.angles[i] > lf.angles[i - 1]);
  auto svg = layout_svg(f, lf);
  CHECK(svg.find("width=\"512\"") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(layout_json(f, lf)["chords"].size() == 2);
}

TEST_CASE("2-connected outerplanar graphs up to 7 vertices: one Hamilton cycle, the 2-contractible edges") {
  for (std::size_t n = 4; n <= 7; ++n)
    for (const auto& g : all_outerplanar_two_connected(n)) {
      REQUIRE(is_two_connected(g));
      REQUIRE(is_outerplanar(g));
      auto all = enumerate_hamilton_cycles(g);
      REQUIRE(all.size() == 1);
      CHECK(all[0] == two_contractible_edges(g));
      CHECK(chords_non_crossing(g, disk_layout(g)));
    }
}

TEST_CASE("dissection corpus equals the outerplanar 2-connected graphs of the connected corpus") {
  for (std::size_t n = 3; n <= 7; ++n) {
    std::set<Certificate> a, b;
    for (const auto& g : all_outerplanar_two_connected(n)) a.insert(canonical_certificate(g));
    for (const auto& g : all_connected_graphs(n))
      if (is_two_connected(g) && is_outerplanar(g)) b.insert(canonical_certificate(g));
    CHECK(a == b);
  }
}

TEST_CASE("K4 is a negative control with three Hamilton cycles") {
  CHECK(enumerate_hamilton_cycles(complete_graph(4)).size() == 3);
}

TEST_CASE("random instances: quotient 2-connectivity and two-neighbour components") {
  Rng rng(31337);
  int struct_runs = 0;
  for (int it = 0; it < 200; ++it) {
    auto g = random_two_connected(rng, 10);
    if (g.order() < 3) continue;
    auto k = random_connected_subset(rng, g, 3);
    if (k.size() >= 3) CHECK(check_quotient_two_connected(g, k));
    if (!find_minor(g, Pattern::K23)) {
      ++struct_runs;
      CHECK(check_struct1(g, random_connected_subset(rng, g, 1)).empty());
    }
  }
  CHECK(struct_runs > 10);
}
