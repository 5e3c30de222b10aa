#include <doctest.h>

#include <set>

#include "hamloc/caterpillar.hpp"
#include "hamloc/corpus.hpp"
#include "hamloc/error.hpp"
#include "hamloc/generators.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "oracles.hpp"

using namespace hamloc;

namespace {

std::vector<std::string> seq(const FiniteGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

std::vector<std::set<std::string>> class_names(const FiniteGraph& t, const CaterpillarPartition& p) {
  std::vector<std::set<std::string>> out;
  for (const auto& c : p.classes) {
    std::set<std::string> s;
    for (auto v : c) s.insert(t.name(v));
    out.push_back(s);
  }
  return out;
}

// Leaf deletion leaves a path iff no vertex has three non-leaf neighbours.
bool caterpillar_oracle(const FiniteGraph& t) {
  for (VertexId v = 0; v < t.order(); ++v) {
    int k = 0;
    for (auto x : t.neighbors(v)) k += t.degree(x) >= 2;
    if (k >= 3) return false;
  }
  return true;
}

// Independent check of one cover: square edges by Floyd distances.
void verify_cover(const FiniteGraph& t, const CaterpillarPartition& p, VertexId v, VertexId w,
                  const CoverReport& r) {
  auto d = oracle::all_pairs(t);
  for (const auto& [name, path] : r.paths) {
    std::set<VertexId> s(path.begin(), path.end());
    REQUIRE(s.size() == path.size());
    for (std::size_t k = 1; k < path.size(); ++k) REQUIRE(d[path[k - 1]][path[k]] <= 2);
  }
  auto cover = [&](const char* a, const char* b) {
    if (!r.paths.count(a)) return;
    std::multiset<VertexId> all;
    for (auto x : r.paths.at(a)) all.insert(x);
    for (auto x : r.paths.at(b)) all.insert(x);
    REQUIRE(all.size() == t.order());
    REQUIRE(std::set<VertexId>(all.begin(), all.end()).size() == t.order());
  };
  const int i = p.class_of[v], j = p.class_of[w];
  auto below = [&](const char* a) {
    if (r.paths.count(a))
      for (auto x : r.paths.at(a)) REQUIRE(p.class_of[x] >= i);
  };
  auto above = [&](const char* a) {
    if (r.paths.count(a))
      for (auto x : r.paths.at(a)) REQUIRE(p.class_of[x] <= j);
  };
  REQUIRE(r.even == (d[v][w] % 2 == 0));
  if (r.even) {
    REQUIRE(r.paths.at("P").front() == v);
    if (v != w) REQUIRE(r.paths.at("P").back() == w);
    cover("P", "D");
    cover("R_v", "R_w");
    if (r.paths.count("R_v")) {
      REQUIRE(r.paths.at("R_v").front() == v);
      REQUIRE(r.paths.at("R_w").front() == w);
    }
    above("R_v");
    below("R_w");
  } else {
    cover("R_v", "R_w");
    cover("R'_v", "R'_w");
    REQUIRE(r.paths.at("R_v").front() == v);
    REQUIRE(r.paths.at("R'_v").front() == v);
    REQUIRE(r.paths.at("R_w").front() == w);
    REQUIRE(r.paths.at("R'_w").front() == w);
    above("R_v");
    above("R'_w");
    below("R_w");
    below("R'_v");
  }
}

// Spanning caterpillar existence by trying every (n-1)-edge subset.
bool spanning_caterpillar_oracle(const FiniteGraph& g) {
  const auto n = g.order(), m = g.size();
  if (n <= 1) return n == 1;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), 1);
  std::sort(pick.begin(), pick.end());
  do {
    FiniteGraph t;
    for (VertexId v = 0; v < n; ++v) t.add_vertex(g.name(v));
    for (std::size_t e = 0; e < m; ++e)
      if (pick[e]) t.add_edge(g.edge(e).a, g.edge(e).b);
    if (is_connected(t) && caterpillar_oracle(t)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

TEST_CASE("is_caterpillar examples") {
  auto p5 = path_graph(5);
  auto spine = is_caterpillar(p5);
  REQUIRE(spine);
  CHECK(seq(p5, *spine) == std::vector<std::string>{"1", "2", "3"});
  auto star = star_graph(3);
  REQUIRE(is_caterpillar(star));
  CHECK(seq(star, *is_caterpillar(star)) == std::vector<std::string>{"z"});
  CHECK_FALSE(is_caterpillar(subdivided_claw()));
  CHECK(is_caterpillar(path_graph(2))->empty());
  CHECK(is_caterpillar(path_graph(1))->size() == 1);
  CHECK_THROWS_AS(is_caterpillar(cycle_graph(4)), InputError);
}

TEST_CASE("find_s_k13 examples") {
  auto s = subdivided_claw();
  auto hit = find_s_k13(s);
  REQUIRE(hit);
  CHECK(s.name(hit->center) == "z");
  std::set<VertexId> all{hit->center};
  for (int k = 0; k < 3; ++k) {
    CHECK(s.adjacent(hit->center, hit->middle[k]));
    CHECK(s.adjacent(hit->middle[k], hit->end[k]));
    all.insert(hit->middle[k]);
    all.insert(hit->end[k]);
  }
  CHECK(all.size() == 7);
  CHECK_FALSE(find_s_k13(path_graph(8)));
  auto spider = make_graph({{"z", "a1"}, {"a1", "a2"}, {"z", "b1"}, {"b1", "b2"}, {"z", "c1"}});
  CHECK_FALSE(find_s_k13(spider));
}

TEST_CASE("caterpillar_partition examples") {
  auto t = make_graph({{"v1", "v2"}, {"v2", "v3"}, {"l1", "v1"}, {"l2", "v2"}});
  auto p = caterpillar_partition(t);
  CHECK(class_names(t, p) == std::vector<std::set<std::string>>{{"v1"}, {"v2", "l1"}, {"l2", "v3"}});
  CHECK(t.name(*p.jumping[0]) == "v1");
  CHECK(t.name(*p.jumping[1]) == "v2");
  CHECK_FALSE(p.jumping[2]);

  auto abc = make_graph({{"a", "b"}, {"b", "c"}});
  CHECK(class_names(abc, caterpillar_partition(abc)) == std::vector<std::set<std::string>>{{"b"}, {"a", "c"}});
  auto star = star_graph(3);
  CHECK(class_names(star, caterpillar_partition(star)) ==
        std::vector<std::set<std::string>>{{"z"}, {"0", "1", "2"}});
  auto edge = make_graph({{"b", "a"}});
  CHECK(class_names(edge, caterpillar_partition(edge)) == std::vector<std::set<std::string>>{{"a"}, {"b"}});
  CHECK_THROWS_AS(caterpillar_partition(subdivided_claw()), InputError);
}

TEST_CASE("square_string examples") {
  // Spine 0-1-2-3-4-5 with two leaves on each spine vertex 1..4.
  FiniteGraph t = path_graph(6);
  for (int s = 1; s <= 4; ++s)
    for (int k = 0; k < 2; ++k) {
      auto l = t.add_vertex("x" + std::to_string(s) + std::to_string(k));
      t.add_edge(t.id(std::to_string(s)), l);
    }
  auto p = caterpillar_partition(t);
  // Classes: {1} {2,0,x10,x11} {3,x20,x21} {4,x30,x31} {5,x40,x41}.
  CHECK(p.size() == 5);
  auto x10 = t.id("x10"), two = t.id("2");
  auto one_class = square_string(t, p, {x10, x10, true, true});
  CHECK(one_class.size() == 4);
  CHECK(one_class.front() == x10);
  auto d = oracle::all_pairs(t);
  for (std::size_t k = 1; k < one_class.size(); ++k) CHECK(d[one_class[k - 1]][one_class[k]] <= 2);

  // (1, x40) open both: visits class 2 fully, only the endpoints of 0 and 4.
  auto one = t.id("1"), x40 = t.id("x40");
  auto s = square_string(t, p, {one, x40, false, false});
  std::set<int> classes;
  for (auto v : s) classes.insert(p.class_of[v]);
  CHECK(classes == std::set<int>{0, 2, 4});
  CHECK(s.size() == 2 + p.classes[2].size());
  CHECK(s.front() == one);
  CHECK(s.back() == x40);
  for (std::size_t k = 1; k < s.size(); ++k) CHECK(d[s[k - 1]][s[k]] <= 2);
  auto closed = square_string(t, p, {t.id("x20"), x40, true, true});
  CHECK(closed.size() == 3 + 3);

  // Same-parity classes only: classes 2 and 4 sit two apart.
  CHECK_THROWS_AS(square_string(t, p, {two, t.id("3"), false, false}), InputError);
  // A left-open string must start at the jumping vertex.
  CHECK_THROWS_AS(square_string(t, p, {x10, t.id("4"), false, false}), InputError);
}

TEST_CASE("hamilton_cycle_of_square examples") {
  auto p3 = path_graph(3);
  auto r = hamilton_cycle_of_square(p3);
  CHECK(r.cycle.size() == 3);
  CHECK(is_spanning_cycle(r.square, r.cycle));
  auto star = star_graph(3);
  auto rs = hamilton_cycle_of_square(star);
  CHECK(rs.cycle.size() == 4);
  CHECK(rs.square.size() == 6);
  CHECK(is_spanning_cycle(rs.square, rs.cycle));
  CHECK_THROWS_AS(hamilton_cycle_of_square(subdivided_claw()), InputError);
  CHECK_THROWS_AS(hamilton_cycle_of_square(path_graph(2)), InputError);
  CHECK(enumerate_hamilton_cycles(kth_power(subdivided_claw(), 2)).empty());
}

TEST_CASE("three-way equivalence on all trees up to 10 vertices") {
  int caterpillars = 0, trees = 0;
  for (std::size_t n = 3; n <= 10; ++n)
    for (const auto& t : all_trees(n)) {
      ++trees;
      const bool cat = is_caterpillar(t).has_value();
      CHECK(cat == caterpillar_oracle(t));
      CHECK(cat == !find_s_k13(t).has_value());
      auto sq = kth_power(t, 2);
      CHECK(cat == has_hamilton_cycle(sq));
      if (!cat) continue;
      ++caterpillars;
      auto p = caterpillar_partition(t);
      CHECK(check_partition(t, p).empty());
      auto r = hamilton_cycle_of_square(t);
      CHECK(oracle::hamilton_cycles(t).empty());
      auto d = oracle::all_pairs(t);
      std::set<VertexId> seen(r.order.begin(), r.order.end());
      CHECK(seen.size() == n);
      for (std::size_t k = 0; k < n; ++k) CHECK(d[r.order[k]][r.order[(k + 1) % n]] <= 2);
      CHECK(is_spanning_cycle(r.square, r.cycle));
    }
  CHECK(trees == 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  CHECK(caterpillars > 0);
}

TEST_CASE("decomp_covers examples") {
  auto p6 = path_graph(6);
  auto p = caterpillar_partition(p6);
  auto v = p6.id("1"), w = p6.id("3");
  auto r = decomp_covers(p6, p, v, w);
  CHECK(r.even);
  CHECK(seq(p6, r.paths.at("P")) == std::vector<std::string>{"1", "3"});
  CHECK(r.paths.at("D").size() == 4);
  verify_cover(p6, p, v, w, r);

  auto same = decomp_covers(p6, p, v, v);
  CHECK(seq(p6, same.paths.at("P")).front() == "1");
  verify_cover(p6, p, v, v, same);

  auto odd = decomp_covers(p6, p, p6.id("1"), p6.id("4"));
  CHECK_FALSE(odd.even);
  CHECK(odd.paths.size() == 4);
  verify_cover(p6, p, p6.id("1"), p6.id("4"), odd);
  auto j = cover_json(p6, odd);
  CHECK(j["parity"] == "odd");
  CHECK(j["paths"]["R_v"][0] == "1");

  CHECK_THROWS_AS(decomp_covers(p6, p, w, v), InputError);
}

TEST_CASE("decomp_covers on every caterpillar up to 10 vertices and every ordered pair") {
  std::size_t covers = 0, with_rays = 0;
  for (std::size_t n = 2; n <= 10; ++n)
    for (const auto& t : all_trees(n)) {
      if (!is_caterpillar(t)) continue;
      auto p = caterpillar_partition(t);
      for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w) {
          if (p.class_of[v] > p.class_of[w]) {
            CHECK_THROWS_AS(decomp_covers(t, p, v, w), InputError);
            continue;
          }
          auto r = decomp_covers(t, p, v, w);
          verify_cover(t, p, v, w, r);
          ++covers;
          if (r.paths.count("R_v")) ++with_rays;
          if (!r.paths.count("R_v")) {
            CHECK(p.class_of[v] == p.class_of[w]);
            CHECK(!r.note.empty());
          }
        }
    }
  CHECK(covers > 1000);
  CHECK(with_rays > covers / 2);
}

TEST_CASE("spanning_caterpillar_search examples") {
  auto p7 = path_graph(7);
  auto t = spanning_caterpillar_search(p7);
  REQUIRE(t);
  CHECK(t->size() == 6);
  for (const auto& e : p7.edges()) CHECK(t->adjacent(e.a, e.b));
  auto c6 = cycle_graph(6);
  auto tc = spanning_caterpillar_search(c6);
  REQUIRE(tc);
  CHECK(tc->size() == 5);
  CHECK(is_connected(*tc));
  CHECK(find_s_k13(*tc) == std::nullopt);
  for (VertexId v = 0; v < 6; ++v) CHECK(tc->degree(v) <= 2);
  CHECK_FALSE(spanning_caterpillar_search(subdivided_claw()));
  CHECK_THROWS_AS(spanning_caterpillar_search(path_graph(21)), InputError);
}

TEST_CASE("spanning_caterpillar_search agrees with subset enumeration") {
  Rng rng(7);
  int yes = 0, no = 0;
  for (int it = 0; it < 3000; ++it) {
    std::uniform_int_distribution<int> nd(5, 9);
    auto g = random_graph(rng, static_cast<std::size_t>(nd(rng)), 0.25);
    if (!is_connected(g) || g.size() > 13) continue;
    auto t = spanning_caterpillar_search(g);
    CHECK(t.has_value() == spanning_caterpillar_oracle(g));
    if (!t) {
      ++no;
      continue;
    }
    ++yes;
    CHECK(t->order() == g.order());
    CHECK(t->size() + 1 == g.order());
    CHECK(is_connected(*t));
    CHECK(is_caterpillar(*t).has_value());
    for (const auto& e : t->edges()) CHECK(g.adjacent(e.a, e.b));
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("interval_path examples") {
  auto p8 = path_graph(8);
  auto p = caterpillar_partition(p8);
  auto path = interval_path(p8, p8, p, p8.id("3"), p8.id("5"), p8.id("1"), p8.id("7"));
  CHECK(seq(p8, path) == std::vector<std::string>{"3", "4", "5"});

  auto c8 = cycle_graph(8);
  auto t = path_graph(8);
  auto pt = caterpillar_partition(t);
  auto cp = interval_path(c8, t, pt, c8.id("2"), c8.id("5"), c8.id("1"), c8.id("6"));
  auto lo = pt.class_of[t.id("1")], hi = pt.class_of[t.id("6")];
  CHECK(cp.front() == c8.id("2"));
  CHECK(cp.back() == c8.id("5"));
  CHECK(cp.size() == 4);
  for (auto v : cp) {
    CHECK(pt.class_of[t.id(c8.name(v))] >= lo);
    CHECK(pt.class_of[t.id(c8.name(v))] <= hi);
  }
  for (std::size_t k = 1; k < cp.size(); ++k) CHECK(c8.adjacent(cp[k - 1], cp[k]));
  CHECK_THROWS_AS(interval_path(p8, p8, p, p8.id("1"), p8.id("5"), p8.id("1"), p8.id("7")), InputError);
}

TEST_CASE("split_to_cycle examples") {
  auto c5 = MultiGraph::from_simple(cycle_graph(5));
  auto r = split_to_cycle(c5);
  CHECK(r.history.empty());
  CHECK(same_multigraph(r.cycle, c5));

  MultiGraph bow;
  for (auto n : {"a", "b", "c", "d", "z"}) bow.add_vertex(n);
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"z", "a"}, {"a", "b"}, {"b", "z"}, {"z", "c"}, {"c", "d"}, {"d", "z"}})
    bow.add_edge(bow.id(a), bow.id(b));
  auto rb = split_to_cycle(bow);
  CHECK(rb.history.size() == 1);
  CHECK(rb.cycle.order() == 6);
  CHECK(rb.cycle.size() == 6);

  // Two degree-4 vertices joined by four parallel paths.
  MultiGraph theta;
  for (auto n : {"p", "q", "m1", "m2"}) theta.add_vertex(n);
  theta.add_edge(theta.id("p"), theta.id("q"));
  theta.add_edge(theta.id("p"), theta.id("q"));
  theta.add_edge(theta.id("p"), theta.id("m1"));
  theta.add_edge(theta.id("m1"), theta.id("q"));
  theta.add_edge(theta.id("p"), theta.id("m2"));
  theta.add_edge(theta.id("m2"), theta.id("q"));
  auto rt = split_to_cycle(theta);
  CHECK(rt.history.size() == 2);
  CHECK(is_eulerian(rt.cycle));
  for (VertexId v = 0; v < rt.cycle.order(); ++v) CHECK(rt.cycle.degree(v) == 2);

  CHECK_THROWS_AS(split_to_cycle(MultiGraph::from_simple(path_graph(3))), InputError);
}

TEST_CASE("split_to_cycle on random Eulerian multigraphs") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    auto m = random_eulerian_multigraph(rng, 9, true);
    auto r = split_to_cycle(m);
    for (const auto& h : r.history) CHECK(is_eulerian(h.graph));
    CHECK(is_eulerian(r.cycle));
    for (VertexId v = 0; v < r.cycle.order(); ++v) CHECK(r.cycle.degree(v) == 2);
    CHECK(r.cycle.size() == m.size());
  }
}
