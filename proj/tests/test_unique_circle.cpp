#include <doctest.h>

#include <set>

#include "hamloc/error.hpp"
#include "hamloc/fragment.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/isomorphism.hpp"
#include "hamloc/unique_circle.hpp"

using namespace hamloc;

namespace {

struct Setup {
  const Fragment& f = load_tutte_fragment();
  TransferTable tt = transfer_table(f);
  Viability via = stabilize(tt);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

}  // namespace

TEST_CASE("transfer table") {
  const auto& s = setup();
  CHECK(s.tt.missing[kU].empty());
  CHECK(s.tt.missing[kR].size() == 2);
  CHECK(s.tt.missing[kL].size() == 4);
  for (int m = 0; m < 3; ++m)
    for (const auto& p : s.tt.missing[m]) {
      std::set<VertexId> ends{p.vertices.front(), p.vertices.back()};
      std::set<VertexId> want;
      for (int k = 0; k < 3; ++k)
        if (k != m) want.insert(s.f.contacts[k]);
      CHECK(ends == want);
      CHECK(p.at_c[0] + p.at_c[1] + p.at_c[2] == 2);
      CHECK(p.at_v[0] + p.at_v[1] + p.at_v[2] == 2);
    }
}

TEST_CASE("viable patterns") {
  const auto& s = setup();
  auto d0 = viable_patterns(s.tt, 0);
  CHECK(d0[kL].size() == 4);
  for (int depth = 1; depth <= 5; ++depth) {
    auto d = viable_patterns(s.tt, depth);
    for (int m = 0; m < 3; ++m)
      for (auto i : d[m]) CHECK(s.tt.missing[m][i].at_c[0]);
  }
  CHECK(s.via.stabilized_at <= 3);
  CHECK(s.via.stable[kL].empty());
  CHECK(s.via.stable[kU].empty());
  REQUIRE(s.via.stable[kR].size() == 1);
  const auto& c = s.tt.missing[kR][s.via.stable[kR][0]];
  CHECK(c.at_c[0]);
  CHECK(c.at_v[0]);
  // The other T-r path is not the one using both l-c and v-w.
  const auto& other = s.tt.missing[kR][1 - s.via.stable[kR][0]];
  CHECK_FALSE((other.at_c[0] && other.at_v[0]));
  CHECK_THROWS_AS(viable_patterns(s.tt, -1), InputError);
}

TEST_CASE("fragment_tree_dp against Hamilton enumeration") {
  const auto& s = setup();
  auto levels = fragment_dp_levels(3, s.tt, s.via);
  REQUIRE(levels.size() == 4);
  for (int n = 0; n <= 2; ++n) {
    auto g = build_gn(n).first;
    CHECK(levels[n].closed_count == enumerate_hamilton_cycles(g).size());
  }
  CHECK(levels[0].closed_count == 2 + s.tt.missing[kL].size());
  CHECK(levels[3].closed_count == 256);
  for (const auto& v : levels) CHECK(v.count == 1);
  CHECK_FALSE(levels[0].stable);
  for (int n = 1; n <= 3; ++n) CHECK(levels[n].stable);
  // Forced sets only grow on edges that were already persistent.
  for (int n = 1; n <= 3; ++n) {
    std::set<NamedEdge> now(levels[n].forced.begin(), levels[n].forced.end());
    for (const auto& e : levels[n - 1].forced) CHECK(now.count(e));
  }
  // Every forced edge lies on the circle C.
  auto member = fragment_path_member(s.tt, s.via);
  for (const auto& v : levels)
    for (const auto& e : v.forced) CHECK(member(e.first, e.second));
  auto j = level_verdict_json(levels[1]);
  CHECK(j["count"] == 1);
  CHECK(j["closed_count"] == 4);
}

TEST_CASE("quotient engine agrees with the tree DP") {
  const auto& s = setup();
  auto levels = fragment_dp_levels(2, s.tt, s.via);
  auto plain = section5_graph();
  auto hinted = section5_with_viability(s.via);
  for (int n = 0; n <= 2; ++n) {
    auto q = quotient_hamilton(hinted, n);
    CHECK(q.raw_count == levels[n].closed_count);
    CHECK(q.cycles.size() == levels[n].count);
    CHECK(q.forced == levels[n].forced);
    // Without the hint, only the distinct-contacts rule applies.
    auto qp = quotient_hamilton(plain, n);
    CHECK(qp.raw_count == q.raw_count);
    CHECK(qp.cycles.size() >= q.cycles.size());
    // Contracting each child subtree re-creates the deleted c or v.
    CHECK(are_isomorphic(quotient_as_simple(q), build_gn(n).first));
  }
}

TEST_CASE("double ladder quotients") {
  auto lg = double_ladder();
  for (int r = 1; r <= 6; ++r) {
    auto q = quotient_hamilton(lg, r);
    CHECK(q.raw_count == 1);
    REQUIRE(q.cycles.size() == 1);
    CHECK(q.forced.size() == static_cast<std::size_t>(4 * r));
    for (const auto& e : q.forced) CHECK(e.first.substr(e.first.rfind(':')) == e.second.substr(e.second.rfind(':')));
  }
  auto q2 = quotient_hamilton(lg, 2, RegionKind::Ball);
  CHECK(q2.cycles.size() == 1);
}

TEST_CASE("verify_candidate_circle") {
  const auto& s = setup();
  auto lg = double_ladder();
  std::vector<int> levels{1, 2, 3, 4, 5, 6};
  for (auto& c : verify_candidate_circle(lg, ladder_rails_member(), levels)) CHECK(c.ok);
  auto rails = ladder_rails_member();
  auto with_rung = [rails](const std::string& a, const std::string& b) {
    return rails(a, b) || named_edge(a, b) == named_edge("L:0:bot", "L:0:top");
  };
  for (auto& c : verify_candidate_circle(lg, with_rung, levels)) {
    CHECK_FALSE(c.ok);
    CHECK(c.reason.find("member edges") != std::string::npos);
  }

  auto g = section5_graph();
  auto member = fragment_path_member(s.tt, s.via);
  for (auto& c : verify_candidate_circle(g, member, {1, 2, 3})) {
    INFO(c.reason);
    CHECK(c.ok);
  }
  // Any single-edge perturbation of C is rejected.
  for (int r = 1; r <= 2; ++r) {
    auto q = quotient_hamilton(g, r);
    std::size_t tried = 0;
    for (const auto& e : q.edge_info) {
      auto flipped = named_edge(e.a, e.b);
      auto pert = [&](const std::string& a, const std::string& b) {
        return member(a, b) != (named_edge(a, b) == flipped);
      };
      auto res = verify_candidate_circle(g, pert, {r});
      CHECK_FALSE(res[0].ok);
      ++tried;
    }
    CHECK(tried == q.quotient.size());
  }
}

TEST_CASE("transfer json") {
  const auto& s = setup();
  auto j = transfer_json(s.f, s.tt, s.via);
  CHECK(j["counts"]["u"] == 0);
  CHECK(j["counts"]["r"] == 2);
  CHECK(j["stable"]["r"].size() == 1);
}
