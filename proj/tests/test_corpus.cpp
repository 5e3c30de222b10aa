#include <doctest.h>

#include "hamloc/suites.hpp"

using namespace hamloc;

namespace {

bool same(const SuiteResult& a, const SuiteResult& b) {
  return a.name == b.name && a.checked == b.checked && a.violations == b.violations && a.first == b.first;
}

}  // namespace

TEST_CASE("parallel sweeps aggregate exactly like the serial reference") {
  CHECK(same(suite_caterpillar(3, 9, false), suite_caterpillar(3, 9, true)));
  CHECK(same(suite_outerplanar(6, false), suite_outerplanar(6, true)));
  CHECK(same(suite_unique_cycle(4, 7, false), suite_unique_cycle(4, 7, true)));
  CHECK(same(suite_k4(6, false), suite_k4(6, true)));
  CHECK(same(suite_layout(7, false), suite_layout(7, true)));
}

TEST_CASE("exhaustive suite sizes match the enumerations") {
  // Trees on 3..8 vertices: 1 + 2 + 3 + 6 + 11 + 23.
  CHECK(suite_caterpillar(3, 8, false).checked == 46);
  // Connected graphs on 1..5 vertices: 1 + 1 + 2 + 6 + 21.
  CHECK(suite_outerplanar(5, false).checked == 31);
  // Polygon dissections up to rotation and reflection on 4, 5, 6 vertices: 2 + 3 + 9, plus K3.
  CHECK(suite_unique_cycle(4, 6, false).checked == 2 + 3 + 9 + 1);
}

TEST_CASE("randomized suites are reproducible from the seed") {
  CHECK(same(suite_euler_splits(5, 100, 8), suite_euler_splits(5, 100, 8)));
  CHECK(same(suite_struct1(9, 60, 9), suite_struct1(9, 60, 9)));
  auto q = suite_quotient(3, 50, 9);
  CHECK(q.checked == 50);
  CHECK(q.ok());
  auto s = suite_split_to_cycle(4, 40, 8);
  CHECK(s.ok());
  CHECK(suite_json(s)["checked"] == 40);
  CHECK_FALSE(suite_json(s).contains("first_violation"));
}
