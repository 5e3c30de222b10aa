#include "hamloc/suites.hpp"

#include <exception>
#include <functional>

#include "hamloc/caterpillar.hpp"
#include "hamloc/corpus.hpp"
#include "hamloc/generators.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/minor.hpp"
#include "hamloc/outerplanar.hpp"

namespace hamloc {
namespace {

// Runs check on every item; "" means the item passed, "-" means skipped.
SuiteResult sweep(std::string name, const std::vector<FiniteGraph>& items,
                  const std::function<std::string(const FiniteGraph&)>& check, bool parallel) {
  std::vector<std::string> out(items.size());
  const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = check(items[i]);
    } catch (const std::exception& e) {
      out[i] = std::string("exception: ") + e.what();
    }
  }
  SuiteResult r;
  r.name = std::move(name);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == "-") continue;
    ++r.checked;
    if (out[i].empty()) continue;
    if (r.violations++ == 0) r.first = "item " + std::to_string(i) + ": " + out[i];
  }
  return r;
}

void append(std::vector<FiniteGraph>& dst, std::vector<FiniteGraph> src) {
  for (auto& g : src) dst.push_back(std::move(g));
}

bool interleave(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b) != (a < d && d < b);
}

bool non_crossing_order(const FiniteGraph& g, const std::vector<VertexId>& order) {
  std::vector<std::size_t> pos(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (interleave(pos[es[i].a], pos[es[i].b], pos[es[j].a], pos[es[j].b])) return false;
  return true;
}

SuiteResult tally(std::string name, std::size_t count, const std::function<std::string(std::size_t)>& one) {
  SuiteResult r;
  r.name = std::move(name);
  for (std::size_t i = 0; i < count; ++i) {
    std::string msg;
    try {
      msg = one(i);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    ++r.checked;
    if (msg.empty()) continue;
    if (r.violations++ == 0) r.first = "instance " + std::to_string(i) + ": " + msg;
  }
  return r;
}

}  // namespace

SuiteResult suite_caterpillar(std::size_t min_n, std::size_t max_n, bool parallel) {
  std::vector<FiniteGraph> items;
  for (auto n = min_n; n <= max_n; ++n) append(items, all_trees(n));
  return sweep("caterpillar", items, [](const FiniteGraph& t) -> std::string {
    const bool cat = is_caterpillar(t).has_value();
    if (cat == find_s_k13(t).has_value()) return "caterpillar test disagrees with S(K13) search";
    if (cat != has_hamilton_cycle(kth_power(t, 2))) return "caterpillar test disagrees with square Hamiltonicity";
    if (!cat) return "";
    auto sc = hamilton_cycle_of_square(t);
    if (!is_spanning_cycle(sc.square, sc.cycle)) return "square cycle is not spanning";
    return "";
  }, parallel);
}

SuiteResult suite_outerplanar(std::size_t max_n, bool parallel) {
  std::vector<FiniteGraph> items;
  for (std::size_t n = 1; n <= max_n; ++n) append(items, all_connected_graphs(n));
  return sweep("outerplanar", items, [](const FiniteGraph& g) -> std::string {
    auto o = circular_ordering_oracle(g);
    if (is_outerplanar(g) != o.has_value()) return "minor test disagrees with the cyclic order oracle";
    if (o && !non_crossing_order(g, *o)) return "oracle order has crossing edges";
    return "";
  }, parallel);
}

SuiteResult suite_unique_cycle(std::size_t min_n, std::size_t max_n, bool parallel) {
  std::vector<FiniteGraph> items;
  for (auto n = min_n; n <= max_n; ++n) append(items, all_outerplanar_two_connected(n));
  auto r = sweep("unique-cycle", items, [](const FiniteGraph& g) -> std::string {
    auto all = enumerate_hamilton_cycles(g);
    if (all.size() != 1) return "expected one Hamilton cycle, found " + std::to_string(all.size());
    if (all[0] != two_contractible_edges(g)) return "Hamilton cycle differs from the 2-contractible edges";
    return "";
  }, parallel);
  // K3: one Hamilton cycle, no 2-contractible edge.
  auto k3 = complete_graph(3);
  ++r.checked;
  if (enumerate_hamilton_cycles(k3).size() != 1 || !two_contractible_edges(k3).empty()) {
    if (r.violations++ == 0) r.first = "K3 exception does not hold";
  }
  return r;
}

SuiteResult suite_k4(std::size_t max_n, bool parallel) {
  std::vector<FiniteGraph> items;
  for (std::size_t n = 1; n <= max_n; ++n) append(items, all_connected_graphs(n));
  return sweep("k4-minor", items, [](const FiniteGraph& g) -> std::string {
    if (find_minor(g, Pattern::K23)) return "-";
    if (find_minor(g, Pattern::K4).has_value() != find_k4_subgraph(g).has_value())
      return "K4 minor and K4 subgraph disagree";
    return "";
  }, parallel);
}

SuiteResult suite_layout(std::size_t max_n, bool parallel) {
  std::vector<FiniteGraph> items;
  for (std::size_t n = 3; n <= max_n; ++n) append(items, all_outerplanar_two_connected(n));
  return sweep("layout", items, [](const FiniteGraph& g) -> std::string {
    auto d = disk_layout(g);
    if (!chords_non_crossing(g, d)) return "layout chords cross";
    if (!non_crossing_order(g, d.order)) return "layout order has interleaving edges";
    return "";
  }, parallel);
}

SuiteResult suite_euler_splits(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  Rng rng(seed);
  return tally("euler-splits", count, [&](std::size_t) -> std::string {
    auto m = random_eulerian_multigraph(rng, max_vertices, false);
    if (!is_eulerian(m)) return "generator produced a non-Eulerian graph";
    for (VertexId v = 0; v < m.order(); ++v) {
      if (m.degree(v) != 4) continue;
      auto s = eulerian_v_splits(m, v);
      if (s.size() < 2) return "fewer than two Eulerian splits at " + m.name(v);
      for (const auto& x : s)
        if (!is_eulerian(x.graph)) return "split result is not Eulerian";
      return "";
    }
    return "no degree-4 vertex";
  });
}

SuiteResult suite_split_to_cycle(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  Rng rng(seed);
  return tally("split-to-cycle", count, [&](std::size_t) -> std::string {
    auto m = random_eulerian_multigraph(rng, max_vertices, true);
    auto r = split_to_cycle(m);
    if (r.cycle.size() != m.size()) return "edge count changed";
    for (VertexId v = 0; v < r.cycle.order(); ++v)
      if (r.cycle.degree(v) != 2) return "result has a vertex of degree != 2";
    const auto& s = r.cycle;
    // Connected 2-regular means one cycle.
    std::vector<char> seen(s.order(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto p : s.incident(v)) {
        auto u = s.other(p, v);
        if (!seen[u]) seen[u] = 1, ++reached, stack.push_back(u);
      }
    }
    if (reached != s.order()) return "result is not a single cycle";
    return "";
  });
}

SuiteResult suite_struct1(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  Rng rng(seed);
  return tally("struct1", count, [&](std::size_t i) -> std::string {
    auto n = 3 + i % (max_vertices - 2);
    auto g = random_outerplanar_two_connected(rng, n);
    auto k0 = random_connected_subset(rng, g, 1);
    auto v = check_struct1(g, k0);
    if (!v.empty()) return "component with " + std::to_string(v[0].neighborhood_size) + " neighbours";
    return "";
  });
}

SuiteResult suite_quotient(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  Rng rng(seed);
  SuiteResult r;
  r.name = "quotient-2-connected";
  while (r.checked < count) {
    auto g = random_two_connected(rng, max_vertices);
    if (g.order() < 3) continue;
    auto k = random_connected_subset(rng, g, 3);
    if (k.size() < 3) continue;
    ++r.checked;
    if (!check_quotient_two_connected(g, k) && r.violations++ == 0)
      r.first = "instance " + std::to_string(r.checked - 1) + ": quotient not 2-connected";
  }
  return r;
}

Json suite_json(const SuiteResult& r) {
  Json j;
  j["name"] = r.name;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  if (!r.first.empty()) j["first_violation"] = r.first;
  return j;
}

}  // namespace hamloc
