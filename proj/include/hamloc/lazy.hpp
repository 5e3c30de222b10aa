#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamloc/graph.hpp"
#include "hamloc/graph_json.hpp"

namespace hamloc {

using NeighborFn = std::function<std::vector<std::string>(const std::string&)>;

// Optional structure a generator may expose: a level per vertex such that
// each level region {level <= n} is finite and connected and contains the
// root, and an exact key for the component of G - region containing v.
struct LevelHint {
  std::function<int(const std::string&)> level;
  std::function<std::string(const std::string&, int)> component;
  // Optional: whether a circle may enter and leave the component (given by
  // its key) through the two named contact vertices.
  std::function<bool(const std::string&, const std::string&, const std::string&)> admissible;
};

// Locally finite graph given by a pure neighbour oracle.
class LazyGraph {
 public:
  LazyGraph(std::string name, std::string root, NeighborFn fn, std::optional<LevelHint> hint = std::nullopt)
      : name_(std::move(name)), root_(std::move(root)), fn_(std::move(fn)), hint_(std::move(hint)) {}
  const std::string& name() const { return name_; }
  const std::string& root() const { return root_; }
  std::vector<std::string> neighbors(const std::string& v) const { return fn_(v); }
  const std::optional<LevelHint>& hint() const { return hint_; }

 private:
  std::string name_;
  std::string root_;
  NeighborFn fn_;
  std::optional<LevelHint> hint_;
};

struct ExploreBudget {
  std::size_t max_vertices = 200000;
  int max_radius = 256;
  int depth = 8;  // exploration depth into each component beyond the region
};

enum class RegionKind { Level, Ball };
RegionKind parse_region(const std::string& s);
std::string region_name(RegionKind k);

struct BallView {
  int radius = 0;
  FiniteGraph graph;               // BFS discovery order
  std::vector<std::string> boundary;  // vertices at distance exactly radius
};

BallView ball(const LazyGraph& lg, int r, const ExploreBudget& budget = {});
// Finite region: the ball, or the level set {level <= n} when requested.
std::vector<std::string> region_vertices(const LazyGraph& lg, int r, RegionKind kind, const ExploreBudget& budget);

struct DeepComponent {
  int radius = 0;
  RegionKind region = RegionKind::Ball;
  int id = 0;
  std::vector<std::string> fingers;   // region vertices with a neighbour in the component
  std::vector<std::string> contacts;  // component vertices with a neighbour in the region
  std::size_t cut_edges = 0;          // edges between region and component
  std::string representative;         // smallest-named contact
  std::string key;                    // level-hint component key; empty for balls
};

std::vector<DeepComponent> deep_components(const LazyGraph& lg, int r, RegionKind kind = RegionKind::Ball,
                                           const ExploreBudget& budget = {});
// Index into the r1 list for each r2 component, in r2 order.
std::vector<int> end_nesting(const LazyGraph& lg, int r1, int r2, RegionKind kind = RegionKind::Ball,
                             const ExploreBudget& budget = {});

enum class DegreeMode { Vertex, Edge };
struct DegreeBound {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};
DegreeBound end_degree_bound(const LazyGraph& lg, const DeepComponent& comp, DegreeMode mode,
                             const ExploreBudget& budget = {});

Json end_report_json(const LazyGraph& lg, int r, RegionKind kind, const ExploreBudget& budget);
Json ball_json(const BallView& b);

LazyGraph double_ladder();
std::string ladder_name(std::int64_t i, bool top);
LazyGraph lazy_power(const LazyGraph& lg, int k);
LazyGraph lazy_from_finite(const FiniteGraph& g, const std::string& root);

// Returns an empty string when every probe is symmetric.
std::string symmetry_audit(const LazyGraph& lg, std::mt19937_64& rng, int probes, int walk_length = 12);

}  // namespace hamloc
