#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamloc/fragment.hpp"
#include "hamloc/graph_json.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/lazy.hpp"

namespace hamloc {

struct TransferPath {
  std::vector<VertexId> vertices;
  std::array<bool, 3> at_c{};  // uses edge c-(l, s, t)[k]
  std::array<bool, 3> at_v{};  // uses edge v-(w, x, y)[k]
  // Contact the c-child (v-child) must miss: the index of the unused edge.
  int child_c_missing() const;
  int child_v_missing() const;
};

struct TransferTable {
  std::array<std::vector<TransferPath>, 3> missing;  // by missing contact u, l, r
};

TransferTable transfer_table(const Fragment& f);

// Indices into TransferTable::missing[m], per missing contact.
using PatternLists = std::array<std::vector<std::size_t>, 3>;

PatternLists viable_patterns(const TransferTable& tt, int depth);

struct Viability {
  std::vector<PatternLists> by_depth;  // depth 0, 1, ... up to the first repeat
  int stabilized_at = 0;               // smallest depth d with lists(d) == lists(d + 1)
  PatternLists stable;
};
// Throws InternalError if the lists do not stabilize within max_depth or the
// stable missing-r list does not have exactly one entry.
Viability stabilize(const TransferTable& tt, int max_depth = 16);

using NamedEdge = std::pair<std::string, std::string>;  // smaller name first
NamedEdge named_edge(std::string a, std::string b);

struct LevelVerdict {
  int level = 0;
  std::uint64_t count = 0;         // limit semantics (frontier copies stand for infinite subtrees)
  std::uint64_t closed_count = 0;  // Hamilton cycles of the finite closed graph
  std::vector<NamedEdge> forced;   // persistent edges in every counted circle
  bool stable = false;             // forced set unchanged from the previous level
};

LevelVerdict fragment_tree_dp(const FragmentTree& ft, const TransferTable& tt, const Viability& via);
std::vector<LevelVerdict> fragment_dp_levels(int max_level, const TransferTable& tt, const Viability& via);

// Edges of G_n that survive into the limit graph.
bool persistent_edge(const FragmentScheme& sc, const std::string& a, const std::string& b);

struct QuotientEdge {
  std::string a;  // region vertex
  std::string b;  // region vertex, or the component's contact for finger edges
  int component = -1;  // surrogate index for finger edges
};

struct QuotientResult {
  int level = 0;
  MultiGraph quotient;  // region vertices, then one surrogate "S:<id>" per deep component
  std::vector<DeepComponent> components;
  std::vector<QuotientEdge> edge_info;  // by edge position in quotient.edges()
  std::size_t raw_count = 0;            // all Hamilton cycles of the quotient
  std::vector<IdCycle> cycles;          // those passing the surrogate pair rule
  std::vector<NamedEdge> forced;        // region edges used by every accepted cycle
};

QuotientResult quotient_hamilton(const LazyGraph& lg, int r, RegionKind kind = RegionKind::Level,
                                 const ExploreBudget& budget = {});
FiniteGraph quotient_as_simple(const QuotientResult& q);

using EdgePredicate = std::function<bool(const std::string&, const std::string&)>;

struct CircleCheck {
  int level = 0;
  bool ok = true;
  std::string reason;
};

std::vector<CircleCheck> verify_candidate_circle(const LazyGraph& lg, const EdgePredicate& member,
                                                 const std::vector<int>& levels, RegionKind kind = RegionKind::Level,
                                                 const ExploreBudget& budget = {});

// section5_graph plus the admissible-pair hint derived from the stable lists.
LazyGraph section5_with_viability(const Viability& via);
// The circle C: every copy uses the unique stable missing-r path.
EdgePredicate fragment_path_member(const TransferTable& tt, const Viability& via);
EdgePredicate ladder_rails_member();

Json transfer_json(const Fragment& f, const TransferTable& tt, const Viability& via);
Json level_verdict_json(const LevelVerdict& v);

}  // namespace hamloc
