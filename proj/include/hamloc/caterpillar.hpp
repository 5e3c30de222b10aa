#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamloc/graph.hpp"
#include "hamloc/graph_json.hpp"
#include "hamloc/graph_ops.hpp"

namespace hamloc {

// Spine (T - leaves) oriented from its smaller-named end; empty for a
// single edge. Absent when t is a tree but not a caterpillar. Throws when t
// is not a tree.
std::optional<std::vector<VertexId>> is_caterpillar(const FiniteGraph& t);

struct SubdividedClaw {
  VertexId center;
  VertexId middle[3];
  VertexId end[3];
};
std::optional<SubdividedClaw> find_s_k13(const FiniteGraph& g);

struct CaterpillarPartition {
  std::vector<std::vector<VertexId>> classes;   // in <_T order, members by name
  std::vector<std::optional<VertexId>> jumping;  // per class
  std::vector<VertexId> spine;
  std::vector<int> class_of;                    // per vertex of t
  std::size_t size() const { return classes.size(); }
};

CaterpillarPartition caterpillar_partition(const FiniteGraph& t);
// Empty when both ordering properties hold, else a description.
std::string check_partition(const FiniteGraph& t, const CaterpillarPartition& p);

struct SquareStringSpec {
  VertexId v;
  VertexId w;
  bool left_closed;
  bool right_closed;
};

std::vector<VertexId> square_string(const FiniteGraph& t, const CaterpillarPartition& p, const SquareStringSpec& s);

struct SquareCycle {
  FiniteGraph square;
  EdgeSet cycle;               // edge ids of `square`
  std::vector<VertexId> order;  // vertex sequence
};
SquareCycle hamilton_cycle_of_square(const FiniteGraph& t);

// Spanning tree of g that is a caterpillar; hard error above 20 vertices.
std::optional<FiniteGraph> spanning_caterpillar_search(const FiniteGraph& g);

struct CoverReport {
  bool even;
  // Keys: even "P","D","R_v","R_w"; odd "R_v","R_w","R'_v","R'_w".
  std::map<std::string, std::vector<VertexId>> paths;
  std::string note;  // why some paths are absent, if any
};

CoverReport decomp_covers(const FiniteGraph& t, const CaterpillarPartition& p, VertexId v, VertexId w);
// Empty when all constraints hold.
std::string check_cover(const FiniteGraph& t, const CaterpillarPartition& p, VertexId v, VertexId w,
                        const CoverReport& r);
Json cover_json(const FiniteGraph& t, const CoverReport& r);

// x-y path in g restricted to the classes from V_v to V_w (inclusive);
// part is a partition of a spanning caterpillar of g (same vertex names).
std::vector<VertexId> interval_path(const FiniteGraph& g, const FiniteGraph& t, const CaterpillarPartition& part,
                                    VertexId x, VertexId y, VertexId v, VertexId w);

struct SplitToCycle {
  MultiGraph cycle;
  std::vector<VSplitResult> history;
};
SplitToCycle split_to_cycle(const MultiGraph& m);

}  // namespace hamloc
