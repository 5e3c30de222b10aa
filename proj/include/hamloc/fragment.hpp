#pragma once

#include <array>
#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamloc/graph.hpp"
#include "hamloc/graph_json.hpp"
#include "hamloc/lazy.hpp"

namespace hamloc {

// Contact indices.
inline constexpr int kU = 0;
inline constexpr int kL = 1;
inline constexpr int kR = 2;
const char* contact_name(int m);

struct Fragment {
  FiniteGraph graph;
  std::array<VertexId, 3> contacts{};  // u, l, r
  VertexId c = 0, v = 0;
  std::array<VertexId, 3> c_roles{};  // l, s, t
  std::array<VertexId, 3> v_roles{};  // w, x, y
  std::vector<VertexId> interior;     // data file order
  bool is_contact(VertexId a) const;
  int contact_index(VertexId a) const;  // -1 if not a contact
};

// Structural checks only (degrees, role adjacency).
Fragment fragment_from_json(const Json& j);

struct FragmentCheck {
  std::size_t t_minus_u = 0;
  std::size_t t_minus_r = 0;
  std::size_t t_minus_l = 0;
  bool pendants_in_r_paths = false;
  std::size_t r_paths_common_edges = 0;
};

// Hamilton paths of the fragment minus contact m, as vertex sequences.
std::vector<std::vector<VertexId>> fragment_paths_missing(const Fragment& f, int m);
FragmentCheck check_fragment(const Fragment& f);
// Loads the shipped fragment and runs all checks; throws InternalError on
// any failed check.
const Fragment& load_tutte_fragment();
Json fragment_check_json(const FragmentCheck& c);

// Vertex naming and adjacency of G_n and of the limit graph. Copies are
// addressed by paths over {c, v}; vertices are "F:<path>:<local>" and the
// merged root contact is "F::z". Copies shallower than `level` are expanded
// (their c and v replaced by child copies); kLimit expands everything.
class FragmentScheme {
 public:
  static constexpr int kLimit = INT_MAX;
  explicit FragmentScheme(const Fragment& f) : f_(f) {}
  const Fragment& fragment() const { return f_; }
  static std::string root_name() { return "F::z"; }
  std::string vertex_name(const std::string& path, VertexId local) const;
  // Path and local vertex; local is absent for the root vertex.
  std::pair<std::string, std::optional<VertexId>> parse(const std::string& name) const;
  bool exists(const std::string& path, VertexId local, int level) const;
  std::vector<std::string> neighbors(const std::string& name, int level) const;
  // The vertex a copy's contact m is identified with.
  std::string resolve_contact(const std::string& path, int m, int level) const;
  // The vertex inside the copy's subtree adjacent to contact m.
  std::string attach(const std::string& path, int m, int level) const;

 private:
  const Fragment& f_;
};

struct FragmentTree {
  int level = 0;
  std::vector<std::string> copies;                    // breadth first, c before v
  std::vector<std::array<std::string, 3>> contacts;  // resolved u, l, r per copy
  std::vector<std::string> marked;                    // copies at depth == level
  FiniteGraph graph;                                  // G_n with the root contacts merged
};

inline constexpr int kDefaultLevelCap = 4;

FragmentTree build_tree(int n, int cap = kDefaultLevelCap);
FragmentTree expand(const FragmentTree& ft, int cap = kDefaultLevelCap);
std::pair<FiniteGraph, FragmentTree> build_gn(int n, int cap = kDefaultLevelCap);
// Size of the edge cut around every copy's subtree, keyed by copy path.
std::map<std::string, std::size_t> boundary_cuts(const FragmentTree& ft);
std::vector<VertexId> subtree_vertices(const FragmentTree& ft, const std::string& path);

// The limit graph; level hint = copy depth, components keyed by path prefix.
LazyGraph section5_graph();

}  // namespace hamloc
