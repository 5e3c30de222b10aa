#include "hamloc/fragment.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "hamloc/error.hpp"
#include "hamloc/fragment_data.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"

namespace hamloc {

const char* contact_name(int m) {
  static const char* names[] = {"u", "l", "r"};
  return names[m];
}

bool Fragment::is_contact(VertexId a) const { return contact_index(a) >= 0; }

int Fragment::contact_index(VertexId a) const {
  for (int m = 0; m < 3; ++m)
    if (contacts[m] == a) return m;
  return -1;
}

Fragment fragment_from_json(const Json& j) {
  Fragment f;
  f.graph = graph_from_json(j, {"roles"});
  if (!j.contains("roles") || !j["roles"].is_object()) throw InputError("fragment: missing roles");
  const auto& roles = j["roles"];
  auto role = [&](const char* key) {
    if (!roles.contains(key) || !roles[key].is_string()) throw InputError(std::string("fragment: missing role ") + key);
    auto id = f.graph.find(roles[key].get<std::string>());
    if (!id) throw InputError(std::string("fragment: unknown vertex for role ") + key);
    return *id;
  };
  for (auto it = roles.begin(); it != roles.end(); ++it) {
    static const std::set<std::string> known{"u", "l", "r", "c", "v", "s", "t", "w", "x", "y"};
    if (!known.count(it.key())) throw InputError("fragment: unknown role " + it.key());
  }
  f.contacts = {role("u"), role("l"), role("r")};
  f.c = role("c");
  f.v = role("v");
  f.c_roles = {f.contacts[kL], role("s"), role("t")};
  f.v_roles = {role("w"), role("x"), role("y")};
  for (VertexId a = 0; a < f.graph.order(); ++a)
    if (!f.is_contact(a)) f.interior.push_back(a);
  if (std::set<VertexId>(f.contacts.begin(), f.contacts.end()).size() != 3) throw InputError("fragment: contacts coincide");
  for (VertexId a = 0; a < f.graph.order(); ++a) {
    const std::size_t want = f.is_contact(a) ? 1 : 3;
    if (f.graph.degree(a) != want)
      throw InputError("fragment: vertex " + f.graph.name(a) + " has degree " + std::to_string(f.graph.degree(a)));
  }
  auto exact_nbrs = [&](VertexId a, const std::array<VertexId, 3>& want, const char* what) {
    std::set<VertexId> got(f.graph.neighbors(a).begin(), f.graph.neighbors(a).end());
    if (got != std::set<VertexId>(want.begin(), want.end()))
      throw InputError(std::string("fragment: wrong neighbourhood of ") + what);
  };
  exact_nbrs(f.c, f.c_roles, "c");
  exact_nbrs(f.v, f.v_roles, "v");
  if (f.is_contact(f.c) || f.is_contact(f.v) || f.c == f.v || f.graph.adjacent(f.c, f.v))
    throw InputError("fragment: c and v must be distinct non-adjacent interior vertices");
  for (VertexId a : f.v_roles)
    if (f.is_contact(a)) throw InputError("fragment: v must not touch a contact");
  for (int m = 0; m < 3; ++m) {
    VertexId z = f.graph.neighbors(f.contacts[m])[0];
    if (f.is_contact(z)) throw InputError("fragment: contacts must not be adjacent");
  }
  return f;
}

std::vector<std::vector<VertexId>> fragment_paths_missing(const Fragment& f, int m) {
  std::vector<VertexId> keep;
  for (VertexId a = 0; a < f.graph.order(); ++a)
    if (a != f.contacts[m]) keep.push_back(a);
  auto sub = induced_subgraph(f.graph, keep);
  std::vector<std::vector<VertexId>> out;
  for (auto& p : enumerate_hamilton_paths(sub)) {
    std::vector<VertexId> q;
    for (VertexId a : p) q.push_back(keep[a]);
    out.push_back(q);
  }
  return out;
}

FragmentCheck check_fragment(const Fragment& f) {
  FragmentCheck c;
  c.t_minus_u = fragment_paths_missing(f, kU).size();
  auto rp = fragment_paths_missing(f, kR);
  c.t_minus_r = rp.size();
  c.t_minus_l = fragment_paths_missing(f, kL).size();
  auto edges = [&](const std::vector<VertexId>& p) {
    std::set<EdgeId> s;
    for (std::size_t i = 1; i < p.size(); ++i) s.insert(*f.graph.edge_between(p[i - 1], p[i]));
    return s;
  };
  const EdgeId eu = *f.graph.edge_between(f.contacts[kU], f.graph.neighbors(f.contacts[kU])[0]);
  const EdgeId el = *f.graph.edge_between(f.contacts[kL], f.c);
  c.pendants_in_r_paths = !rp.empty();
  std::set<EdgeId> common;
  for (std::size_t i = 0; i < rp.size(); ++i) {
    auto s = edges(rp[i]);
    c.pendants_in_r_paths = c.pendants_in_r_paths && s.count(eu) && s.count(el);
    if (i == 0) {
      common = s;
    } else {
      std::set<EdgeId> keep;
      for (EdgeId e : common)
        if (s.count(e)) keep.insert(e);
      common = keep;
    }
  }
  c.r_paths_common_edges = common.size();
  return c;
}

const Fragment& load_tutte_fragment() {
  static const Fragment f = [] {
    auto frag = fragment_from_json(parse_json_text(detail::kFragmentJson));
    auto c = check_fragment(frag);
    if (c.t_minus_u != 0) throw InternalError("fragment validation: T-u has Hamilton paths");
    if (c.t_minus_r != 2) throw InternalError("fragment validation: T-r does not have exactly 2 Hamilton paths");
    if (!c.pendants_in_r_paths) throw InternalError("fragment validation: pendant edges missing from a T-r path");
    return frag;
  }();
  return f;
}

Json fragment_check_json(const FragmentCheck& c) {
  Json j;
  j["t_minus_u"] = c.t_minus_u;
  j["t_minus_r"] = c.t_minus_r;
  j["t_minus_l"] = c.t_minus_l;
  j["pendants_in_r_paths"] = c.pendants_in_r_paths;
  j["r_paths_common_edges"] = c.r_paths_common_edges;
  return j;
}

std::string FragmentScheme::vertex_name(const std::string& path, VertexId local) const {
  return "F:" + path + ":" + f_.graph.name(local);
}

std::pair<std::string, std::optional<VertexId>> FragmentScheme::parse(const std::string& name) const {
  if (name == root_name()) return {"", std::nullopt};
  auto bad = [&] { return InputError("not a fragment vertex: " + name); };
  if (name.size() < 4 || name.compare(0, 2, "F:") != 0) throw bad();
  auto colon = name.find(':', 2);
  if (colon == std::string::npos) throw bad();
  std::string path = name.substr(2, colon - 2);
  for (char ch : path)
    if (ch != 'c' && ch != 'v') throw bad();
  auto local = f_.graph.find(name.substr(colon + 1));
  if (!local || f_.is_contact(*local)) throw bad();
  return {path, *local};
}

bool FragmentScheme::exists(const std::string& path, VertexId local, int level) const {
  const int depth = static_cast<int>(path.size());
  if (depth > level) return false;
  if (f_.is_contact(local)) return false;
  return !((local == f_.c || local == f_.v) && depth < level);
}

std::string FragmentScheme::resolve_contact(const std::string& path, int m, int level) const {
  if (path.empty()) return root_name();
  std::string parent = path.substr(0, path.size() - 1);
  VertexId role = (path.back() == 'c' ? f_.c_roles : f_.v_roles)[m];
  if (int k = f_.contact_index(role); k >= 0) return resolve_contact(parent, k, level);
  return vertex_name(parent, role);
}

std::string FragmentScheme::attach(const std::string& path, int m, int level) const {
  VertexId z = f_.graph.neighbors(f_.contacts[m])[0];
  const bool expanded = static_cast<int>(path.size()) < level;
  if (expanded && (z == f_.c || z == f_.v)) {
    const auto& roles = z == f_.c ? f_.c_roles : f_.v_roles;
    int k = static_cast<int>(std::find(roles.begin(), roles.end(), f_.contacts[m]) - roles.begin());
    return attach(path + (z == f_.c ? "c" : "v"), k, level);
  }
  return vertex_name(path, z);
}

std::vector<std::string> FragmentScheme::neighbors(const std::string& name, int level) const {
  auto [path, local] = parse(name);
  std::vector<std::string> out;
  if (!local) {
    for (int m = 0; m < 3; ++m) out.push_back(attach("", m, level));
    return out;
  }
  if (!exists(path, *local, level)) throw InputError("vertex " + name + " does not exist at this level");
  const bool expanded = static_cast<int>(path.size()) < level;
  std::vector<VertexId> nbrs(f_.graph.neighbors(*local).begin(), f_.graph.neighbors(*local).end());
  std::sort(nbrs.begin(), nbrs.end(), [&](VertexId a, VertexId b) { return f_.graph.name(a) < f_.graph.name(b); });
  for (VertexId y : nbrs) {
    if (int m = f_.contact_index(y); m >= 0) {
      out.push_back(resolve_contact(path, m, level));
    } else if (expanded && (y == f_.c || y == f_.v)) {
      const auto& roles = y == f_.c ? f_.c_roles : f_.v_roles;
      int k = static_cast<int>(std::find(roles.begin(), roles.end(), *local) - roles.begin());
      out.push_back(attach(path + (y == f_.c ? "c" : "v"), k, level));
    } else {
      out.push_back(vertex_name(path, y));
    }
  }
  return out;
}

FragmentTree build_tree(int n, int cap) {
  if (n < 0) throw InputError("level must be nonnegative");
  if (n > cap) throw BudgetError("level " + std::to_string(n) + " exceeds the level cap " + std::to_string(cap));
  const auto& f = load_tutte_fragment();
  FragmentScheme scheme(f);
  FragmentTree ft;
  ft.level = n;
  ft.copies.push_back("");
  for (std::size_t i = 0; i < ft.copies.size(); ++i)
    if (static_cast<int>(ft.copies[i].size()) < n)
      for (const char* tag : {"c", "v"}) ft.copies.push_back(ft.copies[i] + tag);
  for (auto& p : ft.copies) {
    ft.contacts.push_back({scheme.resolve_contact(p, kU, n), scheme.resolve_contact(p, kL, n),
                           scheme.resolve_contact(p, kR, n)});
    if (static_cast<int>(p.size()) == n) ft.marked.push_back(p);
  }
  ft.graph.add_vertex(FragmentScheme::root_name());
  for (auto& p : ft.copies)
    for (VertexId a : f.interior)
      if (scheme.exists(p, a, n)) ft.graph.add_vertex(scheme.vertex_name(p, a));
  for (VertexId a = 0; a < ft.graph.order(); ++a)
    for (auto& nb : scheme.neighbors(ft.graph.name(a), n)) {
      auto b = ft.graph.find(nb);
      if (!b) throw InternalError("G_n adjacency leaves the graph at " + nb);
      ft.graph.ensure_edge(a, *b);
    }
  for (VertexId a = 0; a < ft.graph.order(); ++a) {
    auto back = scheme.neighbors(ft.graph.name(a), n);
    if (back.size() != ft.graph.degree(a)) throw InternalError("G_n adjacency is not symmetric");
  }
  return ft;
}

FragmentTree expand(const FragmentTree& ft, int cap) { return build_tree(ft.level + 1, cap); }

std::pair<FiniteGraph, FragmentTree> build_gn(int n, int cap) {
  auto ft = build_tree(n, cap);
  return {ft.graph, ft};
}

std::vector<VertexId> subtree_vertices(const FragmentTree& ft, const std::string& path) {
  std::vector<VertexId> out;
  for (VertexId a = 1; a < ft.graph.order(); ++a) {
    const auto& nm = ft.graph.name(a);
    auto colon = nm.find(':', 2);
    if (nm.compare(2, path.size(), path) == 0 && colon >= 2 + path.size()) out.push_back(a);
  }
  return out;
}

std::map<std::string, std::size_t> boundary_cuts(const FragmentTree& ft) {
  std::map<std::string, std::size_t> out;
  for (auto& p : ft.copies) out[p] = cut_edges(ft.graph, subtree_vertices(ft, p)).size();
  return out;
}

LazyGraph section5_graph() {
  const auto& f = load_tutte_fragment();
  auto scheme = std::make_shared<FragmentScheme>(f);
  LevelHint hint;
  hint.level = [scheme](const std::string& v) { return static_cast<int>(scheme->parse(v).first.size()); };
  hint.component = [scheme](const std::string& v, int n) {
    auto path = scheme->parse(v).first;
    return path.substr(0, static_cast<std::size_t>(n) + 1);
  };
  return LazyGraph(
      "section5", FragmentScheme::root_name(),
      [scheme](const std::string& v) { return scheme->neighbors(v, FragmentScheme::kLimit); }, hint);
}

}  // namespace hamloc
