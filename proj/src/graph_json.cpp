#include "hamloc/graph_json.hpp"

#include <fstream>
#include <sstream>

#include "hamloc/error.hpp"

namespace hamloc {
namespace {

void check_keys(const Json& j, std::initializer_list<const char*> extra) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  for (const auto& [k, _] : j.items()) {
    bool ok = k == "multi" || k == "vertices" || k == "edges";
    for (auto x : extra) ok = ok || k == x;
    if (!ok) throw InputError("unknown field '" + k + "' in graph JSON");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("graph JSON needs a 'vertices' array");
  if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("graph JSON needs an 'edges' array");
  if (j.contains("multi") && !j["multi"].is_boolean()) throw InputError("'multi' must be a boolean");
}

std::string vertex_name(const Json& x) {
  if (!x.is_string()) throw InputError("vertex ids must be strings");
  return x.get<std::string>();
}

}  // namespace

Json to_json(const FiniteGraph& g) {
  Json j;
  j["multi"] = false;
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < g.order(); ++v) j["vertices"].push_back(g.name(v));
  j["edges"] = Json::array();
  for (EdgeId e = 0; e < g.size(); ++e) j["edges"].push_back({g.name(g.edge(e).a), g.name(g.edge(e).b)});
  return j;
}

Json to_json(const MultiGraph& m) {
  Json j;
  j["multi"] = true;
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < m.order(); ++v) j["vertices"].push_back(m.name(v));
  j["edges"] = Json::array();
  for (const auto& e : m.edges()) j["edges"].push_back({e.id, m.name(e.a), m.name(e.b)});
  return j;
}

FiniteGraph graph_from_json(const Json& j, std::initializer_list<const char*> extra) {
  check_keys(j, extra);
  if (j.value("multi", false)) throw InputError("expected a simple graph (multi = false)");
  FiniteGraph g;
  for (const auto& v : j["vertices"]) g.add_vertex(vertex_name(v));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("simple-graph edges are [a, b] pairs");
    g.add_edge(vertex_name(e[0]), vertex_name(e[1]));
  }
  return g;
}

MultiGraph multigraph_from_json(const Json& j) {
  check_keys(j, {});
  if (!j.value("multi", false)) throw InputError("expected a multigraph (multi = true)");
  MultiGraph m;
  for (const auto& v : j["vertices"]) m.add_vertex(vertex_name(v));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer())
      throw InputError("multigraph edges are [id, a, b] triples");
    m.add_edge_with_id(e[0].get<std::int64_t>(), m.id(vertex_name(e[1])), m.id(vertex_name(e[2])));
  }
  return m;
}

std::variant<FiniteGraph, MultiGraph> any_graph_from_json(const Json& j) {
  if (j.is_object() && j.value("multi", false)) return multigraph_from_json(j);
  return graph_from_json(j);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json edge_set_json(const FiniteGraph& g, const EdgeSet& s) {
  std::vector<std::pair<std::string, std::string>> names;
  for (auto e : s) names.push_back(g.edge_names(e));
  std::sort(names.begin(), names.end());
  Json j = Json::array();
  for (auto& [a, b] : names) j.push_back({a, b});
  return j;
}

}  // namespace hamloc
