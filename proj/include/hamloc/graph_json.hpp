#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hamloc/graph.hpp"

namespace hamloc {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteGraph& g);
Json to_json(const MultiGraph& m);

// Rejects unknown fields, loops, unknown endpoints, and parallel edges in
// simple graphs. `extra` names additional top-level keys to tolerate.
FiniteGraph graph_from_json(const Json& j, std::initializer_list<const char*> extra = {});
MultiGraph multigraph_from_json(const Json& j);
std::variant<FiniteGraph, MultiGraph> any_graph_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

Json edge_set_json(const FiniteGraph& g, const EdgeSet& s);

}  // namespace hamloc
