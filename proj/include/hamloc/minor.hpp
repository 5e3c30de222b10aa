#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamloc/graph.hpp"
#include "hamloc/graph_json.hpp"

namespace hamloc {

enum class Pattern { K4, K23 };

std::string pattern_name(Pattern p);
Pattern parse_pattern(const std::string& s);  // "k4" / "k23", any case

struct MinorWitness {
  Pattern pattern;
  // Pattern vertex name -> host vertices (sorted by name).
  std::map<std::string, std::vector<VertexId>> branch_sets;
  // One host edge per pattern edge, in pattern edge order.
  std::vector<std::pair<std::pair<std::string, std::string>, EdgeId>> edges;
};

std::optional<std::vector<VertexId>> find_k4_subgraph(const FiniteGraph& g);

// Branch-set search; hard error above 64 vertices.
std::optional<MinorWitness> find_minor(const FiniteGraph& g, Pattern p);

// Empty string when valid, otherwise the first violated invariant.
std::string validate_witness(const FiniteGraph& g, const MinorWitness& w);
Json witness_json(const FiniteGraph& g, const MinorWitness& w);

// Cyclic order with no two interleaving edges; hard error above 10 vertices.
std::optional<std::vector<VertexId>> circular_ordering_oracle(const FiniteGraph& g);

struct OuterplanarVerdict {
  bool outerplanar;
  std::string reason;  // "", "K4 subgraph", "K23 minor"
  std::optional<std::vector<VertexId>> k4;
  std::optional<MinorWitness> k23;
};
OuterplanarVerdict outerplanar_verdict(const FiniteGraph& g);
bool is_outerplanar(const FiniteGraph& g);

// Precondition: no K23 minor (InputError otherwise).
bool k4_minor_equals_subgraph(const FiniteGraph& g);

}  // namespace hamloc
