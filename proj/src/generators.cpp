#include "hamloc/generators.hpp"

namespace hamloc {

std::string index_name(std::size_t i, std::size_t n) {
  std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  auto s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

FiniteGraph path_graph(std::size_t n) {
  FiniteGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(index_name(i, n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

FiniteGraph cycle_graph(std::size_t n) {
  auto g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<VertexId>(n - 1), 0);
  return g;
}

FiniteGraph complete_graph(std::size_t n) {
  FiniteGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(index_name(i, n));
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

FiniteGraph complete_bipartite(std::size_t p, std::size_t q) {
  FiniteGraph g;
  for (std::size_t i = 0; i < p; ++i) g.add_vertex("a" + std::to_string(i));
  for (std::size_t j = 0; j < q; ++j) g.add_vertex("b" + std::to_string(j));
  for (VertexId i = 0; i < p; ++i)
    for (VertexId j = 0; j < q; ++j) g.add_edge(i, static_cast<VertexId>(p + j));
  return g;
}

FiniteGraph wheel_graph(std::size_t rim) {
  auto g = cycle_graph(rim);
  auto h = g.add_vertex("h");
  for (VertexId i = 0; i < rim; ++i) g.add_edge(h, i);
  return g;
}

FiniteGraph star_graph(std::size_t leaves) {
  FiniteGraph g;
  auto z = g.add_vertex("z");
  for (std::size_t i = 0; i < leaves; ++i) g.add_edge(z, g.add_vertex(index_name(i, leaves)));
  return g;
}

FiniteGraph diamond_graph() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

FiniteGraph subdivided_claw() {
  return make_graph({{"z", "x0"}, {"x0", "y0"}, {"z", "x1"}, {"x1", "y1"}, {"z", "x2"}, {"x2", "y2"}});
}

}  // namespace hamloc
