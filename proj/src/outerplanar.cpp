#include "hamloc/outerplanar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "hamloc/error.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/minor.hpp"

namespace hamloc {

EdgeSet two_contractible_edges(const FiniteGraph& g) {
  if (!is_two_connected(g)) throw InputError("two_contractible_edges: graph is not 2-connected");
  EdgeSet out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (is_two_connected(contract_subgraph(g, {g.edge(e).a, g.edge(e).b}))) out.push_back(e);
  return out;
}

EdgeSet unique_hamilton_cycle_outerplanar(const FiniteGraph& g) {
  if (!is_two_connected(g)) throw InputError("graph is not 2-connected");
  if (!is_outerplanar(g)) throw InputError("graph is not outerplanar");
  if (g.order() == 3) return {0, 1, 2};
  auto c = two_contractible_edges(g);
  if (!is_spanning_cycle(g, c)) throw InternalError("2-contractible edges do not form a Hamilton cycle");
  return c;
}

FiniteGraph contraction_quotient(const FiniteGraph& g, const std::vector<VertexId>& k) {
  if (k.empty()) throw InputError("contraction_quotient: k must be nonempty");
  std::vector<char> outside(g.order(), 1);
  for (auto v : k) outside[v] = 0;
  auto lab = component_labels(g, outside);
  const int comps = component_count(lab);
  std::vector<std::string> rep(comps);
  for (VertexId v = 0; v < g.order(); ++v)
    if (lab[v] >= 0 && (rep[lab[v]].empty() || g.name(v) < rep[lab[v]])) rep[lab[v]] = g.name(v);
  FiniteGraph q;
  std::vector<VertexId> map(g.order());
  for (VertexId v = 0; v < g.order(); ++v)
    if (!outside[v]) map[v] = q.add_vertex(g.name(v));
  std::vector<VertexId> cmap(comps);
  for (int c = 0; c < comps; ++c) cmap[c] = q.add_vertex("comp:" + rep[c]);
  for (VertexId v = 0; v < g.order(); ++v)
    if (outside[v]) map[v] = cmap[lab[v]];
  for (const auto& e : g.edges())
    if (map[e.a] != map[e.b]) q.ensure_edge(map[e.a], map[e.b]);
  return q;
}

bool check_quotient_two_connected(const FiniteGraph& g, const std::vector<VertexId>& k) {
  if (!is_two_connected(g)) throw InputError("check_quotient_two_connected: graph is not 2-connected");
  if (k.size() < 3) throw InputError("check_quotient_two_connected: |k| must be at least 3");
  if (!is_connected_subset(g, k)) throw InputError("check_quotient_two_connected: g[k] is not connected");
  return is_two_connected(contraction_quotient(g, k));
}

std::vector<Struct1Violation> check_struct1(const FiniteGraph& g, const std::vector<VertexId>& k0) {
  if (!is_two_connected(g)) throw InputError("check_struct1: graph is not 2-connected");
  if (!is_connected_subset(g, k0)) throw InputError("check_struct1: g[k0] is not connected");
  if (find_minor(g, Pattern::K23)) throw InputError("check_struct1: graph has a K23 minor");
  std::vector<char> alive(g.order(), 1);
  for (auto v : k0) {
    alive[v] = 0;
    for (auto u : g.neighbors(v)) alive[u] = 0;
  }
  auto lab = component_labels(g, alive);
  std::vector<Struct1Violation> out;
  for (int c = 0; c < component_count(lab); ++c) {
    std::vector<VertexId> comp;
    std::vector<char> nb(g.order(), 0);
    for (VertexId v = 0; v < g.order(); ++v)
      if (lab[v] == c) comp.push_back(v);
    for (auto v : comp)
      for (auto u : g.neighbors(v))
        if (lab[u] != c) nb[u] = 1;
    auto size = static_cast<std::size_t>(std::count(nb.begin(), nb.end(), 1));
    if (size != 2) out.push_back({comp, size});
  }
  return out;
}

DiskLayout disk_layout(const FiniteGraph& g) {
  auto cycle = unique_hamilton_cycle_outerplanar(g);
  DiskLayout d;
  d.order = cycle_order(g, cycle);
  const auto n = d.order.size();
  for (std::size_t i = 0; i < n; ++i) d.angles.push_back(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) d.boundary.push_back(*g.edge_between(d.order[i], d.order[(i + 1) % n]));
  std::vector<char> on_cycle(g.size(), 0);
  for (auto e : cycle) on_cycle[e] = 1;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!on_cycle[e]) d.chords.push_back(e);
  if (!chords_non_crossing(g, d)) throw InternalError("disk_layout: chords cross");
  return d;
}

bool chords_non_crossing(const FiniteGraph& g, const DiskLayout& d) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < d.order.size(); ++i) pos[d.order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < d.chords.size(); ++i)
    for (std::size_t j = i + 1; j < d.chords.size(); ++j) {
      const auto& e = g.edge(d.chords[i]);
      const auto& f = g.edge(d.chords[j]);
      int a = std::min(pos[e.a], pos[e.b]), b = std::max(pos[e.a], pos[e.b]);
      int c = pos[f.a], x = pos[f.b];
      if (c == a || c == b || x == a || x == b) continue;
      if ((a < c && c < b) != (a < x && x < b)) return false;
    }
  return true;
}

Json layout_json(const FiniteGraph& g, const DiskLayout& d) {
  Json j;
  j["vertices"] = Json::array();
  for (std::size_t i = 0; i < d.order.size(); ++i)
    j["vertices"].push_back({{"id", g.name(d.order[i])}, {"angle", d.angles[i]}});
  auto pairs = [&](const std::vector<EdgeId>& es) {
    Json a = Json::array();
    for (auto e : es) {
      auto [x, y] = g.edge_names(e);
      a.push_back({x, y});
    }
    return a;
  };
  j["boundary"] = pairs(d.boundary);
  j["chords"] = pairs(d.chords);
  return j;
}

std::string layout_svg(const FiniteGraph& g, const DiskLayout& d) {
  const double c = 256.0, r = 200.0;
  std::vector<double> x(g.order()), y(g.order());
  for (std::size_t i = 0; i < d.order.size(); ++i) {
    x[d.order[i]] = c + r * std::cos(d.angles[i]);
    y[d.order[i]] = c - r * std::sin(d.angles[i]);
  }
  auto esc = [](const std::string& t) {
    std::string o;
    for (char ch : t) {
      if (ch == '<') o += "&lt;";
      else if (ch == '>') o += "&gt;";
      else if (ch == '&') o += "&amp;";
      else o += ch;
    }
    return o;
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  s << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  const auto n = d.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto a = d.order[i], b = d.order[(i + 1) % n];
    // Counter-clockwise on screen is sweep-flag 0 with y pointing down.
    int large = n == 1 ? 1 : 0;
    s << "<path d=\"M " << num(x[a]) << ' ' << num(y[a]) << " A " << num(r) << ' ' << num(r) << " 0 " << large
      << " 0 " << num(x[b]) << ' ' << num(y[b]) << "\"/>\n";
  }
  s << "</g>\n<g stroke=\"#1f5fa8\" stroke-width=\"1.5\">\n";
  for (auto e : d.chords) {
    const auto& ed = g.edge(e);
    s << "<line x1=\"" << num(x[ed.a]) << "\" y1=\"" << num(y[ed.a]) << "\" x2=\"" << num(x[ed.b]) << "\" y2=\""
      << num(y[ed.b]) << "\"/>\n";
  }
  s << "</g>\n<g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    auto v = d.order[i];
    double lx = c + (r + 22) * std::cos(d.angles[i]);
    double ly = c - (r + 22) * std::sin(d.angles[i]) + 5;
    s << "<circle cx=\"" << num(x[v]) << "\" cy=\"" << num(y[v]) << "\" r=\"4\"/>";
    s << "<text x=\"" << num(lx) << "\" y=\"" << num(ly) << "\">" << esc(g.name(v)) << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace hamloc
