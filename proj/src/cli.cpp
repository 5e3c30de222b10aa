#include "hamloc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "hamloc/caterpillar.hpp"
#include "hamloc/error.hpp"
#include "hamloc/fragment.hpp"
#include "hamloc/graph_json.hpp"
#include "hamloc/graph_ops.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/lazy.hpp"
#include "hamloc/minor.hpp"
#include "hamloc/outerplanar.hpp"
#include "hamloc/suites.hpp"
#include "hamloc/unique_circle.hpp"

namespace hamloc {
namespace {

struct Config {
  std::string input;
  std::string generator;
  std::string out_path;
  std::string layout_path;
  std::string fragment_path;
  std::string region = "level";
  std::string pattern;
  std::string member;
  std::string suite = "all";
  int k = 2;
  int level = 1;
  int levels = 3;
  int radius = 2;
  std::size_t max_n = 0;
  std::uint64_t seed = 1;
  bool cycle = false;
  bool contractible = false;
  bool square_cycle = false;
  bool parallel = false;
  ExploreBudget budget{200000, 64, 8};
};

Json budget_json(const ExploreBudget& b) {
  return {{"max_vertices", b.max_vertices}, {"max_radius", b.max_radius}, {"depth", b.depth}};
}

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json load_input(const Config& c, std::istream& in) {
  if (c.input.empty()) throw InputError("missing input file");
  if (c.input == "-") return parse_json_text(read_stream(in));
  return read_json_file(c.input);
}

FiniteGraph load_graph(const Config& c, std::istream& in) {
  auto g = graph_from_json(load_input(c, in));
  if (g.order() > c.budget.max_vertices)
    throw BudgetError("input has " + std::to_string(g.order()) + " vertices, above --max-vertices");
  return g;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("cannot write " + path);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json names_json(const FiniteGraph& g, const std::vector<VertexId>& vs) {
  Json a = Json::array();
  for (auto v : vs) a.push_back(g.name(v));
  return a;
}

Json named_edges_json(const std::vector<NamedEdge>& es) {
  Json a = Json::array();
  for (const auto& e : es) a.push_back({e.first, e.second});
  return a;
}

Json base_report(const std::string& command, const Config& c) {
  Json j;
  j["command"] = command;
  j["budget"] = budget_json(c.budget);
  return j;
}

bool two_connected_ok(const FiniteGraph& g) { return g.order() >= 3 && is_two_connected(g); }

int cmd_power(const Config& c, std::istream& in, std::ostream& out) {
  if (c.k < 1) throw InputError("--k must be at least 1");
  auto g = load_graph(c, in);
  auto p = kth_power(g, c.k);
  auto j = base_report("power", c);
  j["k"] = c.k;
  j["vertices"] = p.order();
  j["edges"] = p.size();
  if (c.out_path.empty())
    j["graph"] = to_json(p);
  else
    write_file(c.out_path, to_json(p).dump(2) + "\n");
  emit(out, j);
  return 0;
}

int cmd_outerplanar(const Config& c, std::istream& in, std::ostream& out) {
  auto g = load_graph(c, in);
  auto v = outerplanar_verdict(g);
  auto j = base_report("outerplanar", c);
  j["outerplanar"] = v.outerplanar;
  j["reason"] = v.reason;
  if (v.k4) j["witness"] = names_json(g, *v.k4);
  if (v.k23) j["witness"] = witness_json(g, *v.k23);
  if (!v.outerplanar) {
    emit(out, j);
    return 1;
  }
  const bool want = c.cycle || c.contractible || !c.layout_path.empty();
  if (want && !two_connected_ok(g)) throw InputError("--cycle, --contractible and --layout need a 2-connected graph");
  if (c.cycle) {
    auto hc = unique_hamilton_cycle_outerplanar(g);
    j["cycle"] = names_json(g, cycle_order(g, hc));
  }
  if (c.contractible) j["contractible"] = edge_set_json(g, two_contractible_edges(g));
  if (!c.layout_path.empty()) {
    auto d = disk_layout(g);
    if (!chords_non_crossing(g, d)) throw InternalError("layout chords cross");
    write_file(c.layout_path, layout_svg(g, d));
    j["layout"] = layout_json(g, d);
  }
  emit(out, j);
  return 0;
}

int cmd_caterpillar(const Config& c, std::istream& in, std::ostream& out) {
  auto t = load_graph(c, in);
  auto spine = is_caterpillar(t);
  auto j = base_report("caterpillar", c);
  j["caterpillar"] = spine.has_value();
  if (!spine) {
    auto w = find_s_k13(t);
    if (!w) throw InternalError("non-caterpillar without an S(K13) subgraph");
    j["s_k13"] = {{"center", t.name(w->center)},
                  {"middle", {t.name(w->middle[0]), t.name(w->middle[1]), t.name(w->middle[2])}},
                  {"end", {t.name(w->end[0]), t.name(w->end[1]), t.name(w->end[2])}}};
    emit(out, j);
    return 1;
  }
  j["spine"] = names_json(t, *spine);
  if (t.order() >= 2) {
    auto p = caterpillar_partition(t);
    Json classes = Json::array();
    for (const auto& cl : p.classes) classes.push_back(names_json(t, cl));
    j["classes"] = classes;
  }
  if (c.square_cycle) {
    if (t.order() < 3) throw InputError("--square-cycle needs at least 3 vertices");
    auto sc = hamilton_cycle_of_square(t);
    if (!is_spanning_cycle(sc.square, sc.cycle)) throw InternalError("square cycle is not spanning");
    j["square_cycle"] = names_json(sc.square, sc.order);
  }
  emit(out, j);
  return 0;
}

int cmd_minor(const Config& c, std::istream& in, std::ostream& out) {
  auto p = parse_pattern(c.pattern);
  auto g = load_graph(c, in);
  auto w = find_minor(g, p);
  auto j = base_report("minor", c);
  j["pattern"] = pattern_name(p);
  j["found"] = w.has_value();
  if (w) {
    if (auto bad = validate_witness(g, *w); !bad.empty()) throw InternalError("invalid witness: " + bad);
    j["witness"] = witness_json(g, *w);
  }
  emit(out, j);
  return 0;
}

int cmd_tutte(const Config& c, std::istream& in, std::ostream& out) {
  FragmentCheck chk;
  if (c.fragment_path.empty() && c.input.empty()) {
    chk = check_fragment(load_tutte_fragment());
  } else {
    Config cc = c;
    if (cc.input.empty()) cc.input = c.fragment_path;
    chk = check_fragment(fragment_from_json(load_input(cc, in)));
  }
  auto j = fragment_check_json(chk);
  j["budget"] = budget_json(c.budget);
  emit(out, j);
  const bool ok = chk.t_minus_u == 0 && chk.t_minus_r == 2 && chk.pendants_in_r_paths;
  return ok ? 0 : 1;
}

void check_level(int n) {
  if (n < 0) throw InputError("--level must be non-negative");
  if (n > kDefaultLevelCap) throw BudgetError("level above the construction cap " + std::to_string(kDefaultLevelCap));
}

int cmd_construct(const Config& c, std::ostream& out) {
  check_level(c.level);
  auto [g, ft] = build_gn(c.level);
  if (g.order() > c.budget.max_vertices) throw BudgetError("G_n exceeds --max-vertices");
  bool cubic = true;
  for (VertexId v = 0; v < g.order(); ++v) cubic = cubic && g.degree(v) == 3;
  bool cuts3 = true;
  for (const auto& [path, size] : boundary_cuts(ft)) cuts3 = cuts3 && size == 3;
  auto j = base_report("construct-gn", c);
  j["level"] = c.level;
  j["vertices"] = g.order();
  j["edges"] = g.size();
  j["copies"] = ft.copies.size();
  j["marked"] = ft.marked.size();
  j["cubic"] = cubic;
  j["boundary_cuts_all_3"] = cuts3;
  if (c.out_path.empty())
    j["graph"] = to_json(g);
  else
    write_file(c.out_path, to_json(g).dump(2) + "\n");
  emit(out, j);
  return cubic && cuts3 ? 0 : 1;
}

enum class Gen { Ladder, Section5 };

Gen parse_generator(const std::string& s) {
  if (s == "double-ladder") return Gen::Ladder;
  if (s == "section5") return Gen::Section5;
  throw InputError("unknown generator '" + s + "' (double-ladder|section5)");
}

void check_radius(const Config& c, int r) {
  if (r < 0) throw InputError("radius and levels must be non-negative");
  if (r > c.budget.max_radius) throw BudgetError("radius " + std::to_string(r) + " above --max-radius");
}

int cmd_ends(const Config& c, std::ostream& out) {
  auto gen = parse_generator(c.generator);
  check_radius(c, c.radius);
  auto kind = parse_region(c.region);
  auto lg = gen == Gen::Ladder ? double_ladder() : section5_graph();
  auto j = base_report("ends", c);
  j["generator"] = c.generator;
  j["report"] = end_report_json(lg, c.radius, kind, c.budget);
  emit(out, j);
  return 0;
}

struct Section5Data {
  TransferTable tt;
  Viability via;
};

Section5Data section5_data() {
  Section5Data d{transfer_table(load_tutte_fragment()), {}};
  d.via = stabilize(d.tt);
  return d;
}

// Region edges of q whose both ends lie in `keep`.
std::vector<NamedEdge> restrict_to(const std::vector<NamedEdge>& es, const std::set<std::string>& keep) {
  std::vector<NamedEdge> out;
  for (const auto& e : es)
    if (keep.count(e.first) && keep.count(e.second)) out.push_back(e);
  return out;
}

int cmd_unique_circle(const Config& c, std::ostream& out) {
  auto gen = parse_generator(c.generator);
  if (c.levels < 1) throw InputError("--levels must be at least 1");
  auto kind = parse_region(c.region);
  auto j = base_report("unique-circle", c);
  j["generator"] = c.generator;
  Json levels = Json::array();
  bool unique = true;
  bool stable_last = false;
  if (gen == Gen::Section5) {
    check_level(c.levels);
    auto d = section5_data();
    auto dp = fragment_dp_levels(c.levels, d.tt, d.via);
    auto hinted = section5_with_viability(d.via);
    for (int n = 1; n <= c.levels; ++n) {
      auto lv = level_verdict_json(dp[n]);
      if (n <= 2 && kind == RegionKind::Level) {
        auto q = quotient_hamilton(hinted, n, kind, c.budget);
        lv["quotient_count"] = q.cycles.size();
        lv["quotient_agrees"] = q.cycles.size() == dp[n].count && q.forced == dp[n].forced;
        unique = unique && lv["quotient_agrees"].get<bool>();
      }
      unique = unique && dp[n].count == 1;
      stable_last = dp[n].stable;
      levels.push_back(lv);
    }
    j["stabilized_at"] = d.via.stabilized_at;
    j["levels"] = levels;
    j["limit_claim"] = unique && stable_last ? "unique (fragment-tree exact)" : "not established";
  } else {
    check_radius(c, c.levels);
    auto lg = double_ladder();
    std::vector<NamedEdge> prev;
    for (int r = 1; r <= c.levels; ++r) {
      auto q = quotient_hamilton(lg, r, kind, c.budget);
      auto inner = region_vertices(lg, r - 1, kind, c.budget);
      std::set<std::string> keep(inner.begin(), inner.end());
      const bool stable = r > 1 && restrict_to(q.forced, keep) == prev;
      prev = q.forced;
      unique = unique && q.cycles.size() == 1;
      stable_last = stable;
      levels.push_back({{"level", r},
                        {"count", q.cycles.size()},
                        {"raw_count", q.raw_count},
                        {"forced", named_edges_json(q.forced)},
                        {"stable", stable}});
    }
    j["region"] = region_name(kind);
    j["levels"] = levels;
    j["limit_claim"] = unique && (stable_last || c.levels == 1) ? "unique at every checked level (quotient exact)"
                                                                 : "not established";
  }
  emit(out, j);
  return unique ? 0 : 1;
}

int cmd_verify_circle(const Config& c, std::ostream& out) {
  auto gen = parse_generator(c.generator);
  if (c.levels < 1) throw InputError("--levels must be at least 1");
  auto kind = parse_region(c.region);
  std::vector<int> lv;
  for (int n = 1; n <= c.levels; ++n) lv.push_back(n);
  std::vector<CircleCheck> res;
  if (gen == Gen::Ladder) {
    if (c.member != "rails") throw InputError("double-ladder supports --member rails");
    check_radius(c, c.levels);
    res = verify_candidate_circle(double_ladder(), ladder_rails_member(), lv, kind, c.budget);
  } else {
    if (c.member != "fragment-path") throw InputError("section5 supports --member fragment-path");
    check_level(c.levels);
    auto d = section5_data();
    res = verify_candidate_circle(section5_with_viability(d.via), fragment_path_member(d.tt, d.via), lv, kind,
                                  c.budget);
  }
  auto j = base_report("verify-circle", c);
  j["generator"] = c.generator;
  j["member"] = c.member;
  Json levels = Json::array();
  bool ok = true;
  for (const auto& r : res) {
    ok = ok && r.ok;
    Json e = {{"level", r.level}, {"ok", r.ok}};
    if (!r.reason.empty()) e["reason"] = r.reason;
    levels.push_back(e);
  }
  j["levels"] = levels;
  j["accepted"] = ok;
  emit(out, j);
  return ok ? 0 : 1;
}

int cmd_corpus(const Config& c, std::ostream& out) {
  auto cap = [&](std::size_t n) { return c.max_n == 0 ? n : std::min(n, c.max_n); };
  static const std::set<std::string> known{"all",  "caterpillar", "outerplanar", "unique-cycle", "k4-minor",
                                           "layout", "euler",     "struct"};
  if (!known.count(c.suite)) throw InputError("unknown suite '" + c.suite + "'");
  auto want = [&](const char* s) { return c.suite == "all" || c.suite == s; };
  std::vector<SuiteResult> rs;
  if (want("caterpillar")) rs.push_back(suite_caterpillar(3, cap(10), c.parallel));
  if (want("outerplanar")) rs.push_back(suite_outerplanar(cap(8), c.parallel));
  if (want("unique-cycle")) rs.push_back(suite_unique_cycle(4, cap(9), c.parallel));
  if (want("k4-minor")) rs.push_back(suite_k4(cap(7), c.parallel));
  if (want("layout")) rs.push_back(suite_layout(cap(9), c.parallel));
  if (want("euler")) {
    rs.push_back(suite_euler_splits(c.seed, 1000, cap(10)));
    rs.push_back(suite_split_to_cycle(c.seed + 1, 200, cap(10)));
  }
  if (want("struct")) {
    rs.push_back(suite_struct1(c.seed + 2, 500, cap(10)));
    rs.push_back(suite_quotient(c.seed + 3, 500, cap(10)));
  }
  auto j = base_report("corpus", c);
  j["seed"] = c.seed;
  Json suites = Json::array();
  bool ok = true;
  for (const auto& r : rs) {
    ok = ok && r.ok();
    suites.push_back(suite_json(r));
  }
  j["suites"] = suites;
  j["ok"] = ok;
  emit(out, j);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Hamiltonicity tools for finite and locally finite graphs", "hamloc"};
  app.require_subcommand(1);
  app.add_option("--max-vertices", c.budget.max_vertices, "vertex budget for inputs and explorations")
      ->capture_default_str();
  app.add_option("--max-radius", c.budget.max_radius, "largest radius or level explored")->capture_default_str();
  app.add_option("--depth", c.budget.depth, "exploration depth behind a region")->capture_default_str();
  app.fallthrough();

  auto* power = app.add_subcommand("power", "k-th power of a graph");
  power->add_option("input", c.input, "JSON graph file or -")->required();
  power->add_option("--k", c.k, "exponent")->capture_default_str();
  power->add_option("--out", c.out_path, "write the graph here");

  auto* outer = app.add_subcommand("outerplanar", "outerplanarity with witness, cycle and layout");
  outer->add_option("input", c.input, "JSON graph file or -")->required();
  outer->add_flag("--cycle", c.cycle, "report the unique Hamilton cycle");
  outer->add_flag("--contractible", c.contractible, "report the 2-contractible edges");
  outer->add_option("--layout", c.layout_path, "write an SVG disk layout");

  auto* cat = app.add_subcommand("caterpillar", "caterpillar test, partition and square cycle");
  cat->add_option("input", c.input, "JSON tree file or -")->required();
  cat->add_flag("--square-cycle", c.square_cycle, "report a Hamilton cycle of the square");

  auto* minor = app.add_subcommand("minor", "K4 or K23 minor search");
  minor->add_option("input", c.input, "JSON graph file or -")->required();
  minor->add_option("--pattern", c.pattern, "k4 or k23")->required();

  auto* tutte = app.add_subcommand("tutte-verify", "Hamilton path counts of the Tutte fragment");
  tutte->add_option("--fragment", c.fragment_path, "fragment data file (default: built in)");

  auto* gn = app.add_subcommand("construct-gn", "finite graph G_n of the fragment tree");
  gn->add_option("--level", c.level, "tree level")->capture_default_str();
  gn->add_option("--out", c.out_path, "write the graph here");

  auto* ends = app.add_subcommand("ends", "deep components and end degree bounds");
  ends->add_option("--generator", c.generator, "double-ladder or section5")->required();
  ends->add_option("--radius", c.radius, "region radius or level")->capture_default_str();
  ends->add_option("--region", c.region, "level or ball")->capture_default_str();

  auto* uc = app.add_subcommand("unique-circle", "count Hamilton circles level by level");
  uc->add_option("--generator", c.generator, "double-ladder or section5")->required();
  uc->add_option("--levels", c.levels, "highest level")->capture_default_str();
  uc->add_option("--region", c.region, "level or ball")->capture_default_str();

  auto* vc = app.add_subcommand("verify-circle", "check a candidate circle on every level");
  vc->add_option("--generator", c.generator, "double-ladder or section5")->required();
  vc->add_option("--member", c.member, "rails or fragment-path")->required();
  vc->add_option("--levels", c.levels, "highest level")->capture_default_str();
  vc->add_option("--region", c.region, "level or ball")->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "exhaustive small-graph property suites");
  corpus->add_option("--suite", c.suite,
                     "all, caterpillar, outerplanar, unique-cycle, k4-minor, layout, euler or struct")
      ->capture_default_str();
  corpus->add_option("--max-n", c.max_n, "cap on vertex counts (0 = defaults)");
  corpus->add_option("--seed", c.seed, "seed for randomized suites")->capture_default_str();
  corpus->add_flag("--parallel", c.parallel, "evaluate exhaustive suites in parallel");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (c.budget.max_radius < 0 || c.budget.depth < 1) throw InputError("budgets must be positive");
    if (power->parsed()) return cmd_power(c, in, out);
    if (outer->parsed()) return cmd_outerplanar(c, in, out);
    if (cat->parsed()) return cmd_caterpillar(c, in, out);
    if (minor->parsed()) return cmd_minor(c, in, out);
    if (tutte->parsed()) return cmd_tutte(c, in, out);
    if (gn->parsed()) return cmd_construct(c, out);
    if (ends->parsed()) return cmd_ends(c, out);
    if (uc->parsed()) return cmd_unique_circle(c, out);
    if (vc->parsed()) return cmd_verify_circle(c, out);
    if (corpus->parsed()) return cmd_corpus(c, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hamloc
