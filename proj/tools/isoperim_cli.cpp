// Command-line front end: tables, exact solver, orderings, proof-step verifiers, figures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "isoperim/counterexample.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/oracle.hpp"
#include "isoperim/polygon.hpp"
#include "isoperim/render.hpp"
#include "isoperim/sequencer.hpp"
#include "isoperim/trilattice.hpp"
#include "isoperim/verifier.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace isop;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::int64_t n = 0;
  std::int64_t n_max = 0;
  std::int64_t k = 4;
  std::size_t d = 2;
  std::int64_t budget_sets = OracleOptions{}.max_sets;
  double budget_seconds = 0;
  unsigned threads = 1;
  std::string format;
  std::string out;
  std::string in;
  std::string svg;
  std::string graph = "lambda";
  double scale = 40;
  bool labels = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + cfg.out);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions o;
  o.max_sets = cfg.budget_sets;
  if (cfg.budget_seconds > 0) o.wall_clock_seconds = cfg.budget_seconds;
  o.threads = cfg.threads;
  return o;
}

ordered_json point_json(const LatticePoint& p) {
  ordered_json a = ordered_json::array();
  for (auto c : p.coords()) a.push_back(c);
  return a;
}

ordered_json params_json(const TwelveGonParams& p) {
  return {{"u", p.u}, {"t", p.t}};
}

std::vector<TriPoint> read_points(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  const auto& list = j.is_object() && j.contains("points") ? j["points"] : j;
  if (!list.is_array()) throw UsageError(path + ": expected a list of [a, b] pairs");
  std::vector<TriPoint> pts;
  for (const auto& p : list) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw UsageError(path + ": every point must be an integer pair [a, b]");
    }
    pts.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
  return pts;
}

int cmd_table(const RunConfig& cfg) {
  const std::int64_t n_max = cfg.n_max > 0 ? cfg.n_max : 55;
  if (n_max < 3) throw UsageError("table: --n-max must be at least 3");
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "csv") {
    std::ostringstream s;
    s << "n,e(n),e(n)-e(n-1)\n";
    for (std::int64_t n = 3; n <= n_max; ++n) {
      s << n << ',' << e_of_n(n) << ',';
      if (n > 3) s << e_of_n(n) - e_of_n(n - 1);
      s << '\n';
    }
    emit(cfg, s.str());
  } else if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::int64_t n = 3; n <= n_max; ++n) {
      ordered_json r{{"n", n}, {"e", e_of_n(n)}};
      r["delta"] = n > 3 ? ordered_json(e_of_n(n) - e_of_n(n - 1)) : ordered_json(nullptr);
      rows.push_back(r);
    }
    emit(cfg, dump({{"rows", rows}}));
  } else {
    throw UsageError("table: --format must be csv or json");
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("solve: --n must be at least 1");
  if (!cfg.format.empty() && cfg.format != "json") throw UsageError("solve: only json output is supported");
  const CayleyGraphSpec g = cfg.graph == "lambda" ? lambda_u() : cfg.graph == "g2" ? g_d(2) : throw UsageError("solve: --graph must be lambda or g2");
  OracleResult r = max_induced_edges(g, cfg.n, oracle_options(cfg));
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json set = ordered_json::array();
    for (const auto& p : w) set.push_back(point_json(p));
    witnesses.push_back(set);
  }
  ordered_json j{{"n", r.n},
                 {"best_edges", r.best_edges},
                 {"best_boundary", r.best_boundary},
                 {"witnesses", witnesses},
                 {"sets_explored", r.sets_explored}};
  if (cfg.graph == "lambda" && cfg.n >= 1) j["formula_edges"] = optimal_edges(cfg.n);
  emit(cfg, dump(j));
  return kExitOk;
}

int cmd_order(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("order: --n must be at least 1");
  const std::string format = cfg.format.empty() ? "jsonl" : cfg.format;
  const auto entries = ordering_stream(cfg.n);
  std::ostringstream s;
  if (format == "jsonl") {
    for (const auto& e : entries) {
      ordered_json j{{"index", e.index},
                     {"a", e.point.a},
                     {"b", e.point.b},
                     {"edges_added", e.edges_added},
                     {"cumulative_edges", e.cumulative_edges}};
      s << j.dump() << '\n';
    }
  } else if (format == "csv") {
    s << "index,a,b,edges_added,cumulative_edges\n";
    for (const auto& e : entries) {
      s << e.index << ',' << e.point.a << ',' << e.point.b << ',' << e.edges_added << ',' << e.cumulative_edges << '\n';
    }
  } else if (format == "svg") {
    std::vector<TriPoint> pts;
    for (const auto& e : entries) pts.push_back(e.point);
    s << render_svg(pts, SvgOptions{cfg.scale, true, true});
  } else {
    throw UsageError("order: --format must be jsonl, csv or svg");
  }
  emit(cfg, s.str());
  return kExitOk;
}

int cmd_verify_base(const RunConfig& cfg) {
  BaseCaseReport report = compute_base_cases();
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json v = ordered_json::array();
    for (const auto& p : r.violations) v.push_back(params_json(p));
    rows.push_back({{"n", r.n},
                    {"boundary_bound", r.boundary_bound},
                    {"b_bound", r.b_bound},
                    {"tuples", r.tuples},
                    {"violations", v}});
  }
  emit(cfg, dump({{"check", "base-cases"}, {"verdict", report.passed() ? "PASS" : "FAIL"}, {"rows", rows}}));
  return report.passed() ? kExitOk : kExitFailure;
}

ordered_json offset_json(const OffsetCase& c) { return {{"mu", c.mu}, {"tau", c.tau}}; }

int cmd_verify_inductive(const RunConfig& cfg) {
  InductiveReport report = compute_inductive_cases(cfg.threads);
  bool ok = report.ok() && report.total == kPinnedInductiveCaseCount;
  ordered_json exceptional = ordered_json::array();
  for (const auto& c : report.exceptional) {
    ordered_json e = offset_json(c);
    EdgeFormula f = case_edge_formula(c);
    e["a"] = f.a;
    e["c"] = f.c;
    exceptional.push_back(e);
  }
  ordered_json failures = ordered_json::array();
  for (const auto& [c, k] : report.failures) {
    ordered_json e = offset_json(c);
    e["k"] = k;
    failures.push_back(e);
  }
  emit(cfg, dump({{"check", "inductive"},
                  {"verdict", ok ? "PASS" : "FAIL"},
                  {"total_cases", report.total},
                  {"pinned_total_cases", kPinnedInductiveCaseCount},
                  {"passed", report.passed},
                  {"exceptional", exceptional},
                  {"failures", failures}}));
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify_nested(const RunConfig& cfg) {
  const std::int64_t n_max = cfg.n_max > 0 ? cfg.n_max : 2167;
  NestedReport report = check_nested(ordering_stream(n_max), n_max);
  ordered_json j{{"check", "nested"},
                 {"verdict", report.passed() ? "PASS" : "FAIL"},
                 {"n_max", report.n_max},
                 {"checked", report.checked}};
  j["first_bad_index"] = report.first_bad_index ? ordered_json(*report.first_bad_index) : ordered_json(nullptr);
  emit(cfg, dump(j));
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_sequence(const RunConfig& cfg) {
  AuxGraph graph = build_aux_graph();
  std::vector<SideMove> path = find_side_sequence(graph);
  std::vector<std::int64_t> a_values = validate_side_sequence(path, graph);
  ordered_json moves = ordered_json::array();
  for (std::size_t i = 0; i < path.size(); ++i) moves.push_back({{"move", to_string(path[i])}, {"a", a_values[i]}});
  bool reference_ok = true;
  ordered_json reference = ordered_json::array();
  try {
    for (auto a : validate_side_sequence(reference_side_sequence(), graph)) reference.push_back(a);
  } catch (const VerificationFailure&) {
    reference_ok = false;
  }
  ordered_json j{{"nodes", graph.nodes.size()},
                 {"edges", graph.edges.size()},
                 {"nonzero_constant_nodes", graph.nonzero_constant.size()},
                 {"initial_a", node_formula(GonNode::initial()).edges.a},
                 {"path_length", path.size()},
                 {"path", moves},
                 {"reference_sequence_valid", reference_ok},
                 {"reference_a_values", reference}};
  emit(cfg, dump(j));
  return reference_ok && graph.nonzero_constant.empty() ? kExitOk : kExitFailure;
}

int cmd_hull(const RunConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("hull: --in is required");
  std::vector<TriPoint> pts = read_points(cfg.in);
  if (pts.empty()) throw UsageError("hull: empty point list");
  HullSet h = hull(pts);
  ordered_json points = ordered_json::array();
  for (const auto& p : h.points()) points.push_back({p.a, p.b});
  emit(cfg, dump({{"size", h.size()}, {"params", params_json(params_from_hull(h))}, {"points", points}}));
  if (!cfg.svg.empty()) render_svg(h.points(), cfg.svg, SvgOptions{cfg.scale, true, false});
  return kExitOk;
}

int cmd_counterexample(const RunConfig& cfg) {
  const std::int64_t n_max = cfg.n_max > 0 ? cfg.n_max : 10;
  NestingReport report = nesting_dag(n_max, oracle_options(cfg));
  ordered_json levels = ordered_json::array();
  for (const auto& l : report.levels) {
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < l.classes.size(); ++i) {
      ordered_json pts = ordered_json::array();
      for (const auto& p : l.classes[i]) pts.push_back(point_json(p));
      classes.push_back({{"points", pts},
                         {"extends", static_cast<bool>(l.extends[i])},
                         {"children", l.children[i]},
                         {"longest_chain_from", l.longest_chain_from[i]}});
    }
    levels.push_back({{"n", l.n}, {"best_edges", l.best_edges}, {"best_boundary", l.best_boundary}, {"classes", classes}});
  }
  ordered_json cubes = ordered_json::array();
  const CayleyGraphSpec g = g_d(cfg.d);
  for (std::int64_t k = 2; k <= cfg.k; ++k) {
    const std::int64_t direct = edge_boundary(cube_set(cfg.d, k), g);
    const std::int64_t reference = cube_boundary_reference_formula(cfg.d, k);
    cubes.push_back({{"d", cfg.d},
                     {"k", k},
                     {"boundary_enumerated", direct},
                     {"boundary_reference_formula", reference},
                     {"discrepancy", direct != reference}});
  }
  emit(cfg, dump({{"d", 2},
                  {"n_max", report.n_max},
                  {"partial", report.partial},
                  {"levels", levels},
                  {"longest_chain", report.longest_chain},
                  {"longest_chain_length", report.longest_chain.size()},
                  {"cube_boundaries", cubes}}));
  return kExitOk;
}

int cmd_render(const RunConfig& cfg) {
  if (cfg.out.empty()) throw UsageError("render: --out is required");
  std::vector<TriPoint> pts;
  if (!cfg.in.empty()) {
    pts = read_points(cfg.in);
  } else if (cfg.n > 0) {
    for (const auto& e : ordering_stream(cfg.n)) pts.push_back(e.point);
  } else {
    throw UsageError("render: give --in or --n");
  }
  if (pts.empty()) throw UsageError("render: empty point list");
  render_svg(pts, cfg.out, SvgOptions{cfg.scale, true, cfg.labels});
  return kExitOk;
}

void report_error(const std::string& kind, const std::string& message, const ordered_json& extra = {}) {
  ordered_json j{{"error", kind}, {"message", message}};
  if (extra.is_object()) j.update(extra);
  std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  const CLI::Range kPositive(std::int64_t{1}, std::numeric_limits<std::int64_t>::max(), "POSITIVE");
  CLI::App app{"Edge-isoperimetric toolkit for the triangular lattice and related lattice graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  int (*handler)(const RunConfig&) = nullptr;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format");
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
  };

  auto* table = app.add_subcommand("table", "e(n) and its increments as CSV or JSON");
  table->add_option("--n-max", cfg.n_max, "Largest n (default 55)")->check(kPositive);
  add_common(table);
  table->callback([&] { handler = cmd_table; });

  auto* solve = app.add_subcommand("solve", "Exact maximum induced edge count by exhaustive search");
  solve->add_option("--n", cfg.n, "Set size")->check(kPositive)->required();
  solve->add_option("--graph", cfg.graph, "lambda (triangular, 12 generators) or g2");
  solve->add_option("--budget-sets", cfg.budget_sets, "Maximum search nodes")->check(kPositive);
  solve->add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock limit")->check(CLI::PositiveNumber);
  solve->add_option("--threads", cfg.threads, "Worker threads")->check(kPositive);
  add_common(solve);
  solve->callback([&] { handler = cmd_solve; });

  auto* order = app.add_subcommand("order", "The nested optimal ordering");
  order->add_option("--n", cfg.n, "Number of entries")->check(kPositive)->required();
  order->add_option("--scale", cfg.scale, "SVG pixels per unit")->check(CLI::PositiveNumber);
  add_common(order);
  order->callback([&] { handler = cmd_order; });

  auto* verify = app.add_subcommand("verify", "Reproduce a machine-checked proof step");
  verify->require_subcommand(1);
  auto* base = verify->add_subcommand("base-cases", "Small 12-gons have large boundary");
  add_common(base);
  base->callback([&] { handler = cmd_verify_base; });
  auto* inductive = verify->add_subcommand("inductive", "Near-extremal offset cases");
  inductive->add_option("--threads", cfg.threads, "Worker threads")->check(kPositive);
  add_common(inductive);
  inductive->callback([&] { handler = cmd_verify_inductive; });
  auto* nested = verify->add_subcommand("nested", "Every ordering prefix is optimal");
  nested->add_option("--n-max", cfg.n_max, "Largest prefix (default 2167)")->check(kPositive);
  add_common(nested);
  nested->callback([&] { handler = cmd_verify_nested; });

  auto* sequence = app.add_subcommand("sequence", "Auxiliary 12-gon graph and the side-fill sequence");
  add_common(sequence);
  sequence->callback([&] { handler = cmd_sequence; });

  auto* hull_cmd = app.add_subcommand("hull", "Hull of a point list given as JSON [[a, b], ...]");
  hull_cmd->add_option("--in", cfg.in, "Input JSON")->required();
  hull_cmd->add_option("--svg", cfg.svg, "Also draw the hull");
  hull_cmd->add_option("--scale", cfg.scale, "SVG pixels per unit")->check(CLI::PositiveNumber);
  add_common(hull_cmd);
  hull_cmd->callback([&] { handler = cmd_hull; });

  auto* counter = app.add_subcommand("counterexample", "Optimal-set containment DAG on Z^2 with +-2e_1");
  counter->add_option("--n-max", cfg.n_max, "Largest set size (default 10)")->check(kPositive);
  counter->add_option("--d", cfg.d, "Dimension for the cube boundary check")->check(CLI::Range(2, 6));
  counter->add_option("--k", cfg.k, "Largest cube side for the boundary check")->check(kPositive);
  counter->add_option("--budget-sets", cfg.budget_sets, "Maximum search nodes per size")->check(kPositive);
  counter->add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock limit per size")->check(CLI::PositiveNumber);
  counter->add_option("--threads", cfg.threads, "Worker threads")->check(kPositive);
  add_common(counter);
  counter->callback([&] { handler = cmd_counterexample; });

  auto* render = app.add_subcommand("render", "SVG of a point list or an ordering prefix");
  render->add_option("--in", cfg.in, "Input JSON point list");
  render->add_option("--n", cfg.n, "Ordering prefix length")->check(kPositive);
  render->add_option("--scale", cfg.scale, "Pixels per unit")->check(CLI::PositiveNumber);
  render->add_flag("--labels", cfg.labels, "Number the points");
  add_common(render);
  render->callback([&] { handler = cmd_render; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kExitUsage;
  }

  try {
    return handler(cfg);
  } catch (const UsageError& e) {
    report_error("usage", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    report_error("usage", e.what());
    return kExitUsage;
  } catch (const PreconditionError& e) {
    report_error("usage", e.what());
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    report_error("verification", e.what());
    return kExitFailure;
  } catch (const BudgetExceeded& e) {
    report_error("budget", e.what(), {{"sets_explored", e.sets_explored()}, {"best_lower_bound", e.best_lower_bound()}});
    return kExitFailure;
  } catch (const std::exception& e) {
    report_error("runtime", e.what());
    return kExitFailure;
  }
}
