#include "isoperim/sequencer.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <unordered_set>

#include "isoperim/errors.hpp"
#include "isoperim/exact.hpp"
#include "json.hpp"

#ifndef ISOP_DEFAULT_ASSET_DIR
#define ISOP_DEFAULT_ASSET_DIR "data"
#endif

namespace isop {
namespace {

constexpr std::int64_t kGraphLevel = 3;
constexpr std::int64_t kMinShortOffset = -2;
constexpr std::int64_t kRadicandLimit = 33;

GonNode raw_fill(const GonNode& node, SideMove move) {
  GonNode next = node;
  auto m = static_cast<std::size_t>(move);
  if (m < 6) {
    next.cu[m] -= 3;
    next.ct[(m + 5) % 6] += 1;
    next.ct[m] += 1;
  } else {
    std::size_t i = m - 6;
    next.ct[i] -= 1;
    next.cu[i] += 1;
    next.cu[(i + 1) % 6] += 1;
  }
  return next;
}

using PointSet = std::unordered_set<TriPoint, TriPointHash>;

std::int64_t gain_of(const PointSet& set, TriPoint p) {
  std::int64_t gain = 0;
  for (const auto& g : tri_generators()) gain += set.count(p + g);
  return gain;
}

}  // namespace

GonNode GonNode::initial() {
  GonNode g;
  g.cu.fill(-1);
  g.ct.fill(-2);
  return g;
}

GonNode GonNode::terminal() {
  GonNode g;
  g.cu.fill(0);
  g.ct.fill(-1);
  return g;
}

TwelveGonParams GonNode::at(std::int64_t k) const {
  TwelveGonParams p;
  for (std::size_t i = 0; i < 6; ++i) {
    p.u[i] = k + cu[i];
    p.t[i] = k + ct[i];
  }
  return p;
}

std::int64_t GonNode::min_side_offset() const {
  return std::min(*std::min_element(cu.begin(), cu.end()), *std::min_element(ct.begin(), ct.end()));
}

bool GonNode::closes() const {
  TwelveGonParams p;
  p.u = cu;
  p.t = ct;
  return closure_residuals(p) == std::pair<std::int64_t, std::int64_t>{0, 0};
}

std::string GonNode::to_string() const {
  std::string s = "cu=(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(cu[i]);
  s += ") ct=(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(ct[i]);
  return s + ")";
}

std::size_t GonNodeHash::operator()(const GonNode& g) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : g.cu) h = (h ^ static_cast<std::uint64_t>(x + 64)) * 0x100000001b3ULL;
  for (auto x : g.ct) h = (h ^ static_cast<std::uint64_t>(x + 64)) * 0x100000001b3ULL;
  return static_cast<std::size_t>(h);
}

std::string to_string(SideMove m) {
  auto i = static_cast<int>(m);
  return (i < 6 ? "u" : "t") + std::to_string(i % 6 + 1);
}

SideMove side_move_from_string(const std::string& label) {
  if (label.size() == 2 && (label[0] == 'u' || label[0] == 't') && label[1] >= '1' && label[1] <= '6') {
    int i = label[1] - '1' + (label[0] == 't' ? 6 : 0);
    return static_cast<SideMove>(i);
  }
  throw UsageError("unknown side label '" + label + "'");
}

std::size_t side_index(SideMove m) {
  auto i = static_cast<std::size_t>(m);
  return i < 6 ? 2 * i : 2 * (i - 6) + 1;
}

GonNode apply_side_fill(const GonNode& node, SideMove move) {
  GonNode next = raw_fill(node, move);
  if (next.min_side_offset() + kGraphLevel < 0) {
    throw DomainError("apply_side_fill: " + to_string(move) + " on " + node.to_string() +
                      " leaves a negative side at k=3");
  }
  if (!next.closes()) throw VerificationFailure("apply_side_fill: closure lost after " + to_string(move));
  return next;
}

NodeFormula node_formula(const GonNode& node) {
  std::array<KPolynomial, 6> u, t;
  std::int64_t boundary_constant = 12;
  for (std::size_t i = 0; i < 6; ++i) {
    u[i] = KPolynomial::shifted_k(node.cu[i]);
    t[i] = KPolynomial::shifted_k(node.ct[i]);
    boundary_constant += 6 * node.cu[i] + 10 * node.ct[i];
  }
  KPolynomial n = vertex_count_polynomial(u, t);
  if (n.degree() != 2 || n.coefficient(2) != 24) {
    throw VerificationFailure("node_formula: leading term is not 24k^2 for " + node.to_string());
  }
  NodeFormula f;
  f.lq = LQ{n.coefficient(1), n.coefficient(0), n};
  f.edges.a = f.lq.L * f.lq.L - 96 * f.lq.Q;
  // Edges are 6n - boundary/2 with boundary = 96k + boundary_constant and 48k = sqrt(96n + a) - L.
  f.edges.c = f.lq.L - boundary_constant / 2;
  return f;
}

std::size_t AuxGraph::index_of(const GonNode& g) const {
  auto it = index.find(g);
  return it == index.end() ? nodes.size() : it->second;
}

AuxGraph build_aux_graph() {
  AuxGraph graph;
  const GonNode start = GonNode::initial();
  const GonNode goal = GonNode::terminal();
  const std::int64_t goal_L = node_formula(goal).lq.L;
  graph.nodes.push_back(start);
  graph.index.emplace(start, 0);
  std::deque<std::size_t> queue{0};
  std::unordered_set<GonNode, GonNodeHash> rejected_constant;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (graph.nodes[v] == goal) continue;
    for (int m = 0; m < 12; ++m) {
      const auto move = static_cast<SideMove>(m);
      GonNode w = raw_fill(graph.nodes[v], move);
      if (w.min_side_offset() + kGraphLevel < 0) continue;
      if (*std::min_element(w.cu.begin(), w.cu.end()) < kMinShortOffset) continue;
      const NodeFormula f = node_formula(w);
      if (f.edges.c != 0) {
        if (rejected_constant.insert(w).second) graph.nonzero_constant.push_back(w);
        continue;
      }
      if (f.edges.a >= kRadicandLimit) continue;
      if (w != goal && f.lq.L >= goal_L) continue;
      auto [it, fresh] = graph.index.emplace(w, graph.nodes.size());
      if (fresh) {
        graph.nodes.push_back(w);
        queue.push_back(it->second);
      }
      graph.edges.push_back({v, it->second, move});
    }
  }
  return graph;
}

std::vector<SideMove> find_side_sequence(const AuxGraph& graph) {
  const std::size_t goal = graph.index_of(GonNode::terminal());
  if (goal == graph.nodes.size()) throw VerificationFailure("find_side_sequence: terminal 12-gon unreachable");
  // Edges are stored in BFS order with moves ascending, so the first edge into a node is its parent.
  std::vector<std::optional<AuxGraph::Edge>> parent(graph.nodes.size());
  for (const auto& e : graph.edges) {
    if (e.to != 0 && !parent[e.to]) parent[e.to] = e;
  }
  std::vector<SideMove> path;
  for (std::size_t v = goal; v != 0; v = parent[v]->from) {
    if (!parent[v]) throw VerificationFailure("find_side_sequence: broken parent chain");
    path.push_back(parent[v]->move);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<SideMove> find_side_sequence() { return find_side_sequence(build_aux_graph()); }

const std::vector<SideMove>& reference_side_sequence() {
  static const std::vector<SideMove> moves = [] {
    const char* labels[] = {"t1", "t2", "u2", "t1", "u1", "t6", "t2", "u3", "t3", "t1", "u2", "t2",
                            "t1", "u1", "t6", "u6", "t5", "t6", "t1", "u1", "u2", "t2", "u3", "t3",
                            "u4", "t4", "u5", "t5", "u6", "t6", "t1", "t2", "u2", "t1", "u1", "t6",
                            "t2", "u3", "t3", "t1", "u2", "t2", "t1", "u1", "t6", "u6", "t5", "t6"};
    std::vector<SideMove> out;
    for (const char* l : labels) out.push_back(side_move_from_string(l));
    return out;
  }();
  return moves;
}

std::vector<std::int64_t> validate_side_sequence(const std::vector<SideMove>& moves, const AuxGraph& graph) {
  std::vector<std::int64_t> a_values;
  GonNode node = GonNode::initial();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    std::size_t from = graph.index_of(node);
    GonNode next = raw_fill(node, moves[i]);
    std::size_t to = graph.index_of(next);
    bool has_edge = from < graph.nodes.size() && to < graph.nodes.size() &&
                    std::any_of(graph.edges.begin(), graph.edges.end(), [&](const AuxGraph::Edge& e) {
                      return e.from == from && e.to == to && e.move == moves[i];
                    });
    if (!has_edge) {
      throw VerificationFailure("validate_side_sequence: move " + std::to_string(i + 1) + " (" +
                                to_string(moves[i]) + ") leaves the auxiliary graph");
    }
    a_values.push_back(node_formula(next).edges.a);
    node = next;
  }
  if (node != GonNode::terminal()) throw VerificationFailure("validate_side_sequence: does not end at the terminal");
  return a_values;
}

std::filesystem::path asset_dir() {
  if (const char* env = std::getenv("ISOP_ASSET_DIR"); env != nullptr && *env != '\0') return env;
  return ISOP_DEFAULT_ASSET_DIR;
}

std::filesystem::path first55_path() { return asset_dir() / "first55.jsonl"; }

std::vector<OrderingEntry> load_first55(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("first-55 asset not found at " + path.string());
  std::vector<OrderingEntry> entries;
  std::string line;
  std::int64_t cumulative = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      OrderingEntry e;
      e.index = j.at("index").get<std::int64_t>();
      e.point = {j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>()};
      e.edges_added = j.at("edges_added").get<std::int64_t>();
      cumulative += e.edges_added;
      e.cumulative_edges = cumulative;
      if (e.index != static_cast<std::int64_t>(entries.size()) + 1) throw DomainError("index out of sequence");
      entries.push_back(e);
    } catch (const std::exception& ex) {
      throw DomainError("first-55 asset corrupt at line " + std::to_string(entries.size() + 1) + ": " + ex.what());
    }
  }
  if (entries.size() != 55) throw DomainError("first-55 asset has " + std::to_string(entries.size()) + " entries");
  return entries;
}

std::vector<OrderingEntry> load_first55() { return load_first55(first55_path()); }

void write_first55(const std::vector<OrderingEntry>& entries, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["index"] = e.index;
    j["a"] = e.point.a;
    j["b"] = e.point.b;
    j["edges_added"] = e.edges_added;
    out << j.dump() << '\n';
  }
}

std::vector<OrderingEntry> generate_first55() {
  constexpr std::int64_t kTarget = 55;
  std::vector<OrderingEntry> prefix;
  PointSet set;
  std::function<bool(std::int64_t)> extend = [&](std::int64_t n) -> bool {
    if (n > kTarget) return true;
    const std::int64_t before = prefix.empty() ? 0 : prefix.back().cumulative_edges;
    std::vector<TriPoint> candidates;
    if (prefix.empty()) {
      candidates.push_back({0, 0});
    } else {
      for (const auto& e : prefix) {
        for (const auto& g : tri_generators()) {
          TriPoint q = e.point + g;
          if (!set.count(q)) candidates.push_back(q);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (const auto& q : candidates) {
      const std::int64_t gain = gain_of(set, q);
      if (before + gain != optimal_edges(n)) continue;
      prefix.push_back({n, q, gain, before + gain});
      set.insert(q);
      if (extend(n + 1)) return true;
      set.erase(q);
      prefix.pop_back();
    }
    return false;
  };
  if (!extend(1)) throw VerificationFailure("generate_first55: no optimal ordering found");
  std::vector<TriPoint> pts;
  for (const auto& e : prefix) pts.push_back(e.point);
  TwelveGonParams expected;
  expected.u.fill(2);
  expected.t.fill(1);
  if (params_from_points(pts) != expected) throw VerificationFailure("generate_first55: final set is not the 12-gon");
  return prefix;
}

std::vector<OrderingEntry> ordering_stream(std::int64_t n_max) {
  if (n_max <= 0) return {};
  return ordering_stream(n_max, load_first55(), n_max > 55 ? find_side_sequence() : std::vector<SideMove>{});
}

std::vector<OrderingEntry> ordering_stream(std::int64_t n_max, const std::vector<OrderingEntry>& first55,
                                           const std::vector<SideMove>& moves) {
  std::vector<OrderingEntry> out;
  if (n_max <= 0) return out;
  out.reserve(static_cast<std::size_t>(n_max));
  PointSet set;
  for (const auto& e : first55) {
    if (static_cast<std::int64_t>(out.size()) == n_max) return out;
    out.push_back(e);
    set.insert(e.point);
  }
  if (static_cast<std::int64_t>(out.size()) == n_max) return out;

  std::vector<TriPoint> pts(set.begin(), set.end());
  HullSet current = hull(pts);
  if (current.size() != set.size() || params_from_hull(current) != GonNode::initial().at(3)) {
    throw DomainError("ordering_stream: first-55 asset does not end at the extremal 12-gon");
  }
  std::array<std::int64_t, 12> supports = current.supports();
  const auto& gens = tri_generators();
  std::int64_t cumulative = out.back().cumulative_edges;

  for (std::int64_t k = 3;; ++k) {
    GonNode node = GonNode::initial();
    for (SideMove move : moves) {
      const GonNode next = apply_side_fill(node, move);
      const std::size_t j = side_index(move);
      std::array<std::int64_t, 12> grown = supports;
      grown[j] -= 1;
      HullSet bigger = HullSet::from_supports(grown);
      if (params_from_hull(bigger) != next.at(k)) {
        throw VerificationFailure("ordering_stream: side fill " + to_string(move) + " at k=" + std::to_string(k) +
                                  " does not give " + next.to_string());
      }
      std::vector<TriPoint> row;
      for (const auto& p : bigger.points()) {
        if (side_functional(gens[j], p) == grown[j]) row.push_back(p);
      }
      if (static_cast<std::int64_t>(row.size()) != vertex_count(next.at(k)) - vertex_count(node.at(k))) {
        throw VerificationFailure("ordering_stream: row size disagrees with the vertex-count formula");
      }
      // Sorted points on a line run from one end to the other; start at the least.
      for (const auto& p : row) {
        const std::int64_t gain = gain_of(set, p);
        cumulative += gain;
        set.insert(p);
        out.push_back({static_cast<std::int64_t>(out.size()) + 1, p, gain, cumulative});
        if (static_cast<std::int64_t>(out.size()) == n_max) return out;
      }
      supports = grown;
      node = next;
    }
    if (node != GonNode::terminal()) throw VerificationFailure("ordering_stream: moves do not reach the terminal");
  }
}

NestedReport check_nested(const std::vector<OrderingEntry>& ordering, std::int64_t n_max) {
  NestedReport report;
  report.n_max = n_max;
  VertexSet prefix(2);
  std::int64_t previous = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n > static_cast<std::int64_t>(ordering.size())) {
      report.first_bad_index = n;
      return report;
    }
    const auto& e = ordering[static_cast<std::size_t>(n - 1)];
    if (e.index != n || !prefix.insert(e.point.to_lattice())) {
      report.first_bad_index = n;
      return report;
    }
    const std::int64_t edges = induced_edge_count(prefix, lambda_u());
    const std::int64_t step = edges - previous;
    const bool optimal = edges == optimal_edges(n) && edges == e.cumulative_edges;
    const bool increment_ok = n <= 56 || step == 5 || step == 6;
    if (!optimal || !increment_ok) {
      report.first_bad_index = n;
      return report;
    }
    previous = edges;
    report.checked = n;
  }
  return report;
}

NestedReport verify_nested(std::int64_t n_max) {
  NestedReport report = check_nested(ordering_stream(n_max), n_max);
  if (!report.passed()) {
    throw VerificationFailure("nested ordering fails at index " + std::to_string(*report.first_bad_index));
  }
  return report;
}

}  // namespace isop
