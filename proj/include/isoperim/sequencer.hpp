#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isoperim/polygon.hpp"
#include "isoperim/verifier.hpp"

namespace isop {

// A 12-gon family with u_i = k + cu[i] and t_i = k + ct[i].
struct GonNode {
  std::array<std::int64_t, 6> cu{};
  std::array<std::int64_t, 6> ct{};

  static GonNode initial();   // cu = -1, ct = -2: the k-1 extremal 12-gon seen from level k
  static GonNode terminal();  // cu = 0, ct = -1: the extremal 12-gon at k

  TwelveGonParams at(std::int64_t k) const;
  std::int64_t min_side_offset() const;
  bool closes() const;

  friend auto operator<=>(const GonNode&, const GonNode&) = default;
  std::string to_string() const;
};

struct GonNodeHash {
  std::size_t operator()(const GonNode& g) const noexcept;
};

// Labels in tie-break order: u1..u6 are 0..5, t1..t6 are 6..11.
enum class SideMove : std::uint8_t { u1, u2, u3, u4, u5, u6, t1, t2, t3, t4, t5, t6 };

std::string to_string(SideMove m);
SideMove side_move_from_string(const std::string& label);  // UsageError on unknown labels
// Index of the moved side in walk order u1, t1, u2, ...
std::size_t side_index(SideMove m);

// t_i: t_i - 1, u_i + 1, u_{i+1} + 1.  u_i: u_i - 3, t_{i-1} + 1, t_i + 1.
// DomainError if a side would be negative at k = 3.
GonNode apply_side_fill(const GonNode& node, SideMove move);

struct NodeFormula {
  LQ lq;
  EdgeFormula edges;  // c = L - (6 sum cu + 10 sum ct + 12) / 2
};

NodeFormula node_formula(const GonNode& node);

struct AuxGraph {
  std::vector<GonNode> nodes;  // BFS discovery order; nodes[0] is the initial node
  struct Edge {
    std::size_t from;
    std::size_t to;
    SideMove move;
  };
  std::vector<Edge> edges;
  std::vector<GonNode> nonzero_constant;  // rejected nodes whose additive constant was not 0
  std::unordered_map<GonNode, std::size_t, GonNodeHash> index;
  std::size_t index_of(const GonNode& g) const;  // nodes.size() when absent
};

// Breadth-first expansion from the initial node. A child is admitted when its sides are
// nonnegative at k = 3, every cu >= -2, its radicand offset a < 33, its additive constant is 0,
// and its linear coefficient L is below the terminal's (the terminal itself excepted). The
// terminal is not expanded.
AuxGraph build_aux_graph();

// Shortest initial-to-terminal path; ties go to the lower move label. VerificationFailure if none.
std::vector<SideMove> find_side_sequence(const AuxGraph& graph);
std::vector<SideMove> find_side_sequence();

// A 48-move growth sequence known from the literature, checked against the graph separately.
const std::vector<SideMove>& reference_side_sequence();

// Applies the moves from the initial node, checking each node is admitted; returns the
// radicand offset a after every move. VerificationFailure on an inadmissible step.
std::vector<std::int64_t> validate_side_sequence(const std::vector<SideMove>& moves, const AuxGraph& graph);

struct OrderingEntry {
  std::int64_t index = 0;
  TriPoint point;
  std::int64_t edges_added = 0;
  std::int64_t cumulative_edges = 0;
};

// ISOP_ASSET_DIR if set, else the compiled-in data directory.
std::filesystem::path asset_dir();
std::filesystem::path first55_path();

// Reads JSON lines {index, a, b, edges_added}; DomainError on a missing or malformed asset.
std::vector<OrderingEntry> load_first55(const std::filesystem::path& path);
std::vector<OrderingEntry> load_first55();
void write_first55(const std::vector<OrderingEntry>& entries, const std::filesystem::path& path);

// Backtracking search for an ordering whose every prefix is optimal, up to 55 points.
std::vector<OrderingEntry> generate_first55();

// First n_max entries of the nested ordering: the first-55 asset, then side fills following
// `moves` (default: the BFS sequence) for k = 3, 4, ...
std::vector<OrderingEntry> ordering_stream(std::int64_t n_max);
std::vector<OrderingEntry> ordering_stream(std::int64_t n_max, const std::vector<OrderingEntry>& first55,
                                           const std::vector<SideMove>& moves);

struct NestedReport {
  std::int64_t n_max = 0;
  std::int64_t checked = 0;
  std::optional<std::int64_t> first_bad_index;
  bool passed() const { return !first_bad_index.has_value(); }
};

// Recounts induced edges of every prefix and compares with the optimum; for n > 56 also requires
// each step to add 5 or 6 edges.
NestedReport check_nested(const std::vector<OrderingEntry>& ordering, std::int64_t n_max);
NestedReport verify_nested(std::int64_t n_max);

}  // namespace isop
