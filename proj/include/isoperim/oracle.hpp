#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "isoperim/lattice.hpp"

namespace isop {

// Sorted points of a connected set, translated so the lexicographically least point is 0.
using CanonicalSet = std::vector<LatticePoint>;

CanonicalSet canonicalize(std::span<const LatticePoint> points);
bool is_connected(std::span<const LatticePoint> points, const CayleyGraphSpec& g);

struct OracleOptions {
  // Search nodes (partial or complete sets) visited before BudgetExceeded is raised.
  std::int64_t max_sets = 4'000'000'000;
  std::optional<double> wall_clock_seconds;
  unsigned threads = 1;
  bool prune = true;
};

struct OracleResult {
  std::int64_t n = 0;
  std::int64_t best_edges = 0;
  std::int64_t best_boundary = 0;
  std::vector<CanonicalSet> witnesses;  // every optimal class, sorted
  std::int64_t sets_explored = 0;
};

// Calls visit once per translation class of connected n-sets, in a fixed order.
// Returns the number of search nodes visited.
std::int64_t enumerate_connected_sets(const CayleyGraphSpec& g, std::int64_t n,
                                      const std::function<void(const CanonicalSet&)>& visit,
                                      const OracleOptions& options = {});

// Exact maximum of induced edges over connected n-sets, with all optimal classes.
// smaller_optima[r] must hold the optimum for r points, r < n; when empty they are computed first.
// With pruning, a branch is cut when
//   edges(P) + best(r) + (sum of the r largest |N(v) & P| over cells still addable) < threshold,
// where r = n - |P| and threshold is max(greedy seed, best complete set seen in the same task).
// The bound is admissible: new cells contribute their edges into P plus at most best(r) among themselves.
OracleResult max_induced_edges(const CayleyGraphSpec& g, std::int64_t n, const OracleOptions& options = {},
                               std::span<const std::int64_t> smaller_optima = {});

// Results for n = 1..n_max, each seeding the bounds of the next.
std::vector<OracleResult> solve_up_to(const CayleyGraphSpec& g, std::int64_t n_max, const OracleOptions& options = {});

// Edges of a greedily grown set: repeatedly add the neighbor gaining the most edges, least point on ties.
std::int64_t greedy_lower_bound(const CayleyGraphSpec& g, std::int64_t n);

// Maximum induced edges over all n-sets (connected or not) lying within side of their lex-least
// point in every coordinate. Brute force, for small n.
std::int64_t unrestricted_max_edges(const CayleyGraphSpec& g, std::int64_t n, std::int64_t side);

}  // namespace isop
