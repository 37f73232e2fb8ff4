#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "isoperim/lattice.hpp"
#include "isoperim/oracle.hpp"

namespace isop {

// Z^d with generators {+-e_i} and {+-2e_1}.
CayleyGraphSpec g_d(std::size_t d);

// {1..k}^d.
VertexSet cube_set(std::size_t d, std::int64_t k);

// The closed form 2(d+1)k^(d-1) in circulation; it undercounts the +-2e_1 edges leaving each row.
std::int64_t cube_boundary_reference_formula(std::size_t d, std::int64_t k);
// What direct counting gives for d >= 2 and k >= 2: (2d + 4) k^(d-1).
std::int64_t cube_boundary_closed_form(std::size_t d, std::int64_t k);

struct ProjectionProfile {
  std::vector<std::int64_t> sizes;  // |P_i|: image of S with coordinate i deleted
};

ProjectionProfile projection_profile(const VertexSet& s);
// prod |P_i| >= |S|^(d-1), compared exactly.
bool loomis_whitney_holds(const ProjectionProfile& profile, std::int64_t set_size);
// 4|P_1| + sum_{i>=2} 2|P_i|; never exceeds the boundary of S in g_d.
std::int64_t projection_lower_bound(const VertexSet& s);

// Grows a connected n-set from the origin, adding a uniformly chosen outside neighbor each step.
VertexSet random_connected_set(std::mt19937_64& rng, const CayleyGraphSpec& g, std::int64_t n);

// Some translate of `small` lies inside `big`.
bool contained_up_to_translation(const CanonicalSet& small, const CanonicalSet& big);

struct NestingLevel {
  std::int64_t n = 0;
  std::int64_t best_edges = 0;
  std::int64_t best_boundary = 0;
  std::vector<CanonicalSet> classes;
  std::vector<bool> extends;                       // per class: contained in an optimal class at n+1
  std::vector<std::vector<std::size_t>> children;  // per class: indices into the next level
  std::vector<std::int64_t> longest_chain_from;    // per class: optimal chain length starting here
};

struct NestingReport {
  std::int64_t n_max = 0;
  bool partial = false;  // the oracle budget ran out before n_max
  std::vector<NestingLevel> levels;
  // Longest chain of optimal classes, one per size, starting at n = 1.
  std::vector<std::size_t> longest_chain;
};

NestingReport nesting_dag(std::int64_t n_max, const OracleOptions& options = {});

}  // namespace isop
