#include "isoperim/counterexample.hpp"

#include <algorithm>
#include <set>

#include "isoperim/errors.hpp"
#include "isoperim/exact.hpp"

namespace isop {

CayleyGraphSpec g_d(std::size_t d) {
  if (d < 1) throw UsageError("g_d: dimension must be positive");
  std::vector<LatticePoint> gens;
  for (std::size_t i = 0; i < d; ++i) {
    gens.push_back(LatticePoint::unit(d, i));
    gens.push_back(-LatticePoint::unit(d, i));
  }
  gens.push_back(2 * LatticePoint::unit(d, 0));
  gens.push_back(-2 * LatticePoint::unit(d, 0));
  return CayleyGraphSpec(d, std::move(gens));
}

VertexSet cube_set(std::size_t d, std::int64_t k) {
  if (k < 1) throw DomainError("cube_set: side must be positive");
  VertexSet s(d);
  std::vector<std::int64_t> c(d, 1);
  for (;;) {
    s.insert(LatticePoint(c));
    std::size_t i = 0;
    while (i < d && c[i] == k) c[i++] = 1;
    if (i == d) break;
    ++c[i];
  }
  return s;
}

namespace {

std::int64_t ipow(std::int64_t base, std::size_t exp) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

std::int64_t cube_boundary_reference_formula(std::size_t d, std::int64_t k) {
  return 2 * static_cast<std::int64_t>(d + 1) * ipow(k, d - 1);
}

std::int64_t cube_boundary_closed_form(std::size_t d, std::int64_t k) {
  return (2 * static_cast<std::int64_t>(d) + 4) * ipow(k, d - 1);
}

ProjectionProfile projection_profile(const VertexSet& s) {
  const std::size_t d = s.dimension();
  ProjectionProfile profile;
  for (std::size_t i = 0; i < d; ++i) {
    std::set<std::vector<std::int64_t>> image;
    for (const auto& p : s) {
      std::vector<std::int64_t> q;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) q.push_back(p[j]);
      }
      image.insert(std::move(q));
    }
    profile.sizes.push_back(static_cast<std::int64_t>(image.size()));
  }
  return profile;
}

bool loomis_whitney_holds(const ProjectionProfile& profile, std::int64_t set_size) {
  std::int64_t lhs = 1, rhs = 1;
  for (auto x : profile.sizes) lhs = checked_mul(lhs, x);
  for (std::size_t i = 1; i < profile.sizes.size(); ++i) rhs = checked_mul(rhs, set_size);
  return lhs >= rhs;
}

std::int64_t projection_lower_bound(const VertexSet& s) {
  if (s.dimension() < 2) throw UsageError("projection_lower_bound: dimension must be at least 2");
  ProjectionProfile p = projection_profile(s);
  std::int64_t bound = 4 * p.sizes[0];
  for (std::size_t i = 1; i < p.sizes.size(); ++i) bound += 2 * p.sizes[i];
  return bound;
}

VertexSet random_connected_set(std::mt19937_64& rng, const CayleyGraphSpec& g, std::int64_t n) {
  if (n < 1) throw DomainError("random_connected_set: n must be positive");
  VertexSet s(g.dimension());
  std::vector<LatticePoint> members{LatticePoint::zero(g.dimension())};
  s.insert(members.front());
  while (static_cast<std::int64_t>(members.size()) < n) {
    std::vector<LatticePoint> frontier;
    for (const auto& p : members) {
      for (const auto& q : neighbors(p, g)) {
        if (!s.contains(q)) frontier.push_back(q);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const LatticePoint q = frontier[pick(rng)];
    s.insert(q);
    members.push_back(q);
  }
  return s;
}

bool contained_up_to_translation(const CanonicalSet& small, const CanonicalSet& big) {
  if (small.empty()) return true;
  if (small.size() > big.size()) return false;
  std::set<LatticePoint> target(big.begin(), big.end());
  for (const auto& anchor : big) {
    const LatticePoint shift = anchor - small.front();
    bool inside = std::all_of(small.begin(), small.end(), [&](const LatticePoint& p) { return target.count(p + shift) != 0; });
    if (inside) return true;
  }
  return false;
}

NestingReport nesting_dag(std::int64_t n_max, const OracleOptions& options) {
  if (n_max < 1) throw DomainError("nesting_dag: n_max must be positive");
  const CayleyGraphSpec g = g_d(2);
  NestingReport report;
  report.n_max = n_max;
  std::vector<std::int64_t> smaller{0};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    try {
      OracleResult r = max_induced_edges(g, n, options, smaller);
      smaller.push_back(r.best_edges);
      NestingLevel level;
      level.n = n;
      level.best_edges = r.best_edges;
      level.best_boundary = r.best_boundary;
      level.classes = std::move(r.witnesses);
      report.levels.push_back(std::move(level));
    } catch (const BudgetExceeded&) {
      report.partial = true;
      break;
    }
  }
  for (std::size_t l = 0; l < report.levels.size(); ++l) {
    auto& level = report.levels[l];
    level.children.assign(level.classes.size(), {});
    level.extends.assign(level.classes.size(), false);
    if (l + 1 == report.levels.size()) continue;
    const auto& next = report.levels[l + 1];
    for (std::size_t a = 0; a < level.classes.size(); ++a) {
      for (std::size_t b = 0; b < next.classes.size(); ++b) {
        if (contained_up_to_translation(level.classes[a], next.classes[b])) level.children[a].push_back(b);
      }
      level.extends[a] = !level.children[a].empty();
    }
  }
  for (std::size_t l = report.levels.size(); l-- > 0;) {
    auto& level = report.levels[l];
    level.longest_chain_from.assign(level.classes.size(), 1);
    if (l + 1 == report.levels.size()) continue;
    const auto& next = report.levels[l + 1];
    for (std::size_t a = 0; a < level.classes.size(); ++a) {
      for (auto b : level.children[a]) {
        level.longest_chain_from[a] = std::max(level.longest_chain_from[a], 1 + next.longest_chain_from[b]);
      }
    }
  }
  if (!report.levels.empty()) {
    // Greedy walk along the DP maxima, lowest index on ties.
    const auto& first = report.levels.front().longest_chain_from;
    std::size_t cur = static_cast<std::size_t>(std::max_element(first.begin(), first.end()) - first.begin());
    for (std::size_t l = 0;; ++l) {
      report.longest_chain.push_back(cur);
      const auto& level = report.levels[l];
      if (level.longest_chain_from[cur] == 1) break;
      const auto& next = report.levels[l + 1];
      std::size_t best = level.children[cur].front();
      for (auto b : level.children[cur]) {
        if (next.longest_chain_from[b] > next.longest_chain_from[best]) best = b;
      }
      cur = best;
    }
  }
  return report;
}

}  // namespace isop
