#include <algorithm>
#include <set>

#include "doctest.h"
#include "isoperim/counterexample.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/oracle.hpp"
#include "isoperim/trilattice.hpp"
#include "naive.hpp"

using namespace isop;

namespace {

CanonicalSet hexagon_class() {
  std::vector<LatticePoint> pts{{0, 0}};
  for (const auto& g : tri_generators()) {
    if (edge_class(g) == EdgeClass::kShort) pts.push_back(g.to_lattice());
  }
  return canonicalize(pts);
}

}  // namespace

TEST_CASE("canonical form and connectivity") {
  std::vector<LatticePoint> s{{3, 3}, {2, 4}};
  CHECK(canonicalize(s) == CanonicalSet{{0, 0}, {1, -1}});
  CHECK(is_connected(s, lambda_u()));
  std::vector<LatticePoint> apart{{0, 0}, {3, 0}};
  CHECK_FALSE(is_connected(apart, lambda_u()));
  CHECK_FALSE(is_connected(apart, g_d(2)));
  std::vector<LatticePoint> jump{{0, 0}, {2, 0}};
  CHECK(is_connected(jump, g_d(2)));
}

TEST_CASE("enumeration yields each connected class exactly once") {
  for (const auto& graph : {lambda_u(), g_d(2)}) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      std::set<CanonicalSet> seen;
      std::int64_t visits = 0;
      enumerate_connected_sets(graph, n, [&](const CanonicalSet& s) {
        ++visits;
        seen.insert(canonicalize(s));
      });
      CHECK(visits == static_cast<std::int64_t>(seen.size()));
      CHECK(seen == naive::connected_classes(graph, n));
    }
  }
}

TEST_CASE("class counts") {
  auto count = [](const CayleyGraphSpec& g, std::int64_t n) {
    std::int64_t classes = 0;
    enumerate_connected_sets(g, n, [&](const CanonicalSet&) { ++classes; });
    return classes;
  };
  CHECK(count(lambda_u(), 1) == 1);
  CHECK(count(lambda_u(), 2) == 6);
  CHECK(count(lambda_u(), 3) == 46);
  CHECK(count(lambda_u(), 4) == 385);
  CHECK(count(lambda_u(), 5) == 3405);
  CHECK(count(g_d(2), 2) == 3);
}

TEST_CASE("optima on the triangular graph match the closed form") {
  auto results = solve_up_to(lambda_u(), 10);
  for (const auto& r : results) {
    CAPTURE(r.n);
    CHECK(r.best_edges == optimal_edges(r.n));
    CHECK(r.best_boundary == 12 * r.n - 2 * r.best_edges);
    for (const auto& w : r.witnesses) {
      CHECK(static_cast<std::int64_t>(w.size()) == r.n);
      CHECK(naive::edges(w, lambda_u()) == r.best_edges);
      CHECK(w == canonicalize(w));
    }
  }
  CHECK(results[6].witnesses.size() == 1);
  CHECK(results[6].witnesses[0] == hexagon_class());
  const std::vector<std::size_t> counts{1, 6, 10, 5, 12, 6, 1, 12, 18, 3};
  for (std::size_t i = 0; i < counts.size(); ++i) CHECK(results[i].witnesses.size() == counts[i]);
}

TEST_CASE("pruning changes work, never answers") {
  OracleOptions plain;
  plain.prune = false;
  for (std::int64_t n = 1; n <= 6; ++n) {
    auto a = max_induced_edges(lambda_u(), n);
    auto b = max_induced_edges(lambda_u(), n, plain);
    CHECK(a.best_edges == b.best_edges);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.sets_explored <= b.sets_explored);
  }
}

TEST_CASE("connected optimum equals unrestricted optimum for small n") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(unrestricted_max_edges(lambda_u(), n, std::max<std::int64_t>(n - 1, 1)) == optimal_edges(n));
    CHECK(unrestricted_max_edges(g_d(2), n, std::max<std::int64_t>(n - 1, 1)) == max_induced_edges(g_d(2), n).best_edges);
  }
}

TEST_CASE("greedy seed never beats the optimum") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    CHECK(greedy_lower_bound(lambda_u(), n) <= optimal_edges(n));
  }
}

TEST_CASE("budget overrun raises with progress information") {
  OracleOptions tiny;
  tiny.max_sets = 10;
  try {
    max_induced_edges(lambda_u(), 9, tiny);
    FAIL("expected budget overrun");
  } catch (const BudgetExceeded& e) {
    CHECK(e.sets_explored() >= 10);
  }
  CHECK_THROWS_AS(max_induced_edges(lambda_u(), 0), DomainError);
}

TEST_CASE("thread count does not change results") {
  OracleOptions many;
  many.threads = 4;
  for (std::int64_t n : {5, 8, 9}) {
    auto a = max_induced_edges(lambda_u(), n);
    auto b = max_induced_edges(lambda_u(), n, many);
    CHECK(a.best_edges == b.best_edges);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.sets_explored == b.sets_explored);
  }
}

TEST_CASE("second graph optima") {
  const std::vector<std::int64_t> edges{0, 1, 3, 5, 7, 9, 11, 14, 16, 19};
  const std::vector<std::size_t> classes{1, 3, 1, 1, 1, 2, 5, 1, 4, 1};
  auto results = solve_up_to(g_d(2), 10);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].best_edges == edges[i]);
    CHECK(results[i].best_boundary == 6 * results[i].n - 2 * edges[i]);
    CHECK(results[i].witnesses.size() == classes[i]);
  }
}
