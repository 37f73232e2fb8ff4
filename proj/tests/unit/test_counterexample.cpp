#include <random>

#include "doctest.h"
#include "isoperim/counterexample.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/oracle.hpp"

using namespace isop;

TEST_CASE("second graph generators") {
  auto g = g_d(3);
  CHECK(g.dimension() == 3);
  CHECK(g.degree() == 8);
  CHECK(g.is_generator(LatticePoint{2, 0, 0}));
  CHECK_FALSE(g.is_generator(LatticePoint{0, 2, 0}));
}

TEST_CASE("cube boundaries by enumeration and closed form") {
  auto g2 = g_d(2);
  CHECK(edge_boundary(cube_set(2, 1), g2) == 6);
  const std::vector<std::int64_t> direct{16, 24, 32};
  const std::vector<std::int64_t> printed{12, 18, 24};
  for (std::int64_t k = 2; k <= 4; ++k) {
    CHECK(cube_set(2, k).size() == static_cast<std::size_t>(k * k));
    CHECK(edge_boundary(cube_set(2, k), g2) == direct[k - 2]);
    CHECK(cube_boundary_closed_form(2, k) == direct[k - 2]);
    CHECK(cube_boundary_reference_formula(2, k) == printed[k - 2]);
  }
  auto g3 = g_d(3);
  for (std::int64_t k = 2; k <= 4; ++k) CHECK(edge_boundary(cube_set(3, k), g3) == cube_boundary_closed_form(3, k));
}

TEST_CASE("projection bound and Loomis-Whitney on random connected sets") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto n = 1 + static_cast<std::int64_t>(rng() % 12);
    auto g = g_d(d);
    auto s = random_connected_set(rng, g, n);
    CHECK(static_cast<std::int64_t>(s.size()) == n);
    CHECK(is_connected(s.sorted_points(), g));
    CHECK(projection_lower_bound(s) <= edge_boundary(s, g));
    CHECK(loomis_whitney_holds(projection_profile(s), n));
  }
  VertexSet single(2, std::vector<LatticePoint>{{0, 0}});
  CHECK(projection_lower_bound(single) == 6);
  CHECK(projection_lower_bound(cube_set(2, 2)) == 12);
}

TEST_CASE("Loomis-Whitney rejects impossible profiles") {
  ProjectionProfile p{{2, 2}};
  CHECK(loomis_whitney_holds(p, 4));
  CHECK_FALSE(loomis_whitney_holds(p, 5));
}

TEST_CASE("containment up to translation") {
  CanonicalSet pair{{0, 0}, {1, 0}};
  CanonicalSet line{{0, 0}, {1, 0}, {2, 0}};
  CanonicalSet bent{{0, 0}, {0, 1}, {1, 1}};
  CHECK(contained_up_to_translation(pair, line));
  CHECK(contained_up_to_translation(pair, bent));
  CHECK_FALSE(contained_up_to_translation(CanonicalSet{{0, 0}, {2, 0}}, bent));
}

TEST_CASE("optimal sets are never worse than squares") {
  auto results = solve_up_to(g_d(2), 9);
  for (std::int64_t k = 1; k <= 3; ++k) {
    CHECK(results[k * k - 1].best_boundary <= edge_boundary(cube_set(2, k), g_d(2)));
  }
}

TEST_CASE("nesting structure up to ten") {
  auto report = nesting_dag(10);
  CHECK_FALSE(report.partial);
  REQUIRE(report.levels.size() == 10);
  CHECK(report.levels[0].best_boundary == 6);
  CHECK(report.levels[1].best_boundary == 10);
  CHECK(report.levels[1].classes.size() == 3);
  CHECK(report.longest_chain == std::vector<std::size_t>{0, 1, 0, 0, 0, 1, 4});
  for (std::size_t i = 0; i + 1 < report.longest_chain.size(); ++i) {
    const auto& from = report.levels[i].classes[report.longest_chain[i]];
    const auto& to = report.levels[i + 1].classes[report.longest_chain[i + 1]];
    CHECK(contained_up_to_translation(from, to));
  }
  // No optimal chain runs from 1 to 10: the single 5-set only grows into the 6-set that dies out at 7.
  CHECK(report.levels[0].longest_chain_from == std::vector<std::int64_t>{7});
  CHECK(report.levels[4].children[0] == std::vector<std::size_t>{1});
  CHECK(report.levels[5].longest_chain_from == std::vector<std::int64_t>{5, 2});
  CHECK(report.levels[6].extends == std::vector<bool>{true, true, true, true, false});
  CHECK(report.levels[9].extends == std::vector<bool>{false});
}

TEST_CASE("nesting report flags an exhausted budget") {
  OracleOptions tiny;
  tiny.max_sets = 50;
  auto report = nesting_dag(10, tiny);
  CHECK(report.partial);
  CHECK(report.levels.size() < 10);
}
