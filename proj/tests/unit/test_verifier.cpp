#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "isoperim/errors.hpp"
#include "isoperim/polygon.hpp"
#include "isoperim/verifier.hpp"

using namespace isop;

namespace {

OffsetCase uniform_case(std::int64_t mu, std::int64_t tau) {
  OffsetCase c;
  c.mu.fill(mu);
  c.tau.fill(tau);
  return c;
}

// Growth-table rows store side minus k; offsets are mu = -(u - k) and tau = (t - k) + 3.
OffsetCase from_row(std::array<std::int64_t, 6> cu, std::array<std::int64_t, 6> ct) {
  OffsetCase c;
  for (std::size_t i = 0; i < 6; ++i) {
    c.mu[i] = -cu[i];
    c.tau[i] = ct[i] + 3;
  }
  return c;
}

}  // namespace

TEST_CASE("base-case bounds") {
  auto row8 = base_case_row(8);
  CHECK(row8.boundary_bound == 54);
  CHECK(row8.b_bound == 7);
  CHECK(base_case_row(20).boundary_bound == 88);
}

TEST_CASE("base cases admit no violating side tuples") {
  auto report = verify_base_cases();
  CHECK(report.passed());
  const std::vector<std::int64_t> tuples{30, 34, 84, 136, 235, 726};
  REQUIRE(report.rows.size() == base_case_sizes().size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].n == base_case_sizes()[i]);
    CHECK(report.rows[i].violations.empty());
    CHECK(report.rows[i].tuples == tuples[i]);
  }
}

TEST_CASE("symbolic vertex count of offset families") {
  auto lq = derive_LQ(uniform_case(0, 2));
  CHECK(lq.L == -24);
  CHECK(lq.Q == 7);
  CHECK(lq.n_of_k == KPolynomial{7, -24, 24});
  for (std::int64_t k = 3; k <= 8; ++k) {
    CHECK(derive_LQ(uniform_case(0, 1)).n_of_k.evaluate(k) == vertex_count(uniform_case(0, 1).at(k)));
  }
  for (std::int64_t k = 4; k <= 8; ++k) {
    CHECK(derive_LQ(uniform_case(0, 0)).n_of_k.evaluate(k) == vertex_count(uniform_case(0, 0).at(k)));
  }
}

TEST_CASE("symbolic count agrees with the polygon formula on enumerated cases") {
  auto cases = enumerate_offset_cases();
  for (std::size_t i = 0; i < cases.size(); i += 331) {
    const auto& c = cases[i];
    const auto lq = derive_LQ(c);
    const auto f = case_edge_formula(c);
    const std::int64_t k0 = std::max<std::int64_t>(3, *std::max_element(c.mu.begin(), c.mu.end()));
    for (std::int64_t k = k0; k < k0 + 3; ++k) {
      CHECK(lq.n_of_k.evaluate(k) == vertex_count(c.at(k)));
      const auto root = 48 * k + lq.L;
      CHECK(root * root == 96 * lq.n_of_k.evaluate(k) + f.a);
      CHECK(case_edges_at(c, k) == 6 * lq.n_of_k.evaluate(k) - root + f.c);
    }
  }
}

TEST_CASE("edge formulas of named families") {
  CHECK(case_edge_formula(uniform_case(0, 2)) == EdgeFormula{-96, 0});
  OffsetCase row2{{0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1}};
  CHECK(row2.closes());
  CHECK(case_edge_formula(row2) == EdgeFormula{-47, 0});
  auto plus25 = from_row({1, 0, 0, 0, -1, 0}, {-3, -2, -2, -2, -2, -2});
  CHECK(plus25.closes());
  CHECK(case_edge_formula(plus25) == EdgeFormula{25, 0});
}

TEST_CASE("case verdicts") {
  CHECK(check_case(uniform_case(0, 2)).kind == VerdictKind::kExceptionalExtremal);
  OffsetCase row2{{0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1}};
  CHECK(check_case(row2).kind == VerdictKind::kPass);
  CHECK(to_string(VerdictKind::kFail) == "fail");
}

TEST_CASE("negative controls for the decision procedure") {
  OffsetCase row2{{0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1}};
  auto lq = derive_LQ(row2);
  // A positive constant pushes the edge count over the bound once the radical gap closes.
  auto injected = decide_edge_bound(lq, EdgeFormula{-47, 1});
  CHECK(injected.kind == VerdictKind::kFail);
  REQUIRE(injected.witness_k.has_value());
  CHECK_FALSE(edge_bound_holds_at(lq, EdgeFormula{-47, 1}, *injected.witness_k));
  if (*injected.witness_k > 3) CHECK(edge_bound_holds_at(lq, EdgeFormula{-47, 1}, *injected.witness_k - 1));

  // The extremal family beats the bound, so without its special case it must fail at once.
  auto extremal = derive_LQ(uniform_case(0, 2));
  auto raw = decide_edge_bound(extremal, EdgeFormula{-96, 0});
  CHECK(raw.kind == VerdictKind::kFail);
  CHECK(raw.witness_k == 3);
}

TEST_CASE("exact per-k inequality matches floating evaluation away from ties") {
  auto lq = derive_LQ(uniform_case(0, 1));
  auto f = case_edge_formula(uniform_case(0, 1));
  for (std::int64_t k = 3; k <= 40; ++k) {
    const double n = static_cast<double>(lq.n_of_k.evaluate(k));
    const double edges = 6 * n - (48.0 * k + lq.L) + f.c;
    CHECK(edge_bound_holds_at(lq, f, k) == (edges <= 6 * n - std::sqrt(96 * n - 63) + 1e-9));
  }
}

TEST_CASE("inductive enumeration") {
  auto report = verify_inductive_cases(2);
  CHECK(report.ok());
  CHECK(report.total == kPinnedInductiveCaseCount);
  CHECK(report.passed == kPinnedInductiveCaseCount - 1);
  REQUIRE(report.exceptional.size() == 1);
  CHECK(report.exceptional[0] == uniform_case(0, 2));
  CHECK(report.failures.empty());
  auto cases = enumerate_offset_cases();
  CHECK(std::is_sorted(cases.begin(), cases.end()));
  CHECK(std::adjacent_find(cases.begin(), cases.end()) == cases.end());
  for (const auto& c : cases) {
    CHECK(c.mu[0] == 0);
    CHECK(c.d_u() + c.d_t() < 18);
  }
}

TEST_CASE("every offset case survives an end-to-end recount at its smallest valid k") {
  auto cases = enumerate_offset_cases();
  std::int64_t mismatches = 0;
  for (const auto& c : cases) {
    const std::int64_t k = std::max<std::int64_t>(3, *std::max_element(c.mu.begin(), c.mu.end()) + 1);
    if (!end_to_end_matches(c, k)) {
      ++mismatches;
      MESSAGE("recount mismatch for " << c.to_string() << " at k=" << k);
    }
  }
  CHECK(mismatches == 0);
  CHECK(end_to_end_matches(uniform_case(0, 2), 3));
  CHECK_THROWS_AS(end_to_end_matches(uniform_case(3, 0), 3), PreconditionError);
}
