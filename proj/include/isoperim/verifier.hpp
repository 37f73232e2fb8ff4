#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoperim/kpoly.hpp"
#include "isoperim/polygon.hpp"

namespace isop {

// ---- Base cases: every small 12-gon meeting the angle condition has a large enough boundary.

struct BaseCaseRow {
  std::int64_t n = 0;
  std::int64_t boundary_bound = 0;  // 2 * ceil(sqrt(96n - 63))
  std::int64_t b_bound = 0;         // ceil((boundary_bound - 12) / 6)
  std::int64_t tuples = 0;          // side tuples with b < b_bound, closed, n vertices, angle condition
  std::vector<TwelveGonParams> violations;
};

struct BaseCaseReport {
  std::vector<BaseCaseRow> rows;
  bool passed() const;
};

const std::vector<std::int64_t>& base_case_sizes();  // 8, 9, 11, 13, 15, 20
BaseCaseRow base_case_row(std::int64_t n);
BaseCaseReport compute_base_cases();
// Throws VerificationFailure naming the first violating tuple.
BaseCaseReport verify_base_cases();

// ---- Inductive step: 12-gons with u_i = k - mu_i and t_i = k - 3 + tau_i.

struct OffsetCase {
  std::array<std::int64_t, 6> mu{};
  std::array<std::int64_t, 6> tau{};

  std::int64_t d_u() const;
  std::int64_t d_t() const;
  // Sides at a concrete k.
  TwelveGonParams at(std::int64_t k) const;
  bool closes() const;

  friend auto operator<=>(const OffsetCase&, const OffsetCase&) = default;
  std::string to_string() const;
};

struct LQ {
  std::int64_t L = 0;
  std::int64_t Q = 0;
  KPolynomial n_of_k;  // 24k^2 + Lk + Q
};

// Vertex count as a polynomial in k, expanded symbolically; VerificationFailure unless the
// leading term is 24k^2.
LQ derive_LQ(const OffsetCase& c);

// e = 6n - sqrt(96n + a) + c on the case's family.
struct EdgeFormula {
  std::int64_t a = 0;
  std::int64_t c = 0;
  friend bool operator==(const EdgeFormula&, const EdgeFormula&) = default;
};

EdgeFormula case_edge_formula(const OffsetCase& c);
EdgeFormula case_edge_formula(const LQ& lq, std::int64_t d_u, std::int64_t d_t);

// Edge count of the case's 12-gon at k, from the boundary formula.
std::int64_t case_edges_at(const OffsetCase& c, std::int64_t k);

// Exact test of 6n - sqrt(96n + a) + c <= 6n - sqrt(96n - 63) at n = n*(k), using sqrt(96n + a) = 48k + L.
bool edge_bound_holds_at(const LQ& lq, const EdgeFormula& f, std::int64_t k);

enum class VerdictKind { kPass, kExceptionalExtremal, kFail };

struct CaseVerdict {
  VerdictKind kind = VerdictKind::kPass;
  std::optional<std::int64_t> witness_k;  // smallest violating k for kFail
};

std::string to_string(VerdictKind kind);

// Decides the bound for all k >= k_min with n*(k) >= 31, then rechecks k up to 50 exactly and
// throws VerificationFailure if the two disagree.
CaseVerdict check_case(const OffsetCase& c, std::int64_t k_min = 3);
// The decision procedure alone, for an arbitrary (n*, a, c) triple; check_case adds the extremal special case.
CaseVerdict decide_edge_bound(const LQ& lq, const EdgeFormula& f, std::int64_t k_min = 3);

// All offsets with mu_1 = 0, every entry >= 0, total < 18, closing; sorted.
std::vector<OffsetCase> enumerate_offset_cases();

struct InductiveReport {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::vector<OffsetCase> exceptional;
  std::vector<std::pair<OffsetCase, std::int64_t>> failures;  // case, witness k
  bool ok() const;
};

// Case count of the full enumeration; fixed by the first verified run.
inline constexpr std::int64_t kPinnedInductiveCaseCount = 77030;

InductiveReport compute_inductive_cases(unsigned threads = 1);
// Throws VerificationFailure on any failure, an unexpected exceptional family, or a case-count change.
InductiveReport verify_inductive_cases(unsigned threads = 1);

// Builds the case's 12-gon at k and compares n*(k) and the edge formula with direct counts.
// Requires every u_i >= 1 at that k; returns false on a mismatch.
bool end_to_end_matches(const OffsetCase& c, std::int64_t k);

}  // namespace isop
