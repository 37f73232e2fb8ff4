#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "isoperim/kpoly.hpp"
#include "isoperim/trilattice.hpp"

namespace isop {

// Side lengths of a lattice 12-gon, counterclockwise: u1, t1, u2, t2, ..., u6, t6.
// Side u_i runs along generator 2(i-1) (short), side t_i along generator 2i-1 (long).
struct TwelveGonParams {
  std::array<std::int64_t, 6> u{};
  std::array<std::int64_t, 6> t{};

  // Side j in walk order; j in [0, 12).
  std::int64_t side(std::size_t j) const { return j % 2 == 0 ? u[j / 2] : t[j / 2]; }
  std::int64_t& side(std::size_t j) { return j % 2 == 0 ? u[j / 2] : t[j / 2]; }

  std::int64_t b_u() const;
  std::int64_t b_t() const;
  std::int64_t b() const { return b_u() + b_t(); }
  bool nonnegative() const;

  friend bool operator==(const TwelveGonParams&, const TwelveGonParams&) = default;
  std::string to_string() const;
};

// A finite subset of the triangular lattice equal to its own hull.
class HullSet {
 public:
  // Lattice points p with cross(D_j, p) >= supports[j] for all 12 generators D_j.
  static HullSet from_supports(const std::array<std::int64_t, 12>& supports);

  const std::vector<TriPoint>& points() const noexcept { return points_; }  // sorted
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(TriPoint p) const { return members_.count(p) != 0; }
  // Lexicographically least point.
  TriPoint anchor() const { return points_.front(); }
  // Start of side u1: the leftmost point of the bottom row.
  TriPoint start_vertex() const;
  const std::array<std::int64_t, 12>& supports() const noexcept { return supports_; }

 private:
  std::array<std::int64_t, 12> supports_{};
  std::vector<TriPoint> points_;
  std::unordered_set<TriPoint, TriPointHash> members_;
};

// cross(D, p) = D.a * p.b - D.b * p.a; positive when p lies to the left of D.
std::int64_t side_functional(TriPoint direction, TriPoint p);

// Smallest intersection of 12 lattice half-planes (boundaries parallel to generators) holding S.
// DomainError if S is empty.
HullSet hull(std::span<const TriPoint> s);

TwelveGonParams params_from_hull(const HullSet& h);
// DomainError unless the points form their own hull.
TwelveGonParams params_from_points(std::span<const TriPoint> points);

// Walks the sides from start (the first vertex of side u1) and fills the interior.
// DomainError on negative sides or a walk that does not close.
HullSet twelvegon_points(const TwelveGonParams& params, TriPoint start = {});

// Parallelogram product minus two corner triangles and the 6 cut-off long-side triangles.
// PreconditionError on negative sides or nonzero closure residuals.
std::int64_t vertex_count(const TwelveGonParams& params);

// The same count with every side a polynomial in k.
KPolynomial vertex_count_polynomial(const std::array<KPolynomial, 6>& u, const std::array<KPolynomial, 6>& t);

// (a, b) components of the closed side walk; (0, 0) iff the 12-gon closes.
std::pair<std::int64_t, std::int64_t> closure_residuals(const TwelveGonParams& params);

// No i (cyclic) with u_i = t_i = u_{i+1} = 0 or t_i = u_{i+1} = t_{i+1} = 0.
bool angle_condition_holds(const TwelveGonParams& params);

struct BoundaryStats {
  std::int64_t b_u = 0;
  std::int64_t b_t = 0;
  std::int64_t b = 0;
  std::int64_t boundary = 0;  // 6 b_u + 10 b_t + 12
};

// PreconditionError if the angle condition fails.
BoundaryStats boundary_stats(const TwelveGonParams& params);

// True if some lattice line parallel to a generator lies strictly between points of S
// without meeting S.
bool has_empty_separating_line(std::span<const TriPoint> s);

// Uniform-ish closed 12-gon: u1..u6, t1, t2, t3, t6 drawn from [min_side, max_side],
// t4 and t5 solved from closure; draws with t4 or t5 outside [min_side, max_side] are rejected.
TwelveGonParams sample_realizable_params(std::mt19937_64& rng, std::int64_t min_side, std::int64_t max_side);

std::vector<LatticePoint> to_lattice_points(std::span<const TriPoint> points);

}  // namespace isop
