#include "isoperim/polygon.hpp"

#include <algorithm>
#include <limits>

#include "isoperim/errors.hpp"
#include "isoperim/exact.hpp"

namespace isop {

std::int64_t TwelveGonParams::b_u() const {
  std::int64_t s = 0;
  for (auto x : u) s = checked_add(s, x);
  return s;
}

std::int64_t TwelveGonParams::b_t() const {
  std::int64_t s = 0;
  for (auto x : t) s = checked_add(s, x);
  return s;
}

bool TwelveGonParams::nonnegative() const {
  return std::all_of(u.begin(), u.end(), [](auto x) { return x >= 0; }) &&
         std::all_of(t.begin(), t.end(), [](auto x) { return x >= 0; });
}

std::string TwelveGonParams::to_string() const {
  std::string s = "u=(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(u[i]);
  s += ") t=(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::int64_t side_functional(TriPoint direction, TriPoint p) {
  return checked_sub(checked_mul(direction.a, p.b), checked_mul(direction.b, p.a));
}

HullSet HullSet::from_supports(const std::array<std::int64_t, 12>& supports) {
  const auto& gens = tri_generators();
  HullSet h;
  h.supports_ = supports;
  // Generators 0, 2, 6, 8 are (1,0), (0,1), (-1,0), (0,-1): their functionals are b, -a, -b, a.
  const std::int64_t b_lo = supports[0], b_hi = -supports[6];
  const std::int64_t a_lo = supports[8], a_hi = -supports[2];
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
      TriPoint p{a, b};
      bool inside = true;
      for (std::size_t j = 0; j < 12 && inside; ++j) inside = side_functional(gens[j], p) >= supports[j];
      if (inside) h.points_.push_back(p);
    }
  }
  if (h.points_.empty()) throw DomainError("HullSet: supports describe an empty region");
  h.members_.insert(h.points_.begin(), h.points_.end());
  return h;
}

TriPoint HullSet::start_vertex() const {
  // Points are sorted by (a, b); the first with b on the bottom support line has least a.
  for (const auto& p : points_) {
    if (p.b == supports_[0]) return p;
  }
  throw DomainError("HullSet: bottom support line is empty");
}

HullSet hull(std::span<const TriPoint> s) {
  if (s.empty()) throw DomainError("hull: empty set");
  const auto& gens = tri_generators();
  std::array<std::int64_t, 12> supports;
  supports.fill(std::numeric_limits<std::int64_t>::max());
  for (const auto& p : s) {
    for (std::size_t j = 0; j < 12; ++j) supports[j] = std::min(supports[j], side_functional(gens[j], p));
  }
  return HullSet::from_supports(supports);
}

TwelveGonParams params_from_hull(const HullSet& h) {
  const auto& gens = tri_generators();
  std::array<std::int64_t, 12> on_line{};
  for (const auto& p : h.points()) {
    for (std::size_t j = 0; j < 12; ++j) {
      if (side_functional(gens[j], p) == h.supports()[j]) ++on_line[j];
    }
  }
  TwelveGonParams params;
  // Generators are primitive, so consecutive lattice points on a side are one step apart.
  for (std::size_t j = 0; j < 12; ++j) params.side(j) = on_line[j] - 1;
  return params;
}

TwelveGonParams params_from_points(std::span<const TriPoint> points) {
  HullSet h = hull(points);
  std::vector<TriPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("params_from_points: duplicate points");
  }
  if (sorted != h.points()) throw DomainError("params_from_points: points are not their own hull");
  return params_from_hull(h);
}

std::pair<std::int64_t, std::int64_t> closure_residuals(const TwelveGonParams& p) {
  const auto& u = p.u;
  const auto& t = p.t;
  std::int64_t r1 = u[0] - u[3] + t[0] - t[3] - t[1] + t[4] - u[2] + u[5] - 2 * t[2] + 2 * t[5];
  std::int64_t r2 = t[0] - t[3] + u[1] - u[4] + 2 * t[1] - 2 * t[4] + u[2] - u[5] + t[2] - t[5];
  return {r1, r2};
}

HullSet twelvegon_points(const TwelveGonParams& params, TriPoint start) {
  if (!params.nonnegative()) throw DomainError("twelvegon_points: negative side in " + params.to_string());
  if (closure_residuals(params) != std::pair<std::int64_t, std::int64_t>{0, 0}) {
    throw DomainError("twelvegon_points: side walk does not close for " + params.to_string());
  }
  const auto& gens = tri_generators();
  std::array<std::int64_t, 12> supports{};
  TriPoint v = start;
  for (std::size_t j = 0; j < 12; ++j) {
    supports[j] = side_functional(gens[j], v);
    v = v + params.side(j) * gens[j];
  }
  return HullSet::from_supports(supports);
}

std::int64_t vertex_count(const TwelveGonParams& params) {
  if (!params.nonnegative()) throw PreconditionError("vertex_count: negative side in " + params.to_string());
  if (closure_residuals(params) != std::pair<std::int64_t, std::int64_t>{0, 0}) {
    throw PreconditionError("vertex_count: open side walk " + params.to_string());
  }
  const auto& u = params.u;
  const auto& t = params.t;
  std::int64_t width = t[1] + 2 * t[2] + t[3] + u[2] + u[3] + 1;
  std::int64_t height = t[0] + 2 * t[1] + t[2] + u[1] + u[2] + 1;
  std::int64_t n = checked_mul(width, height);
  n -= binom2(t[1] + t[2] + u[2] + 1);
  n -= binom2(t[4] + t[5] + u[5] + 1);
  for (auto ti : t) n -= binom2(ti + 1);
  return n;
}

KPolynomial vertex_count_polynomial(const std::array<KPolynomial, 6>& u, const std::array<KPolynomial, 6>& t) {
  const KPolynomial one = KPolynomial::constant(1);
  KPolynomial width = t[1] + 2 * t[2] + t[3] + u[2] + u[3] + one;
  KPolynomial height = t[0] + 2 * t[1] + t[2] + u[1] + u[2] + one;
  KPolynomial twice = 2 * (width * height);
  twice -= twice_binom2(t[1] + t[2] + u[2] + one);
  twice -= twice_binom2(t[4] + t[5] + u[5] + one);
  for (const auto& ti : t) twice -= twice_binom2(ti + one);
  return twice.halved();
}

bool angle_condition_holds(const TwelveGonParams& p) {
  for (std::size_t i = 0; i < 6; ++i) {
    std::size_t next = (i + 1) % 6;
    if (p.u[i] == 0 && p.t[i] == 0 && p.u[next] == 0) return false;
    if (p.t[i] == 0 && p.u[next] == 0 && p.t[next] == 0) return false;
  }
  return true;
}

BoundaryStats boundary_stats(const TwelveGonParams& params) {
  if (!angle_condition_holds(params)) {
    throw PreconditionError("boundary_stats: angle condition fails for " + params.to_string());
  }
  BoundaryStats s;
  s.b_u = params.b_u();
  s.b_t = params.b_t();
  s.b = s.b_u + s.b_t;
  s.boundary = 6 * s.b_u + 10 * s.b_t + 12;
  return s;
}

bool has_empty_separating_line(std::span<const TriPoint> s) {
  if (s.empty()) return false;
  const auto& gens = tri_generators();
  for (std::size_t j = 0; j < 6; ++j) {
    std::vector<std::int64_t> values;
    values.reserve(s.size());
    for (const auto& p : s) values.push_back(side_functional(gens[j], p));
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] - values[i - 1] > 1) return true;
    }
  }
  return false;
}

TwelveGonParams sample_realizable_params(std::mt19937_64& rng, std::int64_t min_side, std::int64_t max_side) {
  if (min_side < 0 || max_side < min_side) throw UsageError("sample_realizable_params: bad side range");
  std::uniform_int_distribution<std::int64_t> dist(min_side, max_side);
  for (;;) {
    TwelveGonParams p;
    for (auto& x : p.u) x = dist(rng);
    p.t[0] = dist(rng);
    p.t[1] = dist(rng);
    p.t[2] = dist(rng);
    p.t[5] = dist(rng);
    const auto& u = p.u;
    const auto& t = p.t;
    // First residual fixes t5 - t4, the second fixes t4 + 2 t5.
    std::int64_t diff = -(u[0] - u[3] + t[0] - t[1] - u[2] + u[5] - 2 * t[2] + 2 * t[5]);
    std::int64_t rest = t[0] + u[1] - u[4] + 2 * t[1] + u[2] - u[5] + t[2] - t[5];
    std::int64_t num = rest - 2 * diff;
    if (num % 3 != 0) continue;
    p.t[3] = num / 3;
    p.t[4] = p.t[3] + diff;
    if (p.t[3] < min_side || p.t[4] < min_side || p.t[3] > max_side || p.t[4] > max_side) continue;
    return p;
  }
}

std::vector<LatticePoint> to_lattice_points(std::span<const TriPoint> points) {
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.to_lattice());
  return out;
}

}  // namespace isop
