#include "isoperim/trilattice.hpp"

#include <algorithm>
#include <vector>

#include "isoperim/errors.hpp"
#include "isoperim/exact.hpp"

namespace isop {

TriPoint TriPoint::from_lattice(const LatticePoint& p) {
  if (p.dimension() != 2) throw UsageError("TriPoint::from_lattice: expected a 2-dimensional point");
  return {p[0], p[1]};
}

const std::array<TriPoint, 12>& tri_generators() {
  static const std::array<TriPoint, 12> kGenerators = {{
      {1, 0}, {1, 1}, {0, 1}, {-1, 2}, {-1, 1}, {-2, 1},
      {-1, 0}, {-1, -1}, {0, -1}, {1, -2}, {1, -1}, {2, -1},
  }};
  return kGenerators;
}

EdgeClass edge_class(TriPoint generator) {
  switch (squared_length(generator)) {
    case 1: return EdgeClass::kShort;
    case 3: return EdgeClass::kLong;
    default: throw UsageError("edge_class: " + generator.to_string() + " is not a generator");
  }
}

const CayleyGraphSpec& lambda_u() {
  static const CayleyGraphSpec kSpec = [] {
    std::vector<LatticePoint> gens;
    for (const auto& g : tri_generators()) gens.push_back(g.to_lattice());
    return CayleyGraphSpec(2, std::move(gens));
  }();
  return kSpec;
}

std::int64_t squared_length(TriPoint v) { return v.a * v.a + v.a * v.b + v.b * v.b; }

double PlanePoint::x() const { return static_cast<double>(x_halves) / 2.0; }
double PlanePoint::y() const { return static_cast<double>(y_halves) * 0.8660254037844386; }

PlanePoint embed_to_plane(TriPoint p) { return {2 * p.a + p.b, p.b}; }

std::int64_t special_n(std::int64_t k) { return 24 * k * k - 24 * k + 7; }

std::optional<std::int64_t> special_k_of_n(std::int64_t n) {
  // n - 1 = 6(2k - 1)^2.
  if (n < 7 || (n - 1) % 6 != 0) return std::nullopt;
  std::int64_t m = (n - 1) / 6;
  if (!is_perfect_square(m)) return std::nullopt;
  std::int64_t odd = isqrt(m);
  if (odd % 2 == 0) return std::nullopt;
  return (odd + 1) / 2;
}

std::int64_t e_of_n(std::int64_t n) {
  if (n < 3) throw DomainError("e_of_n: requires n >= 3, got " + std::to_string(n));
  std::int64_t six_n = checked_mul(6, n);
  if (special_k_of_n(n)) {
    std::int64_t root = isqrt(six_n - 6);
    return six_n - 4 * root;
  }
  // floor(6n - sqrt(x)) = 6n - ceil(sqrt(x)).
  return six_n - ceil_sqrt(checked_sub(checked_mul(96, n), 63));
}

std::int64_t small_n(std::int64_t n) {
  if (n == 1) return 0;
  if (n == 2) return 1;
  throw DomainError("small_n: defined for n in {1, 2}, got " + std::to_string(n));
}

std::int64_t optimal_edges(std::int64_t n) { return n <= 2 ? small_n(n) : e_of_n(n); }

}  // namespace isop
