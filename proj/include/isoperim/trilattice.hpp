#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "isoperim/lattice.hpp"

namespace isop {

// a*g1 + b*g2 with g1 = (1, 0) and g2 = (1/2, sqrt(3)/2).
struct TriPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  LatticePoint to_lattice() const { return LatticePoint{a, b}; }
  static TriPoint from_lattice(const LatticePoint& p);

  friend TriPoint operator+(TriPoint p, TriPoint q) { return {p.a + q.a, p.b + q.b}; }
  friend TriPoint operator-(TriPoint p, TriPoint q) { return {p.a - q.a, p.b - q.b}; }
  friend TriPoint operator*(std::int64_t s, TriPoint p) { return {s * p.a, s * p.b}; }
  friend auto operator<=>(const TriPoint&, const TriPoint&) = default;

  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

struct TriPointHash {
  std::size_t operator()(const TriPoint& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.a) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(p.b) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h * 0xff51afd7ed558ccdULL);
  }
};

enum class EdgeClass { kShort, kLong };

// The 12 generators in counterclockwise order of angle, starting at g1:
// g1, g1+g2, g2, 2g2-g1, g2-g1, g2-2g1, then the negatives. Even indices are short
// (length 1), odd indices long (length sqrt 3).
const std::array<TriPoint, 12>& tri_generators();

EdgeClass edge_class(TriPoint generator);

// The Cayley graph on the triangular lattice joining points at distance 1 or sqrt 3.
const CayleyGraphSpec& lambda_u();

// Squared Euclidean length of a*g1 + b*g2, i.e. a^2 + ab + b^2.
std::int64_t squared_length(TriPoint v);

// Exact planar position, stored in halves: x = x_halves / 2 and y = y_halves * sqrt(3) / 2.
struct PlanePoint {
  std::int64_t x_halves = 0;
  std::int64_t y_halves = 0;

  double x() const;
  double y() const;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

PlanePoint embed_to_plane(TriPoint p);

// Maximum induced edge count over n-point subsets of the triangular lattice graph, n >= 3.
// DomainError for n < 3.
std::int64_t e_of_n(std::int64_t n);

// The optimum for n in {1, 2}, which e_of_n does not cover.
std::int64_t small_n(std::int64_t n);

// small_n for n <= 2, e_of_n otherwise.
std::int64_t optimal_edges(std::int64_t n);

// k >= 1 with n = 24k^2 - 24k + 7, if any.
std::optional<std::int64_t> special_k_of_n(std::int64_t n);

std::int64_t special_n(std::int64_t k);

}  // namespace isop
