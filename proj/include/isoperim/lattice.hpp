#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace isop {

// A point of Z^d. Coordinates live inline (no allocation); d is at most kMaxDimension.
class LatticePoint {
 public:
  static constexpr std::size_t kMaxDimension = 8;

  LatticePoint() = default;
  LatticePoint(std::initializer_list<std::int64_t> coords);
  explicit LatticePoint(std::span<const std::int64_t> coords);

  static LatticePoint zero(std::size_t dimension);
  static LatticePoint unit(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const noexcept { return dim_; }
  std::span<const std::int64_t> coords() const noexcept { return {coords_.data(), dim_}; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const noexcept;

  LatticePoint operator-() const;
  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(std::int64_t s, const LatticePoint& p);

  // Componentwise lexicographic; points of lower dimension order first.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) noexcept;
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) noexcept;

  std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxDimension> coords_{};
  std::size_t dim_ = 0;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

// Z^d with a finite symmetric generating set U (0 not in U). Edges join x and y when y - x is in U.
class CayleyGraphSpec {
 public:
  CayleyGraphSpec(std::size_t dimension, std::vector<LatticePoint> generators);

  std::size_t dimension() const noexcept { return dimension_; }
  // Sorted lexicographically.
  std::span<const LatticePoint> generators() const noexcept { return generators_; }
  std::size_t degree() const noexcept { return generators_.size(); }
  bool is_generator(const LatticePoint& v) const;
  bool adjacent(const LatticePoint& x, const LatticePoint& y) const;

 private:
  std::size_t dimension_;
  std::vector<LatticePoint> generators_;
};

class VertexSet {
 public:
  explicit VertexSet(std::size_t dimension) : dimension_(dimension) {}
  // Throws UsageError on duplicate points or mixed dimensions.
  VertexSet(std::size_t dimension, std::span<const LatticePoint> points);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  // False when the point was already present.
  bool insert(const LatticePoint& p);
  bool erase(const LatticePoint& p);
  bool contains(const LatticePoint& p) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::vector<LatticePoint> sorted_points() const;
  VertexSet translated(const LatticePoint& v) const;

 private:
  std::size_t dimension_;
  std::unordered_set<LatticePoint, LatticePointHash> points_;
};

// { p + u : u in U }; |result| == g.degree().
std::vector<LatticePoint> neighbors(const LatticePoint& p, const CayleyGraphSpec& g);

// Number of unordered pairs {x, y} in S with y - x in U.
std::int64_t induced_edge_count(const VertexSet& s, const CayleyGraphSpec& g);

// Number of edges with exactly one endpoint in S.
std::int64_t edge_boundary(const VertexSet& s, const CayleyGraphSpec& g);

}  // namespace isop
