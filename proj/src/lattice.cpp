#include "isoperim/lattice.hpp"

#include <algorithm>

#include "isoperim/errors.hpp"
#include "isoperim/exact.hpp"

namespace isop {
namespace {

void require_same_dimension(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw UsageError(std::string(what) + ": dimension mismatch (expected " + std::to_string(expected) +
                     ", got " + std::to_string(actual) + ")");
  }
}

}  // namespace

LatticePoint::LatticePoint(std::initializer_list<std::int64_t> coords)
    : LatticePoint(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

LatticePoint::LatticePoint(std::span<const std::int64_t> coords) : dim_(coords.size()) {
  if (coords.size() > kMaxDimension) {
    throw UsageError("LatticePoint: dimension " + std::to_string(coords.size()) + " exceeds " +
                     std::to_string(kMaxDimension));
  }
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

LatticePoint LatticePoint::zero(std::size_t dimension) {
  if (dimension > kMaxDimension) throw UsageError("LatticePoint: dimension too large");
  LatticePoint p;
  p.dim_ = dimension;
  return p;
}

LatticePoint LatticePoint::unit(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw UsageError("LatticePoint::unit: axis out of range");
  LatticePoint p = zero(dimension);
  p.coords_[axis] = 1;
  return p;
}

bool LatticePoint::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + dim_, [](std::int64_t c) { return c == 0; });
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = checked_sub(0, coords_[i]);
  return r;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  require_same_dimension(dim_, other.dim_, "LatticePoint +");
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  require_same_dimension(dim_, other.dim_, "LatticePoint -");
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
  return *this;
}

LatticePoint operator*(std::int64_t s, const LatticePoint& p) {
  LatticePoint r = LatticePoint::zero(p.dim_);
  for (std::size_t i = 0; i < p.dim_; ++i) r.coords_[i] = checked_mul(s, p.coords_[i]);
  return r;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) noexcept {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const LatticePoint& a, const LatticePoint& b) noexcept {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.dimension();
  for (std::int64_t c : p.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

CayleyGraphSpec::CayleyGraphSpec(std::size_t dimension, std::vector<LatticePoint> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension_ == 0 || dimension_ > LatticePoint::kMaxDimension) {
    throw UsageError("CayleyGraphSpec: unsupported dimension " + std::to_string(dimension_));
  }
  for (const auto& u : generators_) {
    require_same_dimension(dimension_, u.dimension(), "CayleyGraphSpec generator");
    if (u.is_zero()) throw UsageError("CayleyGraphSpec: generating set contains the zero vector");
  }
  std::sort(generators_.begin(), generators_.end());
  if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end()) {
    throw UsageError("CayleyGraphSpec: duplicate generator");
  }
  for (const auto& u : generators_) {
    if (!is_generator(-u)) throw UsageError("CayleyGraphSpec: generating set is not symmetric at " + u.to_string());
  }
}

bool CayleyGraphSpec::is_generator(const LatticePoint& v) const {
  return std::binary_search(generators_.begin(), generators_.end(), v);
}

bool CayleyGraphSpec::adjacent(const LatticePoint& x, const LatticePoint& y) const {
  require_same_dimension(dimension_, x.dimension(), "adjacent");
  require_same_dimension(dimension_, y.dimension(), "adjacent");
  return is_generator(y - x);
}

VertexSet::VertexSet(std::size_t dimension, std::span<const LatticePoint> points) : dimension_(dimension) {
  for (const auto& p : points) {
    if (!insert(p)) throw UsageError("VertexSet: duplicate point " + p.to_string());
  }
}

bool VertexSet::insert(const LatticePoint& p) {
  require_same_dimension(dimension_, p.dimension(), "VertexSet::insert");
  return points_.insert(p).second;
}

bool VertexSet::erase(const LatticePoint& p) { return points_.erase(p) > 0; }

bool VertexSet::contains(const LatticePoint& p) const { return points_.count(p) > 0; }

std::vector<LatticePoint> VertexSet::sorted_points() const {
  std::vector<LatticePoint> out(points_.begin(), points_.end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet VertexSet::translated(const LatticePoint& v) const {
  require_same_dimension(dimension_, v.dimension(), "VertexSet::translated");
  VertexSet out(dimension_);
  for (const auto& p : points_) out.insert(p + v);
  return out;
}

std::vector<LatticePoint> neighbors(const LatticePoint& p, const CayleyGraphSpec& g) {
  require_same_dimension(g.dimension(), p.dimension(), "neighbors");
  std::vector<LatticePoint> out;
  out.reserve(g.degree());
  for (const auto& u : g.generators()) out.push_back(p + u);
  return out;
}

std::int64_t induced_edge_count(const VertexSet& s, const CayleyGraphSpec& g) {
  require_same_dimension(g.dimension(), s.dimension(), "induced_edge_count");
  std::int64_t directed = 0;
  for (const auto& p : s) {
    for (const auto& u : g.generators()) directed += s.contains(p + u) ? 1 : 0;
  }
  return directed / 2;
}

std::int64_t edge_boundary(const VertexSet& s, const CayleyGraphSpec& g) {
  require_same_dimension(g.dimension(), s.dimension(), "edge_boundary");
  std::int64_t count = 0;
  for (const auto& p : s) {
    for (const auto& u : g.generators()) count += s.contains(p + u) ? 0 : 1;
  }
  return count;
}

}  // namespace isop
