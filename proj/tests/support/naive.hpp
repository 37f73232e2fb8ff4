#pragma once

// Deliberately simple reimplementations used as oracles in tests. They share no code with the
// library beyond the point types.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "isoperim/lattice.hpp"
#include "isoperim/trilattice.hpp"

namespace naive {

using Cells = std::vector<isop::LatticePoint>;

inline Cells canonical(const std::set<isop::LatticePoint>& s) {
  Cells out(s.begin(), s.end());
  const isop::LatticePoint least = out.front();
  for (auto& p : out) p = p - least;
  return out;
}

// Every translation class of connected n-sets, by growing all (n-1)-classes one cell at a time.
inline std::set<Cells> connected_classes(const isop::CayleyGraphSpec& g, std::int64_t n) {
  std::set<Cells> level{{isop::LatticePoint::zero(g.dimension())}};
  for (std::int64_t m = 1; m < n; ++m) {
    std::set<Cells> next;
    for (const auto& cls : level) {
      std::set<isop::LatticePoint> s(cls.begin(), cls.end());
      for (const auto& p : cls) {
        for (const auto& u : g.generators()) {
          isop::LatticePoint q = p + u;
          if (s.count(q)) continue;
          auto grown = s;
          grown.insert(q);
          next.insert(canonical(grown));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

// Pairs whose difference is a generator, checked pair by pair.
inline std::int64_t edges(const Cells& s, const isop::CayleyGraphSpec& g) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.is_generator(s[j] - s[i])) ++count;
    }
  }
  return count;
}

inline std::int64_t boundary(const Cells& s, const isop::CayleyGraphSpec& g) {
  std::set<isop::LatticePoint> in(s.begin(), s.end());
  std::int64_t count = 0;
  for (const auto& p : s) {
    for (const auto& u : g.generators()) count += in.count(p + u) ? 0 : 1;
  }
  return count;
}

// Hull by Euclidean half-planes: in doubled planar coordinates X = 2a + b, Y = b (real y = Y*sqrt(3)/2),
// the cross product of direction D with point p is proportional to X_D * Y_p - Y_D * X_p.
inline std::vector<isop::TriPoint> hull(const std::vector<isop::TriPoint>& s) {
  auto cross = [](isop::TriPoint d, isop::TriPoint p) {
    const std::int64_t xd = 2 * d.a + d.b, yd = d.b, xp = 2 * p.a + p.b, yp = p.b;
    return xd * yp - yd * xp;
  };
  std::int64_t lo_a = s[0].a, hi_a = s[0].a, lo_b = s[0].b, hi_b = s[0].b;
  for (const auto& p : s) {
    lo_a = std::min(lo_a, p.a);
    hi_a = std::max(hi_a, p.a);
    lo_b = std::min(lo_b, p.b);
    hi_b = std::max(hi_b, p.b);
  }
  std::vector<std::int64_t> lows;
  for (const auto& d : isop::tri_generators()) {
    std::int64_t m = cross(d, s[0]);
    for (const auto& p : s) m = std::min(m, cross(d, p));
    lows.push_back(m);
  }
  // The hull of a set lies in its bounding box in (a, b) because +-(1,0) and +-(0,1) are directions.
  std::vector<isop::TriPoint> out;
  for (std::int64_t a = lo_a; a <= hi_a; ++a) {
    for (std::int64_t b = lo_b; b <= hi_b; ++b) {
      bool inside = true;
      for (std::size_t j = 0; j < 12 && inside; ++j) inside = cross(isop::tri_generators()[j], {a, b}) >= lows[j];
      if (inside) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace naive
