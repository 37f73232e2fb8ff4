#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "isoperim/counterexample.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/lattice.hpp"
#include "isoperim/trilattice.hpp"
#include "naive.hpp"

using namespace isop;

namespace {

std::vector<LatticePoint> hexagon() {
  std::vector<LatticePoint> pts{{0, 0}};
  for (const auto& g : tri_generators()) {
    if (edge_class(g) == EdgeClass::kShort) pts.push_back(g.to_lattice());
  }
  return pts;
}

}  // namespace

TEST_CASE("points: arithmetic, ordering, dimension") {
  LatticePoint p{1, -2};
  LatticePoint q{3, 4};
  CHECK(p + q == LatticePoint{4, 2});
  CHECK(q - p == LatticePoint{2, 6});
  CHECK(-p == LatticePoint{-1, 2});
  CHECK(3 * p == LatticePoint{3, -6});
  CHECK(p < q);
  CHECK(LatticePoint::zero(3).is_zero());
  CHECK(LatticePoint::unit(3, 2) == LatticePoint{0, 0, 1});
  CHECK(p.to_string() == "(1,-2)");
}

TEST_CASE("neighbors in both lattices") {
  const auto& lu = lambda_u();
  auto around = neighbors(LatticePoint{0, 0}, lu);
  CHECK(around.size() == 12);
  std::set<LatticePoint> got(around.begin(), around.end());
  for (const auto& g : tri_generators()) CHECK(got.count(g.to_lattice()) == 1);

  auto g2 = g_d(2);
  auto nb = neighbors(LatticePoint{0, 0}, g2);
  std::set<LatticePoint> expected{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0}, {-2, 0}};
  CHECK(std::set<LatticePoint>(nb.begin(), nb.end()) == expected);

  auto shifted = neighbors(LatticePoint{5, 5}, g2);
  std::set<LatticePoint> moved;
  for (const auto& e : expected) moved.insert(e + LatticePoint{5, 5});
  CHECK(std::set<LatticePoint>(shifted.begin(), shifted.end()) == moved);
}

TEST_CASE("generator sets must be symmetric and nonzero") {
  CHECK_THROWS(CayleyGraphSpec(2, {LatticePoint{1, 0}}));
  CHECK_THROWS(CayleyGraphSpec(2, {LatticePoint{0, 0}}));
  CHECK_NOTHROW(CayleyGraphSpec(2, {LatticePoint{1, 0}, LatticePoint{-1, 0}}));
}

TEST_CASE("induced edges and boundary on small sets") {
  const auto& lu = lambda_u();
  VertexSet hex(2, hexagon());
  CHECK(hex.size() == 7);
  CHECK(induced_edge_count(hex, lu) == 18);
  CHECK(edge_boundary(hex, lu) == 48);

  VertexSet single(2);
  single.insert(LatticePoint{3, -1});
  CHECK(induced_edge_count(single, lu) == 0);
  CHECK(edge_boundary(single, lu) == 12);
  CHECK(edge_boundary(single, g_d(2)) == 6);

  VertexSet pair(2, std::vector<LatticePoint>{{0, 0}, {1, 0}});
  CHECK(induced_edge_count(pair, g_d(2)) == 1);
}

TEST_CASE("handshake identity and agreement with pairwise count on random sets") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4);
  const auto& lu = lambda_u();
  for (int trial = 0; trial < 300; ++trial) {
    VertexSet s(2);
    const int n = 1 + static_cast<int>(rng() % 25);
    for (int i = 0; i < n; ++i) s.insert(LatticePoint{coord(rng), coord(rng)});
    auto pts = s.sorted_points();
    const auto e = induced_edge_count(s, lu);
    CHECK(e == naive::edges(pts, lu));
    CHECK(edge_boundary(s, lu) == naive::boundary(pts, lu));
    CHECK(edge_boundary(s, lu) == 12 * static_cast<std::int64_t>(s.size()) - 2 * e);
  }
}

TEST_CASE("vertex sets: insert, erase, translate, dimension checks") {
  VertexSet s(2);
  CHECK(s.insert(LatticePoint{1, 1}));
  CHECK_FALSE(s.insert(LatticePoint{1, 1}));
  CHECK(s.contains(LatticePoint{1, 1}));
  auto t = s.translated(LatticePoint{-1, 2});
  CHECK(t.contains(LatticePoint{0, 3}));
  CHECK(s.erase(LatticePoint{1, 1}));
  CHECK(s.empty());
  CHECK_THROWS(s.insert(LatticePoint{1, 1, 1}));
}
