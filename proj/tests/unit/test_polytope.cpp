#include <gtest/gtest.h>

#include <random>

#include "affgr/errors.hpp"
#include "affgr/polytope.hpp"
#include "support.hpp"

namespace affgr {
namespace {

using test::as_set;
using test::box_points;
using test::cr;

std::vector<IntVec> random_points(std::mt19937& rng, std::size_t dim, std::size_t count, Int range) {
  std::uniform_int_distribution<Int> coord(-range, range);
  std::vector<IntVec> pts(count, IntVec(dim));
  for (auto& p : pts)
    for (auto& x : p) x = coord(rng);
  return pts;
}

std::set<IntVec> sorted_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

TEST(Hull, Square) {
  const std::vector<IntVec> pts = {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}};
  const Hull h = convex_hull(pts);
  EXPECT_EQ(h.dimension, 2u);
  EXPECT_EQ(sorted_set(h.vertices), (std::set<IntVec>{{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  EXPECT_EQ(h.facets.size(), 4u);
  EXPECT_TRUE(h.contains({1, 2}));
  EXPECT_FALSE(h.contains({3, 1}));
  EXPECT_TRUE(in_convex_hull({1, 1}, pts));
  EXPECT_FALSE(in_convex_hull({-1, 1}, pts));
}

TEST(Hull, LowerDimensional) {
  const Hull seg = convex_hull({{0, 0, 0}, {1, 1, 1}, {3, 3, 3}});
  EXPECT_EQ(seg.dimension, 1u);
  EXPECT_EQ(sorted_set(seg.vertices), (std::set<IntVec>{{0, 0, 0}, {3, 3, 3}}));
  EXPECT_EQ(seg.equalities.size(), 2u);
  EXPECT_TRUE(seg.contains({2, 2, 2}));
  EXPECT_FALSE(seg.contains({2, 2, 1}));
  EXPECT_EQ(convex_hull({{5, -1}}).dimension, 0u);
  EXPECT_THROW(convex_hull({}), ArgumentError);
  EXPECT_THROW(convex_hull({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), UnsupportedRank);
}

// Exact facets and the LP extreme-point test agree, and the hull of the
// vertices is the same hull.
TEST(Hull, AgreesWithLinearProgramming) {
  std::mt19937 rng(23);
  for (std::size_t dim : {2u, 3u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto pts = random_points(rng, dim, 12, 4);
      const Hull h = convex_hull(pts);
      ASSERT_EQ(sorted_set(h.vertices), sorted_set(extreme_points(pts)));
      for (const auto& p : pts) ASSERT_TRUE(h.contains(p));
      const Hull again = convex_hull(h.vertices);
      ASSERT_EQ(as_set(again.facets), as_set(h.facets));
      for (const auto& q : random_points(rng, dim, 20, 5)) ASSERT_EQ(h.contains(q), in_convex_hull(q, pts));
    }
  }
}

TEST(Hull, AffineDimension) {
  EXPECT_EQ(affine_dimension({{1, 2, 3}}), 0u);
  EXPECT_EQ(affine_dimension({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), 4u);
  EXPECT_EQ(affine_dimension({{0, 0}, {1, 1}, {2, 2}}), 1u);
}

TEST(ChamberMaxima, Examples) {
  RootSystem a2("A2");
  const Coweight lam = cr(a2, {-3, -3});
  const auto psi = psi_infinity(a2, lam);
  EXPECT_EQ(chamber_maxima(a2, psi, a2.longest_element()), std::vector<Coweight>{lam});
  EXPECT_EQ(chamber_maxima(a2, psi, WeylElement::identity(2)), std::vector<Coweight>{cr(a2, {2, 2})});
}

// Maxima are pairwise incomparable and every vertex is a maximum of its chamber.
TEST(ChamberMaxima, ContainVerticesAndAreAntichains) {
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs(label);
    for (const auto& lam : box_points(2, 3)) {
      const auto psi = psi_infinity(rs, lam);
      std::set<Coweight> all;
      for (const auto& y : rs.elements()) {
        const auto mx = chamber_maxima(rs, psi, y);
        for (const auto& a : mx) {
          ASSERT_TRUE(rs.in_chamber(a, y));
          for (const auto& b : mx)
            if (a != b) ASSERT_FALSE(rs.positive_sum_in_chamber(b - a, y));
        }
        all.insert(mx.begin(), mx.end());
      }
      for (const auto& v : moment_polytope(rs, psi).vertices) ASSERT_TRUE(all.count(v)) << label << " " << to_string(lam);
    }
  }
}

TEST(MomentPolytope, DominantLambdaGivesWeylOrbit) {
  for (const char* label : {"A2", "B2", "G2", "A3", "C3"}) {
    RootSystem rs(label);
    for (const auto& lam : box_points(rs.rank(), rs.rank() == 2 ? 3 : 1)) {
      if (!lam.is_dominant()) continue;
      const auto mp = moment_polytope(rs, lam);
      ASSERT_EQ(as_set(mp.vertices), as_set(rs.weyl_orbit(lam))) << label << " " << to_string(lam);
      ASSERT_TRUE(integral_gap_scan(rs, mp).empty()) << label;
    }
  }
}

TEST(MomentPolytope, Example) {
  RootSystem a2("A2");
  const auto mp = moment_polytope(a2, cr(a2, {-3, -3}));
  EXPECT_TRUE(mp.contains(cr(a2, {0, 0})));
  EXPECT_TRUE(mp.contains(cr(a2, {2, 2})));
  EXPECT_FALSE(mp.contains(cr(a2, {3, 3})));
  EXPECT_TRUE(integral_gap_scan(a2, cr(a2, {-3, -3})).empty());
  EXPECT_TRUE(mp.hull.has_value());
}

TEST(MomentPolytope, LinearProgrammingVerticesInRankFour) {
  RootSystem d4("D4");
  const Coweight lam{-1, 0, 1, 0};
  const auto mp = moment_polytope(d4, lam);
  EXPECT_FALSE(mp.hull.has_value());
  EXPECT_THROW(mp.facets(), UnsupportedRank);
  EXPECT_EQ(as_set(mp.vertices), as_set(polytope_vertices_lp(mp.points)));
  EXPECT_THROW(integral_gap_scan(d4, lam), UnsupportedRank);
}

}  // namespace
}  // namespace affgr
