#include <gtest/gtest.h>

#include <random>
#include <set>

#include "affgr/components.hpp"
#include "affgr/errors.hpp"
#include "support.hpp"

namespace affgr {
namespace {

using test::box_points;
using test::cr;

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A5", "B2", "B3", "C2", "C4", "D4",
                                            "D5", "E6", "E7", "E8", "F4", "G2"};

TEST(Components, CountEqualsIndexOfCorootLattice) {
  for (const auto& label : kAllTypes) {
    RootSystem rs(label);
    AffineWeylGroup g(rs);
    Components c(g);
    EXPECT_EQ(static_cast<Int>(c.indices().size()), rs.determinant()) << label;
    EXPECT_EQ(c.indices().front().kappa, 0);
    EXPECT_TRUE(c.indices().front().omega.is_zero());
  }
}

TEST(Components, ComponentOfExamples) {
  RootSystem rs("A2");
  AffineWeylGroup g(rs);
  Components c(g);
  EXPECT_EQ(c.component_of(cr(rs, {2, -1})).kappa, 0);
  EXPECT_EQ(c.component_of(-rs.fundamental_coweight(1)).kappa, 1);
  EXPECT_EQ(c.component_of(rs.fundamental_coweight(1)).kappa, 2);
  EXPECT_THROW(c.index(3), ArgumentError);
}

TEST(Components, ComponentOfIsConsistent) {
  for (const char* label : {"A3", "D4", "E6", "B3", "C3"}) {
    RootSystem rs(label);
    AffineWeylGroup g(rs);
    Components c(g);
    for (const auto& lam : box_points(rs.rank(), 1))
      EXPECT_TRUE(rs.in_coroot_lattice(lam + c.component_of(lam).omega)) << label;
  }
}

TEST(Components, ParabolicGenerators) {
  RootSystem rs("A2");
  AffineWeylGroup g(rs);
  Components c(g);
  EXPECT_EQ(c.parabolic_generators(0), (std::vector<int>{1, 2}));
  EXPECT_EQ(c.parabolic_generators(1), (std::vector<int>{0, 2}));
}

TEST(Components, ConjugationByFundamentalCoweight) {
  for (const auto& label : kAllTypes) {
    RootSystem rs(label);
    AffineWeylGroup g(rs);
    Components c(g);
    for (const auto& ci : c.indices()) EXPECT_TRUE(c.verify_conjugation(ci.kappa)) << label << " " << ci.kappa;
  }
  RootSystem a2("A2");
  AffineWeylGroup g(a2);
  const auto om = a2.fundamental_coweight(1);
  const auto s2 = g.simple_reflection(2);
  EXPECT_EQ(g.multiply(g.translation(om), g.multiply(s2, g.translation(-om))), s2);
}

TEST(Components, GammaHasLengthZeroAndPermutesSimpleReflections) {
  for (const auto& label : kAllTypes) {
    RootSystem rs(label);
    AffineWeylGroup g(rs);
    Components c(g);
    EXPECT_EQ(c.gamma(0), g.identity()) << label;
    for (const auto& ci : c.indices()) {
      const auto gam = c.gamma(ci.kappa);
      EXPECT_EQ(g.length(gam), 0) << label;
      std::set<int> images;
      for (int i = 0; i <= static_cast<int>(rs.rank()); ++i) {
        const auto conj = g.multiply(gam, g.multiply(g.simple_reflection(i), g.inverse(gam)));
        for (int j = 0; j <= static_cast<int>(rs.rank()); ++j)
          if (conj == g.simple_reflection(j)) images.insert(j);
      }
      EXPECT_EQ(images.size(), rs.rank() + 1) << label << " kappa=" << ci.kappa;
    }
  }
  RootSystem a2("A2");
  AffineWeylGroup g(a2);
  Components c(g);
  EXPECT_NE(c.gamma(1), g.identity());
}

TEST(Components, WKappaIsParabolicLongestElement) {
  RootSystem rs("A2");
  AffineWeylGroup g(rs);
  Components c(g);
  EXPECT_EQ(c.w_kappa(1), rs.simple_reflection(2));
  EXPECT_EQ(c.w_upper(1), rs.simple_reflection(2) * rs.longest_element());
  EXPECT_EQ(c.w_upper(0), WeylElement::identity(2));
}

TEST(Components, TranslateExamples) {
  RootSystem rs("A2");
  AffineWeylGroup g(rs);
  Components c(g);
  for (int kappa : {0, 1, 2}) EXPECT_EQ(c.translate(Coweight::zero(2), kappa), -c.index(kappa).omega);
  const Coweight a1c = cr(rs, {1, 0});
  EXPECT_EQ(c.translate(a1c, 0), a1c);
  const WeylElement w1 = rs.from_word(std::vector<int>{2}) * rs.longest_element();
  EXPECT_EQ(c.translate(a1c, 1), w1.apply(a1c) - rs.fundamental_coweight(1));
  EXPECT_THROW(c.translate(rs.fundamental_coweight(1), 1), ArgumentError);
}

TEST(Components, TranslateLandsInComponent) {
  for (const char* label : {"A3", "B3", "C3", "D4"}) {
    RootSystem rs(label);
    AffineWeylGroup g(rs);
    Components c(g);
    for (const auto& ci : c.indices())
      for (const auto& lam : box_points(rs.rank(), 1)) {
        if (!rs.in_coroot_lattice(lam)) continue;
        EXPECT_EQ(c.component_of(c.translate(lam, ci.kappa)).kappa, ci.kappa) << label;
      }
  }
}

// iota(lambda) is the minimal element of tau_{-lambda-omega} W_kappa, so it
// does not depend on which element of the coset is reduced.
TEST(Components, IotaIsWellDefinedAndInjective) {
  for (const char* label : {"A2", "B2", "A3"}) {
    RootSystem rs(label);
    AffineWeylGroup g(rs);
    Components c(g);
    std::mt19937 rng(3);
    for (const auto& ci : c.indices()) {
      const auto gens = c.parabolic_generators(ci.kappa);
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      std::set<std::pair<IntVec, IntVec>> reps;
      std::size_t n = 0;
      for (const auto& mu : box_points(rs.rank(), 2)) {
        if (c.component_of(mu).kappa != ci.kappa) continue;
        ++n;
        const auto rep = c.iota(mu);
        reps.insert({rep.translation().coords(), rep.finite_part().chamber_key().coords()});
        auto x = g.translation(-mu - ci.omega);
        for (int step = 0; step < 8; ++step) {
          x = g.multiply(x, g.simple_reflection(gens[pick(rng)]));
          ASSERT_EQ(g.min_coset_rep(x, ci.kappa), rep) << label;
        }
      }
      EXPECT_EQ(reps.size(), n) << label;
    }
  }
}

}  // namespace
}  // namespace affgr
