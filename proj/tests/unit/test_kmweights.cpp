#include <gtest/gtest.h>

#include <random>
#include <set>

#include "affgr/errors.hpp"
#include "affgr/kmweights.hpp"
#include "support.hpp"

namespace affgr {
namespace {

using test::box_points;
using test::cr;

struct Ctx {
  explicit Ctx(const char* label) : rs(label), g(rs), comps(g), km(comps) {}
  RootSystem rs;
  AffineWeylGroup g;
  Components comps;
  LevelOneWeights km;
};

RatVec rat(const Coweight& c) {
  RatVec v;
  for (Int x : c.coords()) v.emplace_back(x);
  return v;
}

TEST(Bilinear, Normalisation) {
  Ctx a1("A1");
  EXPECT_EQ(a1.km.bilinear(Coweight{2}, Coweight{2}), 2);
  EXPECT_EQ(a1.km.bilinear(Coweight{4}, Coweight{4}), 8);
  Ctx b2("B2");
  EXPECT_EQ(b2.km.bilinear(b2.rs.coroot(b2.rs.simple_root_id(2)), b2.rs.coroot(b2.rs.simple_root_id(2))), 4);
  EXPECT_EQ(b2.km.bilinear(b2.rs.coroot(b2.rs.simple_root_id(1)), b2.rs.coroot(b2.rs.simple_root_id(1))), 2);
  for (const char* label : {"A3", "B3", "C3", "D4", "E6", "F4", "G2"}) {
    Ctx c(label);
    const Coweight th = c.rs.coroot(c.rs.highest_root_id());
    EXPECT_EQ(c.km.bilinear(th, th), 2) << label;
  }
}

// (x | alpha coroot) * 2 / (alpha coroot | alpha coroot) = <x, alpha>.
TEST(Bilinear, RecoversThePairing) {
  for (const char* label : {"A3", "B3", "C3", "G2", "F4"}) {
    Ctx c(label);
    for (const auto& x : box_points(c.rs.rank(), 1))
      for (std::size_t id = 0; id < c.rs.num_positive_roots(); ++id) {
        const Coweight h = c.rs.coroot(id);
        EXPECT_EQ(2 * c.km.bilinear(x, h) / c.km.bilinear(h, h), c.rs.pair(x, id)) << label;
      }
  }
}

TEST(AffineAction, Examples) {
  Ctx a1("A1");
  // tau_{2 alpha coroot}(L0) = L0 + 2 alpha coroot - 4 delta.
  const auto h = a1.km.act(a1.g.translation(Coweight{4}), a1.km.lambda0());
  EXPECT_EQ(h, (AffineWeight{1, {Rational(4)}, Rational(-4)}));
  EXPECT_EQ(to_string(h), "L0 + (4)·X - 4·delta");
  EXPECT_EQ(h, a1.km.varpi(Coweight{-4}));

  for (const char* label : {"A2", "B2", "G2", "C3"}) {
    Ctx c(label);
    const Coweight th = c.rs.coroot(c.rs.highest_root_id());
    const auto s0 = c.km.act(c.g.simple_reflection(0), c.km.lambda0());
    EXPECT_EQ(s0, c.km.lambda0() + c.km.embed(th) + Rational(-1) * c.km.delta()) << label;
    for (int i = 1; i <= static_cast<int>(c.rs.rank()); ++i)
      EXPECT_EQ(c.km.act(c.g.simple_reflection(i), c.km.lambda0()), c.km.lambda0()) << label;
  }
}

TEST(AffineAction, IsAnAction) {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx c(label);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, 2);
    auto random_element = [&] {
      std::vector<int> w(6);
      for (auto& x : w) x = letter(rng);
      return c.g.from_word(w);
    };
    const AffineWeight h{1, {Rational(1, 2), Rational(-3)}, Rational(5)};
    for (int s = 0; s < 200; ++s) {
      const auto x = random_element(), y = random_element();
      ASSERT_EQ(c.km.act(c.g.multiply(x, y), h), c.km.act(x, c.km.act(y, h))) << label;
    }
  }
}

// varpi is the closed form of tau_{-lambda-omega}(L_kappa).
TEST(Varpi, AgreesWithTheAffineAction) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"}) {
    Ctx c(label);
    for (const auto& lam : box_points(c.rs.rank(), c.rs.rank() <= 2 ? 3 : 1)) {
      const auto& ci = c.comps.component_of(lam);
      const auto via_action = c.km.act(c.g.translation(-lam - ci.omega), c.km.lambda_kappa(ci.kappa));
      ASSERT_EQ(c.km.varpi(lam), via_action) << label << " " << to_string(lam);
      ASSERT_EQ(c.km.project(c.km.varpi(lam)), rat(lam));
    }
  }
}

TEST(Varpi, Examples) {
  Ctx a1("A1");
  EXPECT_EQ(a1.km.varpi(Coweight{-4}), (AffineWeight{1, {Rational(4)}, Rational(-4)}));
  EXPECT_EQ(a1.km.varpi(Coweight{0}), a1.km.lambda0());
  Ctx a2("A2");
  EXPECT_EQ(a2.km.varpi(-a2.rs.fundamental_coweight(1)), a2.km.lambda_kappa(1));
  EXPECT_EQ(a2.km.varpi(-a2.rs.fundamental_coweight(2)), a2.km.lambda_kappa(2));
  EXPECT_THROW(a2.km.project(Rational(2) * a2.km.lambda0()), ArgumentError);
}

TEST(Varpi, Injective) {
  Ctx b2("B2");
  std::set<std::string> seen;
  const auto pts = box_points(2, 5);
  for (const auto& lam : pts) seen.insert(to_string(b2.km.varpi(lam)));
  EXPECT_EQ(seen.size(), pts.size());
}

TEST(LevelOneDominant, OneRepresentativePerComponent) {
  for (const char* label : {"A1", "A2", "A4", "B3", "C3", "D4", "D5", "E6", "E7", "G2"}) {
    Ctx c(label);
    std::set<Coweight> expected{Coweight::zero(c.rs.rank())};
    for (const auto& ci : c.comps.indices()) expected.insert(ci.omega);
    std::set<Coweight> found;
    for (const auto& lam : box_points(c.rs.rank(), 2))
      if (c.km.is_level_one_dominant(lam)) found.insert(lam);
    EXPECT_EQ(found, expected) << label;
  }
}

TEST(Eta, Examples) {
  Ctx b2("B2");
  const auto a2 = b2.rs.root(b2.rs.simple_root_id(2));
  const auto e = b2.km.eta(AffineRoot{a2, 1});
  EXPECT_EQ(e.coroot, (IntVec{0, 1}));
  EXPECT_EQ(e.delta, 2);
  EXPECT_EQ(b2.km.eta(AffineRoot{b2.rs.root(b2.rs.simple_root_id(1)), 1}).delta, 1);
  EXPECT_EQ(b2.km.eta(-AffineRoot{a2, 1}), (DualAffineRoot{{0, -1}, Rational(-2)}));
  EXPECT_THROW(b2.km.eta(AffineRoot{{0, 0}, 1}), ArgumentError);

  Ctx g2("G2");
  EXPECT_EQ(g2.km.eta(AffineRoot{g2.rs.root(g2.rs.simple_root_id(1)), 1}).delta, 3);
  EXPECT_EQ(g2.km.eta(AffineRoot{g2.rs.root(g2.rs.simple_root_id(2)), 1}).delta, 1);
}

// eta(x . r) = x . eta(r), with the dual action computed on weights.
TEST(Eta, Equivariant) {
  for (const char* label : {"A2", "B2", "G2", "C3"}) {
    Ctx c(label);
    const int n = static_cast<int>(c.rs.rank());
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> letter(0, n);
    std::uniform_int_distribution<std::size_t> pick(0, c.rs.num_positive_roots() - 1);
    std::uniform_int_distribution<Int> level(-3, 3);
    for (int s = 0; s < 300; ++s) {
      std::vector<int> w(5);
      for (auto& x : w) x = letter(rng);
      const auto x = c.g.from_word(w);
      AffineRoot r{c.rs.root(pick(rng)), level(rng)};
      if (s % 2) r = -r;
      ASSERT_EQ(c.km.eta(c.g.act(x, r)), c.km.act(x, c.km.eta(r))) << label;
    }
  }
}

TEST(DemazureShift, LandsInPsi) {
  for (const char* label : {"A2", "B2", "G2"}) {
    Ctx c(label);
    std::size_t defined = 0;
    for (const auto& lam : box_points(2, 3))
      for (std::size_t id = 0; id < c.rs.num_positive_roots(); ++id)
        for (Int k = 1; k <= 8; ++k) {
          auto ok = c.km.demazure_shift_check(lam, id, k);
          if (!ok) continue;
          ++defined;
          ASSERT_TRUE(*ok) << label << " " << to_string(lam) << " root " << id << " k=" << k;
        }
    EXPECT_GT(defined, 100u) << label;
  }
}

TEST(DemazureShift, Examples) {
  Ctx a1("A1");
  // <lambda, alpha> = 4: k = 1..4 give lambda - k alpha coroot.
  for (Int k = 1; k <= 4; ++k) EXPECT_EQ(a1.km.demazure_shift(Coweight{4}, 0, k), rat(Coweight{4 - 2 * k}));
  EXPECT_FALSE(a1.km.demazure_shift(Coweight{4}, 0, 5).has_value());
  // <lambda, alpha> = -4: k = 1..3 give lambda + k alpha coroot.
  for (Int k = 1; k <= 3; ++k) EXPECT_EQ(a1.km.demazure_shift(Coweight{-4}, 0, k), rat(Coweight{-4 + 2 * k}));
  EXPECT_FALSE(a1.km.demazure_shift(Coweight{-4}, 0, 4).has_value());
  EXPECT_FALSE(a1.km.demazure_shift(Coweight{-1}, 0, 1).has_value());
}

}  // namespace
}  // namespace affgr
