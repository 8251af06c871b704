#include <gtest/gtest.h>

#include "affgr/errors.hpp"
#include "affgr/io.hpp"
#include "support.hpp"

namespace affgr {
namespace {

using test::box_points;
using test::cr;

TEST(ParseCoweight, Fundamental) {
  RootSystem a2("A2");
  EXPECT_EQ(parse_coweight(a2, "-6,3"), (Coweight{-6, 3}));
  EXPECT_EQ(parse_coweight(a2, " 1 , -2 "), (Coweight{1, -2}));
  EXPECT_THROW(parse_coweight(a2, "1"), ArgumentError);
  EXPECT_THROW(parse_coweight(a2, "1,2,3"), ArgumentError);
  EXPECT_THROW(parse_coweight(a2, "1,x"), ArgumentError);
  EXPECT_THROW(parse_coweight(a2, ""), ArgumentError);
}

TEST(ParseCoweight, Coroot) {
  RootSystem a2("A2");
  EXPECT_EQ(parse_coweight(a2, "-3,0", Basis::Coroot), (Coweight{-6, 3}));
  EXPECT_EQ(parse_coweight(a2, "2/3,1/3", Basis::Coroot), a2.fundamental_coweight(1));
  EXPECT_THROW(parse_coweight(a2, "1/2,0", Basis::Coroot), ArgumentError);
  RootSystem b3("B3");
  for (const auto& lam : box_points(3, 2)) {
    std::string text;
    for (const auto& x : b3.coroot_coordinates(lam)) text += (text.empty() ? "" : ",") + to_string(x);
    ASSERT_EQ(parse_coweight(b3, text, Basis::Coroot), lam) << text;
  }
}

TEST(RootLabel, Examples) {
  EXPECT_EQ(root_label({1, 0}), "a1");
  EXPECT_EQ(root_label({1, 2}), "a1+2a2");
  EXPECT_EQ(root_label({-1, -1}), "-a1-a2");
  EXPECT_EQ(root_label({0, 0, 3}), "3a3");
  EXPECT_EQ(root_label({0, 0}), "0");
}

TEST(ParseRoot, Forms) {
  RootSystem b2("B2");
  EXPECT_EQ(parse_root(b2, "2"), b2.simple_root_id(2));
  EXPECT_EQ(parse_root(b2, "1,2"), b2.find_root({1, 2}).value());
  EXPECT_EQ(parse_root(b2, "#0"), 0u);
  EXPECT_THROW(parse_root(b2, "#9"), ArgumentError);
  EXPECT_THROW(parse_root(b2, "2,1"), ArgumentError);
  EXPECT_THROW(parse_root(b2, ""), ArgumentError);
  RootSystem a1("A1");
  EXPECT_EQ(parse_root(a1, "1"), 0u);
}

TEST(Json, PsiSet) {
  RootSystem a1("A1");
  const Json j = to_json(psi_infinity(a1, Coweight{-4}));
  EXPECT_EQ(j.dump(), R"j({"lambda":[-4],"members":[[-4],[-2],[0],[2]],"generations":{"-4":0,"-2":1,"0":1,"2":1}})j");
}

TEST(Json, WeightsAndRoots) {
  RootSystem a1("A1");
  AffineWeylGroup g(a1);
  Components comps(g);
  LevelOneWeights km(comps);
  EXPECT_EQ(to_json(km.varpi(Coweight{-4})).dump(), R"j({"level":"1","classical":["4"],"delta":"-4"})j");
  EXPECT_EQ(to_json(DualAffineRoot{{1}, Rational(1, 2)}).dump(), R"j({"coroot":[1],"delta":"1/2"})j");
  EXPECT_EQ(to_json(a1, g.translation(Coweight{2})).dump(), R"j({"trans":[2],"word":[]})j");
}

TEST(Json, BraidReport) {
  RootSystem a2("A2");
  const auto rep = braid_check(a2, Coweight{-2, 1}, a2.simple_root_id(1), a2.simple_root_id(2));
  const Json j = to_json(a2, rep);
  EXPECT_EQ(j["alpha"], "a1");
  EXPECT_EQ(j["pattern"], to_string(BraidPattern::A2));
  EXPECT_EQ(j["equal"], false);
  EXPECT_EQ(j["critical_lines_hit"].size(), 1u);
}

TEST(Json, Polytope) {
  RootSystem a2("A2");
  const auto mp = moment_polytope(a2, cr(a2, {-1, -1}));
  const Json j = to_json(mp, {});
  EXPECT_EQ(j["vertices"].size(), mp.vertices.size());
  EXPECT_TRUE(j["gaps"].empty());
  EXPECT_EQ(j["equalities"].size(), 1u);
}

}  // namespace
}  // namespace affgr
