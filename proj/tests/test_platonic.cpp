#include <gtest/gtest.h>

#include "bring/platonic.hpp"
#include "oracles.hpp"

using bring::CycleType;
using bring::GroupKind;

TEST(Icosahedron, Passport) {
  const auto d = bring::build_icosahedron();
  EXPECT_EQ(d.dart_count(), 60u);
  EXPECT_EQ(d.passport().black, CycleType::uniform(5, 12));
  EXPECT_EQ(d.passport().white, CycleType::uniform(2, 30));
  EXPECT_EQ(d.passport().face, CycleType::uniform(3, 20));
  EXPECT_EQ(d.genus(), 0);
  EXPECT_EQ(oracle::riemann_hurwitz_genus(d.sigma0(), d.sigma1()), 0);
}

TEST(Icosahedron, RotationTableIsAnEmbedding) {
  // Each neighbour appears once per row and adjacency is symmetric.
  const auto& t = bring::detail::kIcosahedronRotation;
  for (std::size_t v = 0; v < 12; ++v)
    for (auto w : t[v]) {
      EXPECT_NE(w, v);
      EXPECT_NE(std::find(t[w].begin(), t[w].end(), v), t[w].end());
    }
}

TEST(Icosahedron, RotationGroupOrderSixty) {
  const auto g = bring::automorphism_group(bring::build_icosahedron());
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(bring::identify_group(g).kind, GroupKind::A5);
}

TEST(Icosahedron, SubdivisionKeepsGenus) {
  const auto s = bring::subdivide(bring::build_icosahedron());
  EXPECT_EQ(s.dart_count(), 120u);
  EXPECT_EQ(s.genus(), 0);
}

TEST(I4, PassportAndGenus) {
  const auto d = bring::build_i4();
  const auto ico = bring::build_icosahedron();
  EXPECT_EQ(d.sigma1(), ico.sigma1());
  EXPECT_EQ(d.sigma0(), ico.sigma0().pow(2));
  EXPECT_EQ(d.passport().to_string(), "[5^12] [2^30] [5^12]");
  EXPECT_EQ(d.genus(), 4);
}

TEST(I4, AutomorphismGroupIsA5) {
  const auto g = bring::automorphism_group(bring::build_i4());
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(bring::identify_group(g).kind, GroupKind::A5);
  EXPECT_TRUE(bring::acts_freely(g));
}

TEST(I4, SelfDualAndMirrorSymmetric) {
  const auto d = bring::build_i4();
  EXPECT_EQ(bring::dual(bring::dual(d)), d);
  const auto h = bring::isomorphic(d, bring::dual(d));
  ASSERT_TRUE(h);
  EXPECT_TRUE(bring::is_isomorphism(d, bring::dual(d), h->map));
  EXPECT_TRUE(bring::isomorphic(d, bring::mirror(d)));
  EXPECT_FALSE(bring::isomorphic(d, bring::build_icosahedron()));
}

TEST(I4, SubdivisionWhiteType) {
  const auto s = bring::subdivide(bring::build_i4());
  EXPECT_EQ(s.genus(), 4);
  EXPECT_EQ(s.passport().white, CycleType::uniform(2, 60));
}

TEST(Union, PassportAndGroup) {
  const auto u = bring::union_with_dual(bring::build_i4());
  EXPECT_EQ(u.dart_count(), 120u);
  EXPECT_EQ(u.passport().to_string(), "[5^24] [4^30] [2^60]");
  EXPECT_EQ(u.genus(), 4);
  const auto g = bring::automorphism_group(u);
  EXPECT_EQ(g.order(), 120u);
  EXPECT_EQ(bring::identify_group(g).kind, GroupKind::S5);
}

TEST(J, PassportMatchesRecoloredDual) {
  const auto j = bring::build_j();
  EXPECT_EQ(j.passport().to_string(), "[4^30] [2^60] [5^24]");
  EXPECT_EQ(j.genus(), 4);
}
