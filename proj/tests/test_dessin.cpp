#include <gtest/gtest.h>

#include <random>

#include "bring/dessin.hpp"
#include "oracles.hpp"

using bring::CycleType;
using bring::Dessin;
using bring::Permutation;

namespace {

Dessin single_edge() { return bring::new_dessin(Permutation::identity(1), Permutation::identity(1)); }

// Random connected dessin: retry until the pair generates a transitive group.
Dessin random_connected(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Dessin d(oracle::random_perm(n, rng), oracle::random_perm(n, rng));
    if (d.is_connected()) return d;
  }
}

}  // namespace

TEST(DessinBasics, SingleEdge) {
  const auto d = single_edge();
  EXPECT_TRUE(d.is_connected());
  EXPECT_EQ(d.passport().to_string(), "[1] [1] [1]");
  EXPECT_EQ(d.genus(), 0);
}

TEST(DessinBasics, PathWithBlackCentre) {
  const Dessin d(Permutation::parse("(0 1)", 2), Permutation::identity(2));
  EXPECT_TRUE(d.is_connected());
  EXPECT_EQ(d.passport().black, CycleType({2}));
  EXPECT_EQ(d.genus(), 0);
}

TEST(DessinBasics, DisconnectedIsValidButGenusThrows) {
  const Dessin d(Permutation::identity(2), Permutation::identity(2));
  EXPECT_FALSE(d.is_connected());
  EXPECT_EQ(d.components(), 2u);
  EXPECT_THROW(d.genus(), bring::disconnected_dessin);
  EXPECT_THROW(bring::union_with_dual(d), bring::disconnected_dessin);
  EXPECT_THROW(bring::isomorphic(d, d), bring::disconnected_dessin);
  EXPECT_THROW(bring::automorphism_group(d), bring::disconnected_dessin);
}

TEST(DessinBasics, DegreeMismatch) {
  EXPECT_THROW(Dessin(Permutation::identity(2), Permutation::identity(3)), bring::degree_mismatch);
}

TEST(DessinBasics, SigmaInfClosesProduct) {
  const Dessin d(Permutation::parse("(0 1 2)", 4), Permutation::parse("(0 3)(1 2)", 4));
  EXPECT_TRUE((d.sigma0() * d.sigma1() * d.sigma_inf()).is_identity());
}

TEST(Operations, SingleEdgeFixedByRecolorAndDual) {
  EXPECT_EQ(bring::recolor(single_edge()), single_edge());
  EXPECT_EQ(bring::dual(single_edge()), single_edge());
}

TEST(Operations, SubdivideSingleEdge) {
  const auto s = bring::subdivide(single_edge());
  EXPECT_EQ(s.dart_count(), 2u);
  EXPECT_EQ(s.passport().black, CycleType({1, 1}));
  EXPECT_EQ(s.passport().white, CycleType({2}));
  EXPECT_EQ(s.genus(), 0);
}

TEST(Operations, UnionSingleEdge) {
  const auto u = bring::union_with_dual(single_edge());
  EXPECT_EQ(u.dart_count(), 2u);
  EXPECT_EQ(u.passport().black, CycleType({1, 1}));
  EXPECT_EQ(u.passport().white, CycleType({2}));
  EXPECT_EQ(u.genus(), 0);
}

class DessinProperty : public ::testing::TestWithParam<int> {};

TEST_P(DessinProperty, InvolutionsAndInvariants) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_connected(1 + rng() % 10, rng);
    SCOPED_TRACE(bring::to_text(d));
    EXPECT_EQ(bring::recolor(bring::recolor(d)), d);
    EXPECT_EQ(bring::dual(bring::dual(d)), d);
    EXPECT_EQ(bring::mirror(bring::mirror(d)), d);

    EXPECT_EQ(d.genus(), oracle::riemann_hurwitz_genus(d.sigma0(), d.sigma1()));
    const long long chi = d.euler_characteristic();
    EXPECT_EQ(chi % 2, 0);
    EXPECT_LE(chi, 2);

    const auto p = d.passport();
    const auto r = bring::recolor(d).passport();
    EXPECT_EQ(r.black, p.white);
    EXPECT_EQ(r.white, p.black);
    EXPECT_EQ(r.face, p.face);
    const auto q = bring::dual(d).passport();
    EXPECT_EQ(q.black, p.face);
    EXPECT_EQ(q.white, p.white);
    EXPECT_EQ(q.face, p.black);
    EXPECT_EQ(bring::mirror(d).passport(), p);
    EXPECT_EQ(bring::dual(d).genus(), d.genus());
    EXPECT_EQ(bring::recolor(d).genus(), d.genus());
    EXPECT_EQ(bring::mirror(d).genus(), d.genus());

    const auto s = bring::subdivide(d);
    EXPECT_EQ(s.dart_count(), 2 * d.dart_count());
    EXPECT_EQ(s.genus(), d.genus());
    EXPECT_EQ(s.passport().black, p.black + p.white);
    EXPECT_EQ(s.passport().white, CycleType::uniform(2, d.dart_count()));

    const auto u = bring::union_with_dual(d);
    EXPECT_EQ(u.dart_count(), 2 * d.dart_count());
    EXPECT_EQ(u.genus(), d.genus());
    EXPECT_EQ(u.passport().black, p.black + p.face);
    EXPECT_EQ(u.sigma1().cycle_count(), d.sigma1().cycle_count());
  }
}

TEST_P(DessinProperty, IsomorphismFindsRelabelling) {
  std::mt19937_64 rng(100 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_connected(1 + rng() % 12, rng);
    const auto h = oracle::random_perm(d.dart_count(), rng);
    const Dessin e(d.sigma0().conjugate_by(h), d.sigma1().conjugate_by(h));
    const auto found = bring::isomorphic(d, e);
    ASSERT_TRUE(found);
    EXPECT_TRUE(bring::is_isomorphism(d, e, found->map));
    EXPECT_FALSE(found->mirrored);
    const auto g = bring::automorphism_group(d);
    EXPECT_EQ(d.dart_count() % g.order(), 0u);
    EXPECT_TRUE(bring::acts_freely(g));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DessinProperty, ::testing::Values(1, 2, 3));

TEST(Isomorphism, IdentityOnSelf) {
  const Dessin d(Permutation::parse("(0 1 2)", 3), Permutation::parse("(0 1)", 3));
  const auto h = bring::isomorphic(d, d);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->map.is_identity());
}

TEST(Isomorphism, RejectsDifferentPassport) {
  const Dessin a(Permutation::parse("(0 1 2)", 3), Permutation::identity(3));
  const Dessin b(Permutation::parse("(0 1)", 3), Permutation::parse("(1 2)", 3));
  EXPECT_FALSE(bring::isomorphic(a, b));
}

TEST(Isomorphism, ChiralPairNeedsMirror) {
  // Search for a dessin that is not isomorphic to its own mirror.
  std::mt19937_64 rng(5);
  bool found_chiral = false;
  for (int trial = 0; trial < 200 && !found_chiral; ++trial) {
    const auto d = random_connected(7, rng);
    if (bring::isomorphic(d, bring::mirror(d))) continue;
    found_chiral = true;
    const auto h = bring::isomorphic_up_to_mirror(bring::mirror(d), d);
    ASSERT_TRUE(h);
    EXPECT_TRUE(h->mirrored);
    EXPECT_TRUE(bring::is_isomorphism(bring::mirror(d), bring::mirror(d), h->map));
  }
  EXPECT_TRUE(found_chiral);
}

TEST(Automorphisms, SingleEdgeIsTrivial) { EXPECT_EQ(bring::automorphism_group(single_edge()).order(), 1u); }

TEST(TextFormat, RoundTrip) {
  const Dessin d(Permutation::parse("(0 1 2)(3 4)", 5), Permutation::parse("(0 3)(1 4)", 5));
  EXPECT_EQ(bring::to_text(d), "darts: 5\nsigma0: (0 1 2)(3 4)\nsigma1: (0 3)(1 4)\n");
  EXPECT_EQ(bring::parse_dessin(bring::to_text(d)), d);
  EXPECT_THROW(bring::parse_dessin("darts: 2\nsigma1: ()\n"), std::invalid_argument);
}

TEST(DotFormat, CountsNodesAndEdges) {
  const Dessin d(Permutation::parse("(0 1 2)", 3), Permutation::identity(3));
  const auto dot = bring::to_dot(d, "g");
  EXPECT_EQ(dot.rfind("graph g {", 0), 0u);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
  EXPECT_EQ(edges, 3u);
  EXPECT_NE(dot.find("b0 -- w2 [dart=2, bpos=2, wpos=0]"), std::string::npos);
}
