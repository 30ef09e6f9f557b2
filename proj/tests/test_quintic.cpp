#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "bring/quintic.hpp"

using bring::cplx;
using bring::QuinticParams;

namespace {

// Direct evaluation, independent of QuinticParams::eval.
double residual(const QuinticParams& p, cplx x) {
  cplx v = x;
  for (int i = 0; i < 4; ++i) v *= x;
  return std::abs(v + p.a * x + p.b) / (std::pow(std::abs(x), 5) + std::abs(p.a * x) + std::abs(p.b));
}

bool contains(const bring::Roots5& r, cplx z) {
  for (const auto& x : r)
    if (std::abs(x - z) < 1e-10) return true;
  return false;
}

}  // namespace

TEST(Roots5, FifthRootsOfUnity) {
  const auto r = bring::roots5({0.0, -1.0});
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(contains(r, std::polar(1.0, 2 * std::numbers::pi * k / 5))) << k;
}

TEST(Roots5, ZeroAndFourthRootsOfMinusOne) {
  const auto r = bring::roots5({1.0, 0.0});
  EXPECT_TRUE(contains(r, 0.0));
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(contains(r, std::polar(1.0, std::numbers::pi * (2 * k + 1) / 4))) << k;
}

TEST(Roots5, SortedRealThenImaginary) {
  const auto r = bring::roots5({cplx{0.3, -1.2}, cplx{0.7, 0.1}});
  for (std::size_t i = 1; i < r.size(); ++i)
    EXPECT_TRUE(r[i - 1].real() < r[i].real() ||
                (r[i - 1].real() == r[i].real() && r[i - 1].imag() <= r[i].imag()));
}

TEST(Roots5, RandomResidualsAndDeterminism) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const QuinticParams p{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const auto r = bring::roots5(p);
    for (const auto& x : r) EXPECT_LT(residual(p, x), 1e-10);
    EXPECT_EQ(r, bring::roots5(p));
    // Vieta: the x^4 coefficient vanishes.
    cplx sum = 0;
    double mag = 0;
    for (const auto& x : r) sum += x, mag += std::abs(x);
    EXPECT_LT(std::abs(sum), 1e-10 * (1 + mag));
  }
}

TEST(FValue, SpecialPoints) {
  EXPECT_EQ(bring::f_value({1.0, 0.0}).value, cplx(1.0));
  EXPECT_EQ(bring::f_value({0.0, 1.0}).value, cplx(0.0));
  // 256 a^5 + 3125 b^4 = 0 with b = 1: a^5 = -3125/256.
  const cplx a = std::polar(std::pow(3125.0 / 256.0, 0.2), std::numbers::pi / 5);
  EXPECT_TRUE(bring::f_value({a, 1.0}).infinite);
  EXPECT_THROW(bring::f_value({0.0, 0.0}), std::invalid_argument);
}

TEST(FValue, WeightedInvariance) {
  const QuinticParams p{cplx{0.4, 0.9}, cplx{-1.1, 0.2}};
  const cplx l = std::polar(1.3, 0.7);
  const QuinticParams q{std::pow(l, 4) * p.a, std::pow(l, 5) * p.b};
  EXPECT_LT(std::abs(bring::f_value(p).value - bring::f_value(q).value), 1e-12);
}

TEST(BFromT, Values) {
  EXPECT_EQ(bring::b_from_t(1.0), cplx(0.0));
  const cplx b = bring::b_from_t(0.5);
  EXPECT_NEAR(b.real(), std::pow(256.0 / 3125.0, 0.25), 1e-14);
  EXPECT_NEAR(b.real(), 0.534992243981, 1e-11);
  EXPECT_EQ(b.imag(), 0.0);
  EXPECT_THROW(bring::b_from_t(0.0), std::invalid_argument);
}

TEST(BFromT, RoundTripAllBranches) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 100; ++i) {
    const cplx t{u(rng), u(rng)};
    for (int k = 0; k < 4; ++k) {
      const auto f = bring::f_value({1.0, bring::b_from_t(t, k)});
      ASSERT_FALSE(f.infinite);
      EXPECT_LT(std::abs(f.value - t), 1e-12 * std::max(1.0, std::abs(t) * std::abs(t)));
    }
  }
}

TEST(BFromT, BranchesDifferByPowersOfI) {
  const cplx t{0.3, 0.2};
  const cplx b0 = bring::b_from_t(t, 0);
  EXPECT_LT(std::abs(bring::b_from_t(t, 1) - cplx{0, 1} * b0), 1e-15);
  EXPECT_LT(std::abs(bring::b_from_t(t, 2) + b0), 1e-15);
  EXPECT_LT(std::abs(bring::b_from_t(t, -1) - bring::b_from_t(t, 3)), 1e-15);
}
