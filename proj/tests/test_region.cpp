#include <gtest/gtest.h>

#include <cmath>

#include "e6count/region.hpp"

using namespace e6;

namespace {
// 1 + int_0^1 sqrt(1 - u^3) du, 30-digit quadrature.
constexpr double kG3AtOne = 1.84130926319527255670501144743;
// Frozen values of the two omega_inf routes and the literal diagnostic.
constexpr double kOmegaInf = 35.714508852742;
constexpr double kOmegaLiteral = 29.6101850484;
constexpr double kG3AtHalf = 2.392280768546;
}  // namespace

TEST(G1, Examples) {
  EXPECT_DOUBLE_EQ(g1(1.0), -1.0);
  EXPECT_NEAR(g1(std::sqrt(0.5)), -std::cbrt(3.0), 1e-12);
  EXPECT_THROW(g1(0.0), std::domain_error);
  EXPECT_THROW(g1(1.5), std::domain_error);
}

// For small v the min is 1 + 1/v^2, so g1(v) ~ -v^{-2/3}.
TEST(G1, SmallVAsymptote) {
  for (double v : {1e-3, 1e-5, 1e-7}) EXPECT_NEAR(g1(v) / -std::pow(v, -2.0 / 3.0), 1.0, 1e-6);
}

TEST(G2, Examples) {
  for (double v : {0.1, 0.5, 1.0}) EXPECT_EQ(g2(1.0, v), 0.0);
  EXPECT_DOUBLE_EQ(g2(0.0, 0.5), 1.0);
  EXPECT_NEAR(g2(g1(0.5), 0.5), 0.0, 1e-12);
  EXPECT_NEAR(g2(-1.1, 0.4), 0.951435283454235506530660659595, 1e-12);
  EXPECT_EQ(g2(2.0, 0.5), 0.0);
  EXPECT_EQ(g2(g1(0.5) - 1.0, 0.5), 0.0);
}

TEST(G2, VanishesOnLowerEdge) {
  for (int i = 1; i <= 200; ++i) {
    const double v = std::sqrt(0.5) * i / 200.0;
    EXPECT_NEAR(g2(g1(v), v), 0.0, 1e-9) << v;
  }
}

TEST(G2, SplitsIntoG22MinusG21) {
  for (double v : {0.3, 0.7, 1.0})
    for (double u : {-1.5, -1.0, -0.3, 0.0, 0.8})
      if (u >= g1(v)) EXPECT_NEAR(g2(u, v), g22(u, v) - g21(u, v), 1e-12);
}

TEST(G2Numeric, Examples) {
  EXPECT_NEAR(g2_numeric(0.0, 0.5), 1.0, 1e-9);
  EXPECT_NEAR(g2_numeric(-1.1, 0.4), g2(-1.1, 0.4), 1e-9);
  EXPECT_NEAR(g2_numeric(0.5, 1.0), 0.935414346693485346395937183079, 1e-9);
}

TEST(G2Numeric, GridAgreesWithClosedForm) {
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double v = i / 100.0;
    const double lo = g1(v);
    for (int j = 0; j < 100; ++j) {
      const double u = lo + (1.0 - lo) * j / 99.0;
      worst = std::max(worst, std::fabs(g2_numeric(u, v) - g2(u, v)));
    }
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(G2Breakpoints, SortedInsideRange) {
  for (double v : {0.05, 0.5, 0.75, 1.0}) {
    const auto c = g2_breakpoints(v);
    ASSERT_GE(c.size(), 2u);
    EXPECT_DOUBLE_EQ(c.front(), g1(v));
    EXPECT_DOUBLE_EQ(c.back(), 1.0);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  }
}

TEST(G3, Examples) {
  EXPECT_NEAR(g3(1.0), kG3AtOne, 1e-9);
  EXPECT_LT(std::fabs(g3(1.0) - g3(0.999)), 1e-2);
  EXPECT_NEAR(g3(0.5), kG3AtHalf, 1e-9);
}

TEST(G3, StableForTinyArguments) {
  // g3 is linear in a^{1/3} near 0 with slope -1.8.
  const double a = g3(1e-9), b = g3(1e-12);
  EXPECT_GT(b, a);
  EXPECT_NEAR(b - a, 1.8e-3, 1e-5);
}

TEST(IntegralD1, FundamentalTheorem) {
  for (double v : {0.05, 0.3, 0.5, 0.7, 0.8, 0.9, 1.0}) {
    EXPECT_NEAR(integral_D1_g2(v), -g2(g1(v), v), 1e-5) << v;
    EXPECT_LE(integral_D1_g2(v, true), 10.0);
  }
}

TEST(OmegaInf, RoutesAgree) {
  const double a = omega_inf_3d();
  const double b = omega_inf_g3();
  EXPECT_GT(a, 12.0 * g3(1.0) * 0.5);
  EXPECT_NEAR(a, kOmegaInf, 1e-8);
  EXPECT_NEAR(b, kOmegaInf, 1e-7);
  EXPECT_LE(std::fabs(a - b) / a, 1e-3);
}

TEST(OmegaInf, ToleranceStability) {
  const double a = omega_inf_g3(1e-4), b = omega_inf_g3(1e-5);
  EXPECT_LE(std::fabs(a - b) / b, 1e-4);
  EXPECT_LE(std::fabs(omega_inf_3d(1e-6) - omega_inf_3d(1e-10)) / kOmegaInf, 1e-4);
}

TEST(OmegaInf, LiteralDiagnostic) { EXPECT_NEAR(omega_inf_g3_literal(), kOmegaLiteral, 1e-7); }

TEST(RegionParams, Examples) {
  const XiVector ones{1, 1, 1, 1, 1, 1, 1};
  auto r = region_params(ones, 64);
  EXPECT_NEAR(r.alpha, 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(r.X1, 4.0, 1e-12);
  EXPECT_NEAR(r.X2, 8.0, 1e-12);
  r = region_params(ones, 1);
  EXPECT_DOUBLE_EQ(r.alpha, 1.0);
  EXPECT_DOUBLE_EQ(r.X1, 1.0);
  EXPECT_DOUBLE_EQ(r.X2, 1.0);
  r = region_params({1, 2, 1, 1, 1, 1, 1}, 64);
  EXPECT_NEAR(r.alpha, std::pow(2.0, 1.5) / 8.0, 1e-12);
  EXPECT_NEAR(r.X2, 8.0 / std::sqrt(2.0), 1e-12);
}

TEST(RegionParams, HeightCondition) {
  EXPECT_THROW(region_params({1, 2, 1, 1, 1, 1, 1}, 7), OutOfRegion);
  EXPECT_NO_THROW(region_params({1, 2, 1, 1, 1, 1, 1}, 8));
  EXPECT_THROW(region_params({1, 0, 1, 1, 1, 1, 1}, 8), std::domain_error);
}
