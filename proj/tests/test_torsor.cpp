#include <gtest/gtest.h>

#include "e6count/arith.hpp"
#include "e6count/torsor.hpp"

using namespace e6;

namespace {

TorsorPoint make(XiVector xi, i64 tau1, i64 tau2, i64 tauL, Scheme s = Scheme::T1) {
  TorsorPoint t;
  t.xi = xi;
  t.tau1 = tau1;
  t.tau2 = tau2;
  t.tauL = tauL;
  t.scheme = s;
  return t;
}

const XiVector kOnes{1, 1, 1, 1, 1, 1, 1};

}  // namespace

TEST(Psi, Examples) {
  EXPECT_EQ(psi(make(kOnes, 1, 1, -2)), (SurfacePoint{1, -2, 1, 1}));
  EXPECT_EQ(psi(make({1, 2, 1, 1, 1, 1, 1}, 1, 1, -3)), (SurfacePoint{4, -3, 8, 4}));
  EXPECT_EQ(psi(make(kOnes, 2, 1, -9)), (SurfacePoint{1, -9, 1, 2}));
}

TEST(Psi, RejectsOffTorsor) {
  EXPECT_THROW(psi(make(kOnes, 1, 1, -1)), NotOnTorsor);
  EXPECT_EQ(torsor_residual(make(kOnes, 1, 1, -1)), 1);
}

TEST(LiftT1, Examples) {
  EXPECT_EQ(lift_T1({1, -2, 1, 1}), make(kOnes, 1, 1, -2));
  EXPECT_EQ(lift_T1({4, -3, 8, 4}), make({1, 2, 1, 1, 1, 1, 1}, 1, 1, -3));
  EXPECT_EQ(lift_T1({1, -9, 1, 2}), make(kOnes, 2, 1, -9));
}

TEST(LiftT1, RejectsPointsOutsideE) {
  EXPECT_THROW(lift_T1({1, -1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(lift_T1({0, 1, 1, -1}), std::invalid_argument);
  EXPECT_THROW(lift_T1({1, 1, 1, 1}), std::invalid_argument);
}

TEST(PhiRule, Examples) {
  EXPECT_EQ(phi_rule({0, 0, 1, 2}), (PrimeExponents{3, 0, 0, 0}));
  EXPECT_EQ(phi_rule({0, 1, 0, 1}), (PrimeExponents{2, 0, 0, 0}));
  EXPECT_EQ(phi_inverse_rule({3, 0, 0, 0}), (PrimeExponents{0, 0, 1, 2}));
  EXPECT_EQ(phi_inverse_rule({2, 0, 0, 0}), (PrimeExponents{0, 1, 0, 1}));
  EXPECT_EQ(phi_rule({0, 0, 0, 0}), (PrimeExponents{0, 0, 0, 0}));
}

TEST(PhiRule, InverseOnSmallExponents) {
  // T1 makes xi1 xi3 squarefree: at most one of m1, m3 is 1.
  for (int m1 = 0; m1 <= 1; ++m1)
    for (int m3 = 0; m3 + m1 <= 1; ++m3)
      for (int m6 = 0; m6 <= 8; ++m6)
        for (int n1 = 0; n1 <= 8; ++n1) {
          const PrimeExponents e{m1, m3, m6, n1};
          EXPECT_EQ(phi_inverse_rule(phi_rule(e)), e) << m1 << m3 << m6 << n1;
        }
}

TEST(PhiMaps, AllOnesUnchanged) {
  const auto t1 = make(kOnes, 1, 1, -2);
  auto t2 = phi_T1_to_T2(t1);
  EXPECT_EQ(t2.scheme, Scheme::T2);
  EXPECT_EQ(t2.xi, kOnes);
  EXPECT_EQ(phi_T2_to_T1(t2), t1);
}

TEST(PhiMaps, SchemeChecks) {
  EXPECT_THROW(phi_T1_to_T2(make(kOnes, 1, 1, -2, Scheme::T2)), NotT1);
  EXPECT_THROW(phi_T2_to_T1(make(kOnes, 1, 1, -2, Scheme::T1)), NotT2);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(make({1, 2, 1, 1, 1, 1, 1}, 1, 1, -3, Scheme::T2)));
  const auto bad = validate(make({1, 4, 1, 1, 1, 1, 1}, 1, 1, -5, Scheme::T2));
  EXPECT_FALSE(bad.ok());
  const auto off = validate(make(kOnes, 1, 1, -1, Scheme::T2));
  EXPECT_FALSE(off.ok());
  EXPECT_FALSE(off.violations.empty());
}

// psi o Phi o lift_T1 = id on E(500); lifted coordinates validate as T1
// and their images as T2.
TEST(RoundTrip, AllOfE500) {
  const auto pts = enumerate_E(500);
  ASSERT_EQ(pts.size(), 5073u);
  for (const auto& p : pts) {
    const auto t1 = lift_T1(p);
    ASSERT_TRUE(validate(t1)) << to_string(p);
    const auto t2 = phi_T1_to_T2(t1);
    ASSERT_TRUE(validate(t2)) << to_string(p);
    ASSERT_EQ(psi(t2), p);
    ASSERT_EQ(phi_T2_to_T1(t2), t1);
  }
}

TEST(RoundTrip, NontrivialTransferOccurs) {
  int changed = 0;
  for (const auto& p : enumerate_E(500)) {
    const auto t1 = lift_T1(p);
    const auto t2 = phi_T1_to_T2(t1);
    if (t2.xi != t1.xi) ++changed;
  }
  EXPECT_GT(changed, 0);
}
