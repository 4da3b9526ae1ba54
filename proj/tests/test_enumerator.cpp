#include <gtest/gtest.h>

#include <mutex>
#include <set>

#include "e6count/enumerator.hpp"

using namespace e6;

namespace {

std::vector<u64> brute_sqrt(i64 c, u64 m) {
  std::vector<u64> r;
  const i64 cm = ((c % static_cast<i64>(m)) + static_cast<i64>(m)) % static_cast<i64>(m);
  for (u64 x = 0; x < m; ++x)
    if (static_cast<i64>((x * x) % m) == cm) r.push_back(x);
  return r;
}

}  // namespace

TEST(SqrtModPrimePower, Examples) {
  EXPECT_EQ(sqrt_mod_prime_power(2, 7, 1), (std::vector<u64>{3, 4}));
  EXPECT_EQ(sqrt_mod_prime_power(1, 2, 3), (std::vector<u64>{1, 3, 5, 7}));
  EXPECT_TRUE(sqrt_mod_prime_power(3, 5, 1).empty());
  EXPECT_THROW(sqrt_mod_prime_power(10, 5, 2), NonUnitInput);
}

TEST(SqrtModPrimePower, MatchesBruteForce) {
  for (u64 p : {2, 3, 5, 7, 11, 13})
    for (int k = 1; k <= 6; ++k) {
      u64 m = 1;
      for (int i = 0; i < k; ++i) m *= p;
      if (m > 5000) break;
      for (i64 c = -40; c <= 40; ++c) {
        if (c % static_cast<i64>(p) == 0) continue;
        EXPECT_EQ(sqrt_mod_prime_power(c, p, k), brute_sqrt(c, m)) << c << " " << p << "^" << k;
      }
    }
}

TEST(SolveTau2, Examples) {
  const XiVector ones{1, 1, 1, 1, 1, 1, 1};
  EXPECT_EQ(solve_tau2_congruence(ones, 1, 1), (std::vector<i64>{0}));
  EXPECT_TRUE(solve_tau2_congruence({1, 1, 1, 2, 1, 1, 1}, 1, 8).empty());
  EXPECT_EQ(solve_tau2_congruence({1, 1, 1, 1, 1, 5, 1}, 1, 5), (std::vector<i64>{2, 3}));
  EXPECT_THROW(solve_tau2_congruence(ones, 5, 5), PreconditionViolated);
}

TEST(SolveTau2, MatchesBruteForce) {
  for (i64 q0 : {3, 4, 9, 12, 25, 36, 72, 200})
    for (i64 xi1 : {1, 5})
      for (i64 xi2 : {1, 7})
        for (i64 tau1 = -6; tau1 <= 6; ++tau1) {
          if (tau1 == 0 || std::gcd(tau1 * xi1 * xi2, q0) != 1) continue;
          const XiVector xi{xi1, xi2, 1, 1, 1, 1, 1};
          std::vector<i64> want;
          for (i64 t = 0; t < q0; ++t) {
            const i64 lhs = xi2 * t * t + tau1 * tau1 * tau1 * xi1 * xi1;
            if (((lhs % q0) + q0) % q0 == 0) want.push_back(t);
          }
          EXPECT_EQ(solve_tau2_congruence(xi, tau1, q0), want);
        }
}

TEST(CountETorsor, Examples) {
  EXPECT_EQ(count_E_torsor(1), 0);
  EXPECT_EQ(count_E_torsor(2), 1);
  const auto n = static_cast<i64>(enumerate_E(100).size());
  EXPECT_EQ(count_E_torsor(100, Strategy::direct), n);
  EXPECT_EQ(count_E_torsor(100, Strategy::residue), n);
}

TEST(CountTotal, Examples) {
  EXPECT_EQ(count_total(1).total, 6);
  EXPECT_EQ(count_total(2).total, 8);
  EXPECT_EQ(count_total(1000).total, count_naive(1000).total);
}

TEST(CountTotal, OracleSweep) {
  for (i64 B = 1; B <= 200; ++B) {
    const i64 naive = count_naive(B).total;
    ASSERT_EQ(count_total(B, Strategy::direct).total, naive) << B;
    ASSERT_EQ(count_total(B, Strategy::residue).total, naive) << B;
  }
}

TEST(CountTotal, ReportFields) {
  const auto r = count_total(300, Strategy::residue);
  EXPECT_EQ(r.method, CountMethod::torsor_residue);
  EXPECT_EQ(r.total, 2 * r.e_count + r.family_total());
  EXPECT_EQ(count_total(300, Strategy::automatic).method, CountMethod::torsor_auto);
}

TEST(EnumerateTorsor, VisitedPointsMatchNaive) {
  const i64 B = 700;
  std::mutex mu;
  std::set<SurfacePoint> seen;
  EnumerationOptions opt;
  opt.threads = 2;
  opt.visit = [&](const TorsorPoint& t) {
    ASSERT_TRUE(validate(t));
    ASSERT_EQ(t.scheme, Scheme::T2);
    const auto p = psi(t);
    std::lock_guard lock(mu);
    ASSERT_TRUE(seen.insert(p).second) << to_string(t);
  };
  const auto stats = enumerate_E_torsor(B, opt);
  const auto naive = enumerate_E(B);
  EXPECT_EQ(stats.e_count, static_cast<i64>(naive.size()));
  EXPECT_EQ(seen, std::set<SurfacePoint>(naive.begin(), naive.end()));
  EXPECT_GE(stats.tau2_candidates, stats.e_count);
}

TEST(EnumerateTorsor, SlackDoesNotChangeCount) {
  EnumerationOptions a, b;
  b.slack = 5;
  EXPECT_EQ(enumerate_E_torsor(2000, a).e_count, enumerate_E_torsor(2000, b).e_count);
}

TEST(EnumerateTorsor, ThreadCountInvariant) {
  EXPECT_EQ(count_E_torsor(5000, Strategy::residue, 1), count_E_torsor(5000, Strategy::residue, 4));
  EXPECT_EQ(count_E_torsor(5000, Strategy::direct, 3), count_E_torsor(5000, Strategy::residue, 1));
}

TEST(CountTotal, FrozenLargeBound) {
  const auto r = count_total(100000, Strategy::residue);
  EXPECT_EQ(r.e_count, 3400014);
  EXPECT_EQ(r.total, 6926838);
}
