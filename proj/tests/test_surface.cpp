#include <gtest/gtest.h>

#include <set>

#include "e6count/arith.hpp"
#include "e6count/surface.hpp"

using namespace e6;

TEST(EvalSurface, Examples) {
  EXPECT_EQ(eval_surface(0, 0, 1, 0), 0);
  EXPECT_EQ(eval_surface(1, -2, 1, 1), 0);
  EXPECT_EQ(eval_surface(4, -3, 8, 4), 0);
  EXPECT_EQ(eval_surface(1, 1, 1, 1), 3);
}

TEST(EvalSurface, NoOverflowAtExtremes) {
  const i64 m = std::numeric_limits<i64>::max();
  const Int256 M = m;
  EXPECT_EQ(eval_surface(m, m, m, m), M * M * M + M * M * M + M * M * M);
}

TEST(Canonicalize, Examples) {
  // [0:0:1:0] has x2 != 0, so it is off the line x2 = x3 = 0.
  EXPECT_EQ(canonicalize(0, 0, 5, 0), (SurfacePoint{0, 0, 1, 0}));
  EXPECT_EQ(canonicalize(-2, 4, -2, -2), (SurfacePoint{1, -2, 1, 1}));
  EXPECT_EQ(canonicalize(8, -6, 16, 8), (SurfacePoint{4, -3, 8, 4}));
}

TEST(Canonicalize, Rejections) {
  auto reason = [](i64 a, i64 b, i64 c, i64 d) {
    try {
      canonicalize(a, b, c, d);
    } catch (const RejectedPoint& e) {
      return e.reason();
    }
    ADD_FAILURE() << "not rejected";
    return Rejection::zero_vector;
  };
  EXPECT_EQ(reason(3, 0, 0, 0), Rejection::on_line);
  EXPECT_EQ(reason(1, 1, 1, 1), Rejection::off_surface);
  EXPECT_EQ(reason(0, 0, 0, 0), Rejection::zero_vector);
}

TEST(Height, Examples) {
  EXPECT_EQ(height({1, -2, 1, 1}), 2);
  EXPECT_EQ(height({4, -3, 8, 4}), 8);
  EXPECT_EQ(height({0, 1, 1, -1}), 1);
}

TEST(EnumerateE, SmallBounds) {
  EXPECT_TRUE(enumerate_E(1).empty());
  const auto e2 = enumerate_E(2);
  ASSERT_EQ(e2.size(), 1u);
  EXPECT_EQ(e2[0], (SurfacePoint{1, -2, 1, 1}));
  const auto e8 = enumerate_E(8);
  EXPECT_TRUE(std::find(e8.begin(), e8.end(), SurfacePoint{4, -3, 8, 4}) != e8.end());
}

TEST(EnumerateE, PointsAreCanonicalAndInE) {
  for (const auto& p : enumerate_E(300)) {
    EXPECT_EQ(eval_surface(p.x0, p.x1, p.x2, p.x3), 0);
    EXPECT_GT(p.x0, 0);
    EXPECT_GT(p.x2, 0);
    EXPECT_NE(p.x1, 0);
    EXPECT_NE(p.x3, 0);
    EXPECT_LE(height(p), 300);
    EXPECT_EQ(canonicalize(p.x0, p.x1, p.x2, p.x3), p);
  }
}

// Brute force over the full box, independent of the scan's x2/x3 structure.
TEST(EnumerateE, MatchesBoxSearch) {
  const i64 B = 40;
  std::set<SurfacePoint> box;
  for (i64 x0 = 1; x0 <= B; ++x0)
    for (i64 x1 = -B; x1 <= B; ++x1)
      for (i64 x2 = 1; x2 <= B; ++x2)
        for (i64 x3 = -B; x3 <= B; ++x3) {
          if (x1 == 0 || x3 == 0) continue;
          if (std::gcd(std::gcd(x0, x1), std::gcd(x2, x3)) != 1) continue;
          if (eval_surface(x0, x1, x2, x3) == 0) box.insert({x0, x1, x2, x3});
        }
  const auto e = enumerate_E(B);
  EXPECT_EQ(std::set<SurfacePoint>(e.begin(), e.end()), box);
}

TEST(EnumerateE, ThreadedVisitorSeesSamePoints) {
  std::mutex mu;
  std::vector<SurfacePoint> seen;
  enumerate_E(
      400,
      [&](const SurfacePoint& p) {
        std::lock_guard lock(mu);
        seen.push_back(p);
      },
      3);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, enumerate_E(400));
}

TEST(CountNaive, Examples) {
  EXPECT_EQ(count_naive(1).total, 6);
  EXPECT_EQ(count_naive(1).e_count, 0);
  EXPECT_EQ(count_naive(2).total, 8);
}

TEST(CountNaive, Invariant) {
  for (i64 B : {1, 7, 50, 333}) {
    const auto r = count_naive(B);
    EXPECT_EQ(r.total, 2 * r.e_count + r.family_total());
    EXPECT_EQ(r.method, CountMethod::naive);
  }
}

// Exhaustive search of |x_i| <= 1 including all families: 7 points of U,
// one of them the excluded [0:0:1:0].
TEST(CountNaive, HeightOneBox) {
  std::set<SurfacePoint> pts;
  for (i64 a = -1; a <= 1; ++a)
    for (i64 b = -1; b <= 1; ++b)
      for (i64 c = -1; c <= 1; ++c)
        for (i64 d = -1; d <= 1; ++d) {
          try {
            pts.insert(canonicalize(a, b, c, d));
          } catch (const RejectedPoint&) {
          }
        }
  EXPECT_EQ(pts.size(), 7u);
  EXPECT_TRUE(pts.count({0, 0, 1, 0}));
}

TEST(CountNaive, Frozen) {
  EXPECT_EQ(count_naive(500).total, 10884);
  EXPECT_EQ(count_naive(1000).total, 27144);
}

TEST(FamilyCounts, Examples) {
  EXPECT_EQ(family_counts(1), (FamilyCounts{2, 2, 2}));
  EXPECT_EQ(family_counts(2), (FamilyCounts{2, 2, 2}));
  EXPECT_EQ(family_counts(4).conic, 2 * coprime_pairs(2));
  EXPECT_EQ(family_counts(4).conic, 6);
}

TEST(FamilyCounts, MatchBruteForce) {
  const i64 B = 30;
  i64 conic = 0, x0zero = 0, x1zero = 0;
  std::set<SurfacePoint> pts;
  for (i64 x0 = -B; x0 <= B; ++x0)
    for (i64 x1 = -B; x1 <= B; ++x1)
      for (i64 x2 = 1; x2 <= B; ++x2)
        for (i64 x3 = -B; x3 <= B; ++x3) {
          if (x0 != 0 && x1 != 0 && x3 != 0) continue;
          if (x0 == 0 && x3 == 0) continue;
          if (eval_surface(x0, x1, x2, x3) != 0) continue;
          if (std::gcd(std::gcd(x0, x1), std::gcd(x2, x3)) != 1) continue;
          if (x3 == 0)
            ++conic;
          else if (x0 == 0)
            ++x0zero;
          else
            ++x1zero;
        }
  EXPECT_EQ(family_counts(B), (FamilyCounts{conic, x0zero, x1zero}));
}

TEST(CountModP, Examples) {
  EXPECT_EQ(count_mod_p(5), 31);
  EXPECT_EQ(count_mod_p(7), 57);
  EXPECT_EQ(count_mod_p(11), 133);
  for (i64 p : {2, 3, 13}) EXPECT_EQ(count_mod_p(p), p * p + p + 1);
}
