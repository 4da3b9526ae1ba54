// The conjectural leading constant alpha * beta * omega_inf * prod_p (...),
// its ingredients, and the comparison of counts against c B (log B)^6.
#pragma once

#include <vector>

#include "e6count/arith.hpp"
#include "e6count/surface.hpp"

namespace e6 {

/// 1 / (6! * prod lambda_i) = 1/6220800.
Rational alpha_const();

/// The split surface has trivial Brauer group contribution.
inline constexpr int kBeta = 1;

/// 1 + 7/p + 1/p^2.
Rational omega_p(u64 p);

struct EulerProduct {
  u64 prime_limit = 0;
  /// Partial product over p <= P times the prime-zeta estimate of the p > P tail.
  long double value = 0;
  /// Bound on |value - full product|.
  long double tail_bound = 0;
  /// The plain partial product over p <= P and a bound on its missing tail.
  long double raw_partial = 0;
  long double raw_tail_bound = 0;
};

/// prod_p (1 - 1/p)^7 (1 + 7/p + 1/p^2); P >= 100.
EulerProduct euler_product(u64 prime_limit);

struct ConstantReport {
  Rational alpha;
  int beta = kBeta;
  double omega_inf = 0;          // 12 int g3(v^3) dv
  double omega_inf_3d = 0;       // the same volume, other route
  double omega_inf_literal = 0;  // 12 int g3(v) dv, diagnostic
  double omega_tolerance = 0;
  EulerProduct euler;
  double leading_coeff = 0;  // alpha beta omega_inf prod_p
};

ConstantReport leading_coefficient(u64 prime_limit = 100'000, double omega_tol = 1e-7);

struct FitRow {
  i64 bound = 0;
  i64 total = 0;
  double predicted = 0;  // c B (log B)^6
  double ratio = 0;      // total / predicted
  i64 e_count = 0;
  double main_term_half = 0;  // main_term_sum(B) / 2
};

/// One row per report, sorted by B. Non-asymptotic: the lower-order
/// coefficients of the degree-6 polynomial are unknown. Needs >= 2 reports.
std::vector<FitRow> fit_report(std::vector<CountReport> reports, double leading_coeff,
                               bool with_main_term = true);

}  // namespace e6
