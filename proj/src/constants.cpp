#include "e6count/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "e6count/region.hpp"

namespace e6 {

namespace {

// Roots of y^2 - 7y + 1, so 1 + 7x + x^2 = (1 + r1 x)(1 + r2 x).
const long double kR1 = (7.0L + std::sqrt(45.0L)) / 2.0L;
const long double kR2 = (7.0L - std::sqrt(45.0L)) / 2.0L;

// log of the local factor is sum_{k>=2} a_k p^{-k}.
long double log_coefficient(int k) {
  const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
  return (-7.0L + sign * (std::pow(kR1, k) + std::pow(kR2, k))) / k;
}

// sum_{p > P} p^{-k} <= P^{1-k}/(k-1) + P^{-k}.
long double prime_tail_bound(long double P, int k) {
  return std::pow(P, 1.0L - k) / (k - 1) + std::pow(P, -static_cast<long double>(k));
}

long double local_factor_ld(u64 p) {
  const long double x = 1.0L / static_cast<long double>(p);
  return std::pow(1.0L - x, 7) * (1.0L + 7.0L * x + x * x);
}

}  // namespace

Rational alpha_const() {
  i64 denom = 720;
  for (int l : monomials::kLambda.n) denom *= l;
  return Rational(1, denom);
}

Rational omega_p(u64 p) {
  if (!is_prime(p)) throw std::domain_error("omega_p: p must be prime");
  const i64 q = static_cast<i64>(p);
  return Rational(q * q + 7 * q + 1, q * q);
}

EulerProduct euler_product(u64 prime_limit) {
  if (prime_limit < 100) throw std::domain_error("euler_product: prime limit must be >= 100");
  EulerProduct r;
  r.prime_limit = prime_limit;
  const auto primes = primes_up_to(prime_limit);
  long double log_partial = 0.0L;
  for (u64 p : primes) log_partial += std::log(local_factor_ld(p));
  r.raw_partial = std::exp(log_partial);

  const long double P = static_cast<long double>(prime_limit);
  // Tail: sum_k a_k (P(k) - sum_{p <= P} p^{-k}) until the terms are negligible.
  long double log_tail = 0.0L;
  int k = 2;
  for (;; ++k) {
    if (std::fabs(log_coefficient(k)) * prime_tail_bound(P, k) < 1e-20L) break;
    long double head = 0.0L;
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) head += std::pow(static_cast<long double>(*it), -k);
    log_tail += log_coefficient(k) * (prime_zeta(k) - head);
  }
  long double neglected = 0.0L;
  for (int j = k; j < k + 60; ++j) neglected += std::fabs(log_coefficient(j)) * prime_tail_bound(P, j);
  // Rounding of the prime-zeta values, double-precision zeta inputs.
  long double rounding = 0.0L;
  for (int j = 2; j < k; ++j) rounding += std::fabs(log_coefficient(j)) * 1e-15L;
  r.value = r.raw_partial * std::exp(log_tail);
  r.tail_bound = r.value * (std::expm1(neglected + rounding));

  long double raw_log_bound = 0.0L;
  for (int j = 2; j < 80; ++j) raw_log_bound += std::fabs(log_coefficient(j)) * prime_tail_bound(P, j);
  r.raw_tail_bound = r.raw_partial * std::expm1(raw_log_bound);
  return r;
}

ConstantReport leading_coefficient(u64 prime_limit, double omega_tol) {
  if (!(omega_tol > 0.0 && omega_tol < 1e-2)) throw std::domain_error("leading_coefficient: bad tolerance");
  ConstantReport r;
  r.alpha = alpha_const();
  r.omega_tolerance = omega_tol;
  r.omega_inf = omega_inf_g3(omega_tol);
  r.omega_inf_3d = omega_inf_3d(std::min(omega_tol, 1e-10));
  r.omega_inf_literal = omega_inf_g3_literal(omega_tol);
  r.euler = euler_product(prime_limit);
  r.leading_coeff = boost::rational_cast<double>(r.alpha) * r.beta * r.omega_inf *
                    static_cast<double>(r.euler.value);
  return r;
}

std::vector<FitRow> fit_report(std::vector<CountReport> reports, double leading_coeff, bool with_main_term) {
  if (reports.size() < 2) throw std::invalid_argument("fit_report: need at least two counts");
  std::sort(reports.begin(), reports.end(),
            [](const CountReport& a, const CountReport& b) { return a.bound < b.bound; });
  std::vector<FitRow> rows;
  for (const auto& rep : reports) {
    FitRow row;
    row.bound = rep.bound;
    row.total = rep.total;
    row.e_count = rep.e_count;
    const double B = static_cast<double>(rep.bound);
    row.predicted = leading_coeff * B * std::pow(std::log(B), 6);
    row.ratio = row.predicted > 0 ? static_cast<double>(rep.total) / row.predicted
                                  : std::numeric_limits<double>::infinity();
    if (with_main_term) row.main_term_half = main_term_sum(rep.bound) / 2.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace e6
