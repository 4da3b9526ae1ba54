// Number-theoretic kernels: factorization, multiplicative functions, coprime
// pair counts, cubic exponential sums, the sawtooth congruence count, the
// densities theta and Delta, local Euler factors and real zeta values.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "e6count/integer.hpp"
#include "e6count/xi.hpp"

namespace e6 {

using Rational = boost::rational<i64>;

struct PrimePower {
  u64 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by prime. The product of prime^exponent
/// reconstructs the original integer; 1 factors to an empty list.
struct Factorization {
  std::vector<PrimePower> factors;

  u64 value() const;
  bool squarefree() const;
};

Factorization factorize(u64 n);
bool is_prime(u64 n);

/// Primes up to and including n (simple sieve).
std::vector<u64> primes_up_to(u64 n);

/// Moebius values mu(0..n) with mu(0) = 0.
std::vector<int> mobius_table(u64 n);

int mobius(u64 n);
bool is_squarefree(u64 n);
/// prod_{p | n} (1 - 1/p)
Rational phi_star(u64 n);
/// prod_{p | n} (1 + 1/p)^{-1}
Rational phi_prime(u64 n);

/// #{(a, b) : 1 <= a, b <= y, gcd(a, b) = 1}.
i64 coprime_pairs(i64 y);

// Cubic exponential sums e_q(a x^3 + b x^2): `S` runs over units mod q,
// `T` over all residues.
std::complex<double> exp_sum_S(i64 a, i64 b, i64 q);
std::complex<double> exp_sum_T(i64 a, i64 b, i64 q);

/// psi(t) = {t} - 1/2
double sawtooth(double t);

/// #{t1 < n <= t2 : n = a mod q}, exact.
i64 count_in_class(double t1, double t2, i64 a, i64 q);

/// psi((t1 - a)/q) - psi((t2 - a)/q); count_in_class = (t2 - t1)/q + r_term.
double r_term(double t1, double t2, i64 a, i64 q);

/// Coprimality weight of xi; zero unless xi lies in the admissible set F.
Rational theta(const XiVector& xi);

/// Membership in F: mu^2(xi2 xi3 xi4 xi5) = 1, gcd(xi1, xi2 xiL xi4 xi5) = 1,
/// gcd(xiL, xi2 xi3) = 1.
bool in_admissible_set(const XiVector& xi);

/// Delta(n) = n^{1/6} sum_{xi^lambda = n} theta(xi) / prod xi.
double delta(i64 n);

/// Exact inner sum of delta(n): sum_{xi^lambda = n} theta(xi) / prod xi.
Rational delta_weight(i64 n);

/// Delta(1..n_max), built by a single enumeration over every xi with
/// xi^lambda <= n_max. Index 0 is unused.
std::vector<double> delta_table(i64 n_max);

/// 2 B^{5/6} sum_{n <= B} Delta(n) g3(alpha_n), alpha_n = (n/B)^{1/2}.
double main_term_sum(i64 bound);

/// Closed form of the p-local factor F_p(s + 1/6), s > 0.
double local_factor(u64 p, double s);

/// The same factor as a truncated sum of theta(xi)/prod xi_i^{lambda_i s + 1}
/// over xi supported on powers of p with every exponent <= cap.
double local_factor_brute(u64 p, double s, int cap);

/// Riemann zeta for real s > 1 (Euler-Maclaurin, absolute error < 1e-12).
double zeta_real(double s);
/// zeta(s) - 1 without cancellation for large s.
double zeta_minus_one(double s);

/// E1(s + 1) = zeta(2s+1) zeta(3s+1)^2 zeta(4s+1)^2 zeta(5s+1) zeta(6s+1).
double E1_shifted(double s);
/// E2(s + 1) = zeta(13s+3)^5 zeta(14s+3)^2 /
///   (zeta(7s+2)^4 zeta(8s+2)^4 zeta(9s+2)^2 zeta(10s+2) zeta(19s+4)^2).
double E2_shifted(double s);

/// Prime zeta P(k) = sum_p p^{-k}, k >= 2.
long double prime_zeta(int k);

}  // namespace e6
