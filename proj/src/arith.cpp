#include "e6count/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "e6count/region.hpp"

namespace e6 {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_large(u64 n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  const u64 d = pollard_rho(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

void normalize(std::vector<PrimePower>& f) {
  std::sort(f.begin(), f.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  std::vector<PrimePower> merged;
  for (const auto& pp : f) {
    if (!merged.empty() && merged.back().prime == pp.prime) {
      merged.back().exponent += pp.exponent;
    } else {
      merged.push_back(pp);
    }
  }
  f = std::move(merged);
}

// prod (1 - 1/p) over the given primes.
Rational phi_star_of(std::span<const u64> primes) {
  Rational r(1);
  for (u64 p : primes) r *= Rational(static_cast<i64>(p) - 1, static_cast<i64>(p));
  return r;
}

std::vector<u64> prime_support(u64 n) {
  std::vector<u64> out;
  for (const auto& pp : factorize(n).factors) out.push_back(pp.prime);
  return out;
}

std::vector<u64> support_union(std::initializer_list<i64> values) {
  std::vector<u64> out;
  for (i64 v : values) {
    auto s = prime_support(static_cast<u64>(v));
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& pp : factors)
    for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
  return v;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  Factorization f;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) {
    // Either prime (n < kTrialLimit^2) or a product of primes > 10^6.
    if (n < kTrialLimit * kTrialLimit) {
      f.factors.push_back({n, 1});
    } else {
      factor_large(n, f.factors);
    }
  }
  normalize(f.factors);
  return f;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<int> mobius_table(u64 n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  mu[0] = 0;
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    for (u64 j = i; j <= n; j += i) {
      if (j > i) composite[j] = true;
      mu[j] = -mu[j];
    }
    const u64 sq = i * i;
    for (u64 j = sq; j <= n; j += sq) mu[j] = 0;
  }
  return mu;
}

int mobius(u64 n) {
  if (n == 0) throw std::domain_error("mobius(0)");
  const auto f = factorize(n);
  if (!f.squarefree()) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

bool is_squarefree(u64 n) { return factorize(n).squarefree(); }

Rational phi_star(u64 n) {
  const auto primes = prime_support(n);
  return phi_star_of(primes);
}

Rational phi_prime(u64 n) {
  Rational r(1);
  for (u64 p : prime_support(n)) r *= Rational(static_cast<i64>(p), static_cast<i64>(p) + 1);
  return r;
}

i64 coprime_pairs(i64 y) {
  if (y < 0) throw std::domain_error("coprime_pairs: negative bound");
  if (y == 0) return 0;
  const auto mu = mobius_table(static_cast<u64>(y));
  i64 total = 0;
  for (i64 d = 1; d <= y; ++d) {
    if (mu[d] == 0) continue;
    const i64 k = y / d;
    total += mu[d] * k * k;
  }
  return total;
}

namespace {

constexpr i64 kRootTableMax = 1 << 20;

// e_q(r) for r in [0, q); rebuilt when q changes.
const std::vector<std::complex<double>>& roots_of_unity(i64 q) {
  thread_local std::vector<std::complex<double>> table;
  thread_local i64 cached = 0;
  if (cached != q) {
    table.resize(static_cast<std::size_t>(q));
    const double w = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (i64 r = 0; r < q; ++r) table[r] = std::polar(1.0, w * static_cast<double>(r));
    cached = q;
  }
  return table;
}

template <bool UnitsOnly>
std::complex<double> cubic_sum(i64 a, i64 b, i64 q) {
  if (q < 1) throw std::domain_error("exponential sum modulus must be positive");
  const i64 ar = mod_pos(a, q), br = mod_pos(b, q);
  const bool tabled = q <= kRootTableMax;
  const auto* roots = tabled ? &roots_of_unity(q) : nullptr;
  const double w = 2.0 * std::numbers::pi / static_cast<double>(q);
  std::complex<double> sum = 0.0;
  for (i64 x = 1; x <= q; ++x) {
    if constexpr (UnitsOnly) {
      if (gcd_i64(x, q) != 1) continue;
    }
    const i64 xr = x % q;
    const i128 x2 = static_cast<i128>(xr) * xr % q;
    const i128 x3 = x2 * xr % q;
    const i64 r = static_cast<i64>((ar * x3 + br * x2) % q);
    sum += tabled ? (*roots)[r] : std::polar(1.0, w * static_cast<double>(r));
  }
  return sum;
}

}  // namespace

std::complex<double> exp_sum_S(i64 a, i64 b, i64 q) { return cubic_sum<true>(a, b, q); }
std::complex<double> exp_sum_T(i64 a, i64 b, i64 q) { return cubic_sum<false>(a, b, q); }

double sawtooth(double t) { return t - std::floor(t) - 0.5; }

i64 count_in_class(double t1, double t2, i64 a, i64 q) {
  if (q <= 0) throw std::domain_error("count_in_class: q must be positive");
  if (t2 < t1) throw std::domain_error("count_in_class: t2 < t1");
  // n <= t means n <= floor(t) for integer n.
  const i128 f2 = static_cast<i128>(std::floor(t2));
  const i128 f1 = static_cast<i128>(std::floor(t1));
  return static_cast<i64>(floor_div(f2 - a, q) - floor_div(f1 - a, q));
}

double r_term(double t1, double t2, i64 a, i64 q) {
  const double qd = static_cast<double>(q), ad = static_cast<double>(a);
  return sawtooth((t1 - ad) / qd) - sawtooth((t2 - ad) / qd);
}

bool in_admissible_set(const XiVector& xi) {
  for (i64 v : xi)
    if (v < 1) return false;
  // mu^2(xi2 xi3 xi4 xi5) = 1: each factor squarefree and pairwise coprime.
  constexpr std::array<XiIndex, 4> sq{kXi2, kXi3, kXi4, kXi5};
  for (std::size_t i = 0; i < sq.size(); ++i) {
    if (!is_squarefree(static_cast<u64>(xi[sq[i]]))) return false;
    for (std::size_t j = i + 1; j < sq.size(); ++j)
      if (gcd_i64(xi[sq[i]], xi[sq[j]]) != 1) return false;
  }
  for (XiIndex j : {kXi2, kXiL, kXi4, kXi5})
    if (gcd_i64(xi[kXi1], xi[j]) != 1) return false;
  for (XiIndex j : {kXi2, kXi3})
    if (gcd_i64(xi[kXiL], xi[j]) != 1) return false;
  return true;
}

Rational theta(const XiVector& xi) {
  if (!in_admissible_set(xi)) return Rational(0);
  const auto all = support_union({xi[kXi2], xi[kXi3], xi[kXiL], xi[kXi4], xi[kXi5], xi[kXi6]});
  const auto s456 = support_union({xi[kXi4], xi[kXi5], xi[kXi6]});
  const auto s13 = support_union({xi[kXi1], xi[kXi3]});
  std::vector<u64> shared;
  const auto s6 = prime_support(static_cast<u64>(xi[kXi6]));
  const auto s123 = support_union({xi[kXi1], xi[kXi2], xi[kXi3]});
  std::set_intersection(s6.begin(), s6.end(), s123.begin(), s123.end(),
                        std::back_inserter(shared));
  return phi_star_of(all) * phi_star_of(s456) * phi_star_of(s13) / phi_star_of(shared);
}

namespace {

// Visits every xi in N^7 with xi^lambda == n (exact divisor recursion).
template <class F>
void for_each_decomposition(i64 n, F&& visit) {
  constexpr std::array<XiIndex, 7> order{kXi6, kXi5, kXi4, kXi3, kXiL, kXi2, kXi1};
  XiVector xi{1, 1, 1, 1, 1, 1, 1};
  auto rec = [&](auto&& self, std::size_t depth, i64 rem) -> void {
    const XiIndex idx = order[depth];
    const int e = monomials::kLambda[idx];
    if (depth + 1 == order.size()) {
      const i64 r = floor_root(rem, e);
      if (pow_capped(r, e, rem) == rem) {
        xi[idx] = r;
        visit(xi);
      }
      return;
    }
    for (i64 d = 1;; ++d) {
      const i128 de = pow_capped(d, e, rem);
      if (de > rem) break;
      if (rem % static_cast<i64>(de) != 0) continue;
      xi[idx] = d;
      self(self, depth + 1, rem / static_cast<i64>(de));
    }
    xi[idx] = 1;
  };
  rec(rec, 0, n);
}

}  // namespace

Rational delta_weight(i64 n) {
  if (n < 1) throw std::domain_error("delta: n must be positive");
  Rational sum(0);
  for_each_decomposition(n, [&](const XiVector& xi) {
    const Rational t = theta(xi);
    if (t.numerator() == 0) return;
    i64 prod = 1;
    for (i64 v : xi) prod *= v;
    sum += t / prod;
  });
  return sum;
}

double delta(i64 n) {
  return std::pow(static_cast<double>(n), 1.0 / 6.0) * boost::rational_cast<double>(delta_weight(n));
}

std::vector<double> delta_table(i64 n_max) {
  std::vector<double> weight(static_cast<std::size_t>(n_max) + 1, 0.0);
  constexpr std::array<XiIndex, 7> order{kXi6, kXi5, kXi4, kXi3, kXiL, kXi2, kXi1};
  XiVector xi{1, 1, 1, 1, 1, 1, 1};
  auto rec = [&](auto&& self, std::size_t depth, i64 used) -> void {
    if (depth == order.size()) {
      const Rational t = theta(xi);
      if (t.numerator() == 0) return;
      i64 prod = 1;
      for (i64 v : xi) prod *= v;
      weight[static_cast<std::size_t>(used)] += boost::rational_cast<double>(t / prod);
      return;
    }
    const XiIndex idx = order[depth];
    const int e = monomials::kLambda[idx];
    const i64 top = floor_root(n_max / used, e);
    for (i64 d = 1; d <= top; ++d) {
      xi[idx] = d;
      self(self, depth + 1, used * static_cast<i64>(pow_capped(d, e, n_max)));
    }
    xi[idx] = 1;
  };
  rec(rec, 0, 1);
  for (std::size_t n = 1; n < weight.size(); ++n)
    weight[n] *= std::pow(static_cast<double>(n), 1.0 / 6.0);
  return weight;
}

double local_factor(u64 p, double s) {
  if (!(s > 0.0)) throw std::domain_error("local_factor: s must be positive");
  if (!is_prime(p)) throw std::domain_error("local_factor: p must be prime");
  const double pd = static_cast<double>(p);
  auto P = [&](double e) { return std::pow(pd, e); };
  const double q = 1.0 - 1.0 / pd;
  const double a2 = P(2 * s + 1), a3 = P(3 * s + 1), a4 = P(4 * s + 1), a5 = P(5 * s + 1),
               a6 = P(6 * s + 1);
  const double bracket = a2 / (a2 - 1) + a2 * a6 / (a4 * (a2 - 1)) + a6 / (q * a3) +
                         1 / (a3 - 1) + a3 * a6 / (a4 * (a3 - 1)) + a3 * a6 / (a5 * (a3 - 1));
  return 1 + q * q / (a6 - 1) * bracket + q / (a2 - 1) + q / (a3 - 1);
}

double local_factor_brute(u64 p, double s, int cap) {
  if (!(s > 0.0)) throw std::domain_error("local_factor_brute: s must be positive");
  const double lp = std::log(static_cast<double>(p));
  const double unit = 1.0 - 1.0 / static_cast<double>(p);
  auto f = [&](int e) { return e > 0 ? unit : 1.0; };
  const auto& lam = monomials::kLambda;
  double total = 0.0;
  std::array<int, 7> m{};
  // Exponents of (1, 2, 3, l, 4, 5, 6).
  for (m[1] = 0; m[1] <= cap; ++m[1])
    for (m[2] = 0; m[2] <= cap; ++m[2])
      for (m[4] = 0; m[4] <= cap; ++m[4])
        for (m[5] = 0; m[5] <= cap; ++m[5]) {
          if (m[1] + m[2] + m[4] + m[5] > 1) continue;
          for (m[0] = 0; m[0] <= cap; ++m[0]) {
            if (m[0] > 0 && m[1] + m[4] + m[5] > 0) continue;
            for (m[3] = 0; m[3] <= cap; ++m[3]) {
              if (m[0] > 0 && m[3] > 0) continue;
              if (m[3] > 0 && m[1] + m[2] > 0) continue;
              for (m[6] = 0; m[6] <= cap; ++m[6]) {
                const double th = f(m[1] + m[2] + m[3] + m[4] + m[5] + m[6]) *
                                  f(m[4] + m[5] + m[6]) * f(m[0] + m[2]) /
                                  f(std::min(m[6], m[0] + m[1] + m[2]));
                double expo = 0.0;
                for (std::size_t i = 0; i < 7; ++i) expo += m[i] * (lam[i] * s + 1.0);
                total += th * std::exp(-expo * lp);
              }
            }
          }
        }
  return total;
}

double zeta_minus_one(double s) {
  if (!(s > 1.0)) throw std::domain_error("zeta_real: argument must exceed 1");
  if (s - 1.0 < 1e-9) throw std::domain_error("zeta_real: argument too close to the pole");
  if (s > 40.0) {
    double sum = 0.0;
    for (int n = 6; n >= 2; --n) sum += std::pow(static_cast<double>(n), -s);
    return sum;
  }
  // Euler-Maclaurin with N = 16 and Bernoulli terms up to B_20.
  constexpr int N = 16;
  constexpr std::array<double, 10> bernoulli{1.0 / 6,        -1.0 / 30,     1.0 / 42,
                                             -1.0 / 30,      5.0 / 66,      -691.0 / 2730,
                                             7.0 / 6,        -3617.0 / 510, 43867.0 / 798,
                                             -174611.0 / 330};
  double head = 0.0;
  for (int n = N - 1; n >= 2; --n) head += std::pow(static_cast<double>(n), -s);
  const double Nd = N;
  double tail = std::pow(Nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Nd, -s);
  double rising = s;  // s (s+1) ... (s + 2k - 2)
  double fact = 2.0;  // (2k)!
  double npow = std::pow(Nd, -s - 1.0);
  for (int k = 1; k <= 10; ++k) {
    tail += bernoulli[k - 1] / fact * rising * npow;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2.0 * k + 1) * (2.0 * k + 2);
    npow /= Nd * Nd;
  }
  return head + tail;
}

double zeta_real(double s) { return 1.0 + zeta_minus_one(s); }

double E1_shifted(double s) {
  const double z3 = zeta_real(3 * s + 1), z4 = zeta_real(4 * s + 1);
  return zeta_real(2 * s + 1) * z3 * z3 * z4 * z4 * zeta_real(5 * s + 1) * zeta_real(6 * s + 1);
}

double E2_shifted(double s) {
  const double num = std::pow(zeta_real(13 * s + 3), 5) * std::pow(zeta_real(14 * s + 3), 2);
  const double den = std::pow(zeta_real(7 * s + 2), 4) * std::pow(zeta_real(8 * s + 2), 4) *
                     std::pow(zeta_real(9 * s + 2), 2) * zeta_real(10 * s + 2) *
                     std::pow(zeta_real(19 * s + 4), 2);
  return num / den;
}

long double prime_zeta(int k) {
  if (k < 2) throw std::domain_error("prime_zeta: k must be >= 2");
  long double sum = 0.0L;
  for (int m = 1; m * k <= 1100; ++m) {
    const int mu = mobius(static_cast<u64>(m));
    if (mu == 0) continue;
    const long double term = std::log1p(static_cast<long double>(zeta_minus_one(m * k))) / m;
    sum += mu * term;
    if (std::fabs(term) < 1e-22L) break;
  }
  return sum;
}

double main_term_sum(i64 bound) {
  if (bound < 1) throw std::domain_error("main_term_sum: B must be positive");
  const auto table = delta_table(bound);
  const double B = static_cast<double>(bound);
  double sum = 0.0;
  for (i64 n = 1; n <= bound; ++n)
    if (table[static_cast<std::size_t>(n)] != 0.0)
      sum += table[static_cast<std::size_t>(n)] * g3(std::sqrt(static_cast<double>(n) / B));
  return 2.0 * std::pow(B, 5.0 / 6.0) * sum;
}

}  // namespace e6
