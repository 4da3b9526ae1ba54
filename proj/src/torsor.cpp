#include "e6count/torsor.hpp"

#include <initializer_list>
#include <map>

#include "e6count/arith.hpp"

namespace e6 {

namespace {

const char* const kXiNames[kXiCount] = {"xi1", "xi2", "xi3", "xiL", "xi4", "xi5", "xi6"};

i64 exact_div(i64 a, i64 b, const char* step) {
  if (b == 0 || a % b != 0)
    throw InternalInvariantViolation(std::string("lift_T1: inexact division at ") + step);
  return a / b;
}

bool coprime_to_all(i64 a, std::initializer_list<i64> others) {
  for (i64 b : others)
    if (gcd_i64(a, b) != 1) return false;
  return true;
}

// mu^2 of the product, without forming it.
bool squarefree_product(std::initializer_list<i64> factors) {
  for (auto it = factors.begin(); it != factors.end(); ++it) {
    if (!is_squarefree(static_cast<u64>(*it))) return false;
    for (auto jt = std::next(it); jt != factors.end(); ++jt)
      if (gcd_i64(*it, *jt) != 1) return false;
  }
  return true;
}

int valuation(i64 n, u64 p) {
  u64 m = static_cast<u64>(n < 0 ? -n : n);
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

i64 power(u64 p, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<i64>(p);
  return r;
}

using Rule = PrimeExponents (*)(const PrimeExponents&);

// Applies `rule` prime by prime to (xi1, xi3, xi6, |tau1|).
TorsorPoint transfer(const TorsorPoint& t, Rule rule, Scheme target) {
  std::map<u64, bool> primes;
  for (i64 v : {t.xi[kXi1], t.xi[kXi3], t.xi[kXi6], t.tau1})
    for (const auto& pp : factorize(static_cast<u64>(v < 0 ? -v : v)).factors) primes[pp.prime] = true;
  TorsorPoint out = t;
  i64 xi1 = 1, xi3 = 1, xi6 = 1, tau1 = 1;
  for (const auto& [p, unused] : primes) {
    const PrimeExponents e{valuation(t.xi[kXi1], p), valuation(t.xi[kXi3], p),
                           valuation(t.xi[kXi6], p), valuation(t.tau1, p)};
    const PrimeExponents f = rule(e);
    xi1 *= power(p, f.m1);
    xi3 *= power(p, f.m3);
    xi6 *= power(p, f.m6);
    tau1 *= power(p, f.n1);
  }
  out.xi[kXi1] = xi1;
  out.xi[kXi3] = xi3;
  out.xi[kXi6] = xi6;
  out.tau1 = t.tau1 < 0 ? -tau1 : tau1;
  out.scheme = target;
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::T1 ? "T1" : "T2"; }

std::string to_string(const TorsorPoint& t) {
  std::string s = "xi=(";
  for (std::size_t i = 0; i < kXiCount; ++i) s += (i ? "," : "") + std::to_string(t.xi[i]);
  s += ") tau=(" + std::to_string(t.tau1) + "," + std::to_string(t.tau2) + "," +
       std::to_string(t.tauL) + ") " + to_string(t.scheme);
  return s;
}

Int256 torsor_residual(const TorsorPoint& t) {
  const auto& x = t.xi;
  const Int256 q0 = Int256(x[kXiL]) * x[kXiL] * x[kXiL] * x[kXi4] * x[kXi4] * x[kXi5];
  const Int256 c1 = Int256(x[kXi1]) * x[kXi1] * x[kXi3];
  const Int256 t1 = t.tau1, t2 = t.tau2;
  return Int256(t.tauL) * q0 + t2 * t2 * x[kXi2] + t1 * t1 * t1 * c1;
}

SurfacePoint psi(const TorsorPoint& t) {
  if (torsor_residual(t) != 0) throw NotOnTorsor("psi: torsor equation fails for " + to_string(t));
  const i128 x0 = monomial(t.xi, monomials::kX0) * t.tau2;
  const i128 x2 = monomial(t.xi, monomials::kX2);
  const i128 x3 = monomial(t.xi, monomials::kX3) * t.tau1;
  const i128 lim = std::numeric_limits<i64>::max();
  if (abs128(x0) > lim || x2 > lim || abs128(x3) > lim)
    throw std::overflow_error("psi: coordinates exceed 64 bits");
  return canonicalize(static_cast<i64>(x0), t.tauL, static_cast<i64>(x2), static_cast<i64>(x3));
}

TorsorPoint lift_T1(const SurfacePoint& p) {
  if (p.x0 <= 0 || p.x1 == 0 || p.x2 <= 0 || p.x3 == 0 || eval_surface(p.x0, p.x1, p.x2, p.x3) != 0 ||
      gcd_i64(gcd_i64(p.x0, p.x1), gcd_i64(p.x2, p.x3)) != 1)
    throw std::invalid_argument("lift_T1: point is not in E: " + to_string(p));
  i64 y1 = 1, y2 = 1, y3 = 1;
  for (const auto& pp : factorize(static_cast<u64>(p.x2)).factors) {
    const i64 q = static_cast<i64>(pp.prime);
    if (pp.exponent % 3 == 1) y1 *= q;
    if (pp.exponent % 3 == 2) y2 *= q;
    y3 *= power(pp.prime, pp.exponent / 3);
  }
  const i64 z = exact_div(p.x3, y1 * y2 * y3, "z");
  const i64 w = exact_div(p.x0, y1 * y2, "w");
  const i64 z1 = exact_div(z, y2, "z'");
  const i64 y3p = exact_div(y3, y1, "y3'");
  const i64 a = gcd_i64(y3p, z1);
  const i64 y3pp = y3p / a;
  const i64 z2 = z1 / a;

  TorsorPoint t;
  i64 xi6 = 1, xi2 = 1;
  for (const auto& pp : factorize(static_cast<u64>(a)).factors) {
    xi6 *= power(pp.prime, pp.exponent / 2);
    if (pp.exponent % 2 == 1) xi2 *= static_cast<i64>(pp.prime);
  }
  const i64 w1 = exact_div(w, xi6 * xi6 * xi6 * xi2 * xi2, "w'");
  const i64 xi5 = gcd_i64(y3pp, w1);
  const i64 xiL = y3pp / xi5;
  const i64 w2 = w1 / xi5;
  const i64 xi1 = exact_div(y2, xi5, "xi1");
  const i64 xi3 = gcd_i64(w2, y1);
  t.tau2 = w2 / xi3;
  const i64 xi4 = y1 / xi3;
  t.tau1 = exact_div(z2, xi3, "tau1");
  t.tauL = p.x1;
  t.xi = {xi1, xi2, xi3, xiL, xi4, xi5, xi6};
  t.scheme = Scheme::T1;
  if (torsor_residual(t) != 0) throw InternalInvariantViolation("lift_T1: torsor equation fails");
  return t;
}

PrimeExponents phi_rule(const PrimeExponents& e) {
  const int k = std::min(e.m6, e.n1 / 2);
  const bool c1 = e.n1 == 2 * k + 1 && e.m6 >= k + 1 && e.m3 == 0;
  const bool c2 = (e.n1 == 2 * k + 1 && e.m6 >= k + 1 && e.m3 == 1) ||
                  (e.n1 > 2 * k && e.m6 == k && e.m3 == 1);
  const bool c3 = (e.n1 > 2 * k && e.m6 == k && e.m3 == 0) || (e.n1 == 2 * k && e.m6 >= k);
  if (c1 + c2 + c3 != 1) throw InternalInvariantViolation("phi_rule: ambiguous or missing case");
  if (c1) return {e.m1 + 3 * k + 1, 1, e.m6 - k - 1, e.n1 - 2 * k - 1};
  if (c2) return {e.m1 + 3 * k + 2, 0, e.m6 - k, e.n1 - 2 * k - 1};
  return {e.m1 + 3 * k, e.m3, e.m6 - k, e.n1 - 2 * k};
}

PrimeExponents phi_inverse_rule(const PrimeExponents& e) {
  const int k = e.m1 / 3;
  const int r = e.m1 - 3 * k;
  const bool c1 = (r == 1 || r == 2) && e.m3 == 1;
  const bool c2 = r == 2 && e.m3 == 0;
  const bool c3 = (r == 1 && e.m3 == 0) || r == 0;
  if (c1 + c2 + c3 != 1) throw InternalInvariantViolation("phi_inverse_rule: ambiguous or missing case");
  if (c1) return {r - 1, 0, e.m6 + k + 1, e.n1 + 2 * k + 1};
  if (c2) return {0, 1, e.m6 + k, e.n1 + 2 * k + 1};
  return {r, e.m3, e.m6 + k, e.n1 + 2 * k};
}

TorsorPoint phi_T1_to_T2(const TorsorPoint& t) {
  if (t.scheme != Scheme::T1) throw NotT1("phi_T1_to_T2: input is tagged T2");
  if (const auto v = validate(t); !v) throw NotT1("phi_T1_to_T2: " + join(v.violations));
  return transfer(t, &phi_rule, Scheme::T2);
}

TorsorPoint phi_T2_to_T1(const TorsorPoint& t) {
  if (t.scheme != Scheme::T2) throw NotT2("phi_T2_to_T1: input is tagged T1");
  if (const auto v = validate(t); !v) throw NotT2("phi_T2_to_T1: " + join(v.violations));
  return transfer(t, &phi_inverse_rule, Scheme::T1);
}

Validation validate(const TorsorPoint& t) {
  Validation v;
  auto need = [&](bool ok, const char* what) {
    if (!ok) v.violations.emplace_back(what);
  };
  bool positive = true;
  for (std::size_t i = 0; i < kXiCount; ++i) {
    if (t.xi[i] < 1) {
      v.violations.push_back(std::string(kXiNames[i]) + " <= 0");
      positive = false;
    }
  }
  need(t.tau1 != 0, "tau1 = 0");
  need(t.tau2 > 0, "tau2 <= 0");
  need(t.tauL != 0, "tauL = 0");
  if (!positive) return v;
  need(torsor_residual(t) == 0, "torsor equation");

  const auto& x = t.xi;
  const i64 xi1 = x[kXi1], xi2 = x[kXi2], xi3 = x[kXi3], xiL = x[kXiL], xi4 = x[kXi4],
            xi5 = x[kXi5], xi6 = x[kXi6];
  need(coprime_to_all(t.tau2, {xi1, xi3}), "gcd(tau2, xi1 xi3) = 1");
  need(coprime_to_all(t.tauL, {xi4, xi5, xi6}), "gcd(tauL, xi4 xi5 xi6) = 1");
  if (t.scheme == Scheme::T1) {
    need(squarefree_product({xi1, xi2, xi3, xi4, xi5}), "mu^2(xi1 xi2 xi3 xi4 xi5) = 1");
    need(coprime_to_all(t.tau1, {xi2, xiL, xi4, xi5}), "gcd(tau1, xi2 xiL xi4 xi5) = 1");
  } else {
    need(squarefree_product({xi2, xi3, xi4, xi5}), "mu^2(xi2 xi3 xi4 xi5) = 1");
    need(gcd_i64(xi1, xi2) == 1, "gcd(xi1, xi2) = 1");
    need(coprime_to_all(t.tau1, {xi2, xi3, xiL, xi4, xi5, xi6}),
         "gcd(tau1, xi2 xi3 xiL xi4 xi5 xi6) = 1");
    need(coprime_to_all(xi1, {xi2, xiL, xi4, xi5}), "gcd(xi1, xi2 xiL xi4 xi5) = 1");
    need(coprime_to_all(xiL, {xi2, xi3}), "gcd(xiL, xi2 xi3) = 1");
  }
  return v;
}

}  // namespace e6
