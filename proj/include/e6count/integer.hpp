// Exact integer helpers shared by every module: 128-bit products, integer
// roots, gcd and modular arithmetic. All roots are computed exactly (a float
// estimate is only a starting point and is always corrected).
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace e6 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

inline i64 gcd_i64(i64 a, i64 b) {
  return static_cast<i64>(std::gcd(static_cast<u64>(a < 0 ? -a : a),
                                   static_cast<u64>(b < 0 ? -b : b)));
}

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor division for signed values (rounds toward -infinity).
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

/// Non-negative residue of a modulo m (m > 0).
inline i64 mod_pos(i128 a, i64 m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline i64 inv_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i128 old_r = mod_pos(a, m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inv_mod: argument is not a unit");
  return mod_pos(old_s, m);
}

/// Floor of the square root of n >= 0.
inline i128 isqrt(i128 n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  if (n < 2) return n;
  i128 x = static_cast<i128>(__builtin_sqrtl(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

inline i128 ceil_sqrt(i128 n) {
  if (n <= 0) return 0;
  const i128 r = isqrt(n);
  return r * r == n ? r : r + 1;
}

/// Floor of the real cube root; valid for |n| < 2^120.
inline i128 floor_cbrt(i128 n) {
  if (n == 0) return 0;
  i128 x = static_cast<i128>(__builtin_cbrtl(static_cast<long double>(n)));
  while (x * x * x > n) --x;
  while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
  return x;
}

inline i128 ceil_cbrt(i128 n) { return -floor_cbrt(-n); }

/// Largest r >= 0 with r^k <= n, for n >= 0 and k >= 1.
inline i64 floor_root(i64 n, int k) {
  if (n <= 0) return 0;
  if (k == 1) return n;
  i64 r = static_cast<i64>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto pow_le = [&](i64 base) {
    i128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= base;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

/// base^exp with an overflow check against `limit`; returns limit + 1 on
/// overflow so callers can use it as a pruning test.
inline i128 pow_capped(i128 base, int exp, i128 limit) {
  i128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return limit + 1;
    acc *= base;
  }
  return acc;
}

}  // namespace e6
