#pragma once

#include <array>
#include <cstddef>

#include "e6count/integer.hpp"

namespace e6 {

/// Positions of the seven exceptional-curve coordinates, in the fixed order
/// (1, 2, 3, l, 4, 5, 6) used throughout.
enum XiIndex : std::size_t { kXi1 = 0, kXi2, kXi3, kXiL, kXi4, kXi5, kXi6 };

inline constexpr std::size_t kXiCount = 7;

using XiVector = std::array<i64, kXiCount>;

/// Exponents of a xi-monomial, same coordinate order as XiVector.
struct ExponentVector {
  std::array<int, kXiCount> n{};

  constexpr int operator[](std::size_t i) const { return n[i]; }
};

namespace monomials {
// Psi pulls back x0, x2 and x3 to these monomials (times tau2, 1, tau1).
inline constexpr ExponentVector kX0{{1, 2, 2, 0, 1, 2, 3}};
inline constexpr ExponentVector kX2{{2, 3, 4, 3, 4, 5, 6}};
inline constexpr ExponentVector kX3{{2, 2, 3, 1, 2, 3, 4}};
// Anticanonical weights; equal to kX2.
inline constexpr ExponentVector kLambda = kX2;
// Modulus of the torsor congruence: xi_l^3 xi_4^2 xi_5.
inline constexpr ExponentVector kModulus{{0, 0, 0, 3, 2, 1, 0}};
// Coefficient of tau1^3: xi_1^2 xi_3.
inline constexpr ExponentVector kTau1Coeff{{2, 0, 1, 0, 0, 0, 0}};
}  // namespace monomials

/// Exact value of prod xi_i^{n_i}. Throws std::overflow_error past 2^126.
i128 monomial(const XiVector& xi, const ExponentVector& e);

/// Same, but saturates at limit + 1 instead of throwing.
i128 monomial_capped(const XiVector& xi, const ExponentVector& e, i128 limit);

}  // namespace e6
