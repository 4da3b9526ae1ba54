#include "e6count/xi.hpp"

#include <stdexcept>

namespace e6 {

i128 monomial_capped(const XiVector& xi, const ExponentVector& e, i128 limit) {
  i128 acc = 1;
  for (std::size_t i = 0; i < kXiCount; ++i) {
    const i128 base = xi[i];
    for (int k = 0; k < e[i]; ++k) {
      if (base != 0 && abs128(acc) > limit / abs128(base)) return limit + 1;
      acc *= base;
    }
  }
  return acc;
}

i128 monomial(const XiVector& xi, const ExponentVector& e) {
  constexpr i128 kLimit = static_cast<i128>(1) << 126;
  const i128 v = monomial_capped(xi, e, kLimit);
  if (v > kLimit) throw std::overflow_error("xi monomial exceeds 2^126");
  return v;
}

}  // namespace e6
