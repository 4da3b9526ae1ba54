// The cubic surface x1 x2^2 + x2 x0^2 + x3^3 = 0 with its line x2 = x3 = 0
// removed: point primitives, the brute-force counter used as ground truth,
// exact counts of the three degenerate families, and point counts mod p.
#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "e6count/integer.hpp"

namespace e6 {

using Int256 = boost::multiprecision::int256_t;

/// Canonical primitive representative: gcd = 1 and x2 > 0.
struct SurfacePoint {
  i64 x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  friend auto operator<=>(const SurfacePoint&, const SurfacePoint&) = default;
};

std::string to_string(const SurfacePoint& p);

enum class Rejection { zero_vector, off_surface, on_line };

class RejectedPoint : public std::invalid_argument {
 public:
  RejectedPoint(Rejection reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Rejection reason() const noexcept { return reason_; }

 private:
  Rejection reason_;
};

enum class CountMethod { naive, torsor_direct, torsor_residue, torsor_auto };

std::string to_string(CountMethod m);

struct CountReport {
  i64 bound = 0;
  i64 e_count = 0;
  i64 conic_count = 0;   // x3 = 0
  i64 x0zero_count = 0;  // x0 = 0
  i64 x1zero_count = 0;  // x1 = 0
  i64 total = 0;
  CountMethod method = CountMethod::naive;
  double elapsed_seconds = 0.0;

  i64 family_total() const { return conic_count + x0zero_count + x1zero_count; }
};

struct FamilyCounts {
  i64 conic = 0, x0zero = 0, x1zero = 0;

  friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

/// x1 x2^2 + x2 x0^2 + x3^3, exact for every 64-bit input.
Int256 eval_surface(i64 x0, i64 x1, i64 x2, i64 x3);

/// Divides out the gcd and fixes the sign so that x2 > 0.
/// Throws RejectedPoint for the zero vector, points off the surface and
/// points on the line x2 = x3 = 0.
SurfacePoint canonicalize(i64 x0, i64 x1, i64 x2, i64 x3);

i64 height(const SurfacePoint& p);

/// Largest bound accepted by the counters; keeps every cube inside 128 bits.
inline constexpr i64 kMaxBound = 1'000'000'000'000;

/// Visits every point of E(B): all coordinates nonzero, x0 > 0, x2 > 0,
/// primitive, height <= B. Ranges of x2 are split across `threads` workers;
/// with more than one thread the visitor is called concurrently.
void enumerate_E(i64 bound, const std::function<void(const SurfacePoint&)>& visit,
                 int threads = 1);

std::vector<SurfacePoint> enumerate_E(i64 bound);

/// N_{U,H}(B) by full enumeration of canonical representatives. The point
/// [0:0:1:0], which lies in none of the coprime (a, b) families, is left out.
CountReport count_naive(i64 bound, int threads = 1);

/// Exact family counts from the coprime (a, b) parametrizations:
/// conic = 2 Q(floor(B^{1/2})), x0zero = x1zero = 2 Q(floor(B^{1/3})).
FamilyCounts family_counts(i64 bound);

/// Projective F_p-points of the surface, by brute force.
i64 count_mod_p(i64 p);

}  // namespace e6
