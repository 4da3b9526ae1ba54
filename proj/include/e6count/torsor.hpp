// Universal torsor coordinates: the map Psi to the surface, the constructive
// lift of a surface point to T1 coordinates, the exponent transfer maps
// between the T1 and T2 coprimality schemes, and their validators.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "e6count/surface.hpp"
#include "e6count/xi.hpp"

namespace e6 {

enum class Scheme { T1, T2 };

std::string to_string(Scheme s);

/// (xi1, xi2, xi3, xiL, xi4, xi5, xi6; tau1, tau2, tauL) on
/// tauL xiL^3 xi4^2 xi5 + tau2^2 xi2 + tau1^3 xi1^2 xi3 = 0.
struct TorsorPoint {
  XiVector xi{1, 1, 1, 1, 1, 1, 1};
  i64 tau1 = 0;
  i64 tau2 = 0;
  i64 tauL = 0;
  Scheme scheme = Scheme::T1;

  friend bool operator==(const TorsorPoint&, const TorsorPoint&) = default;
};

std::string to_string(const TorsorPoint& t);

class NotOnTorsor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotT1 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotT2 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Left-hand side of the torsor equation, exact.
Int256 torsor_residual(const TorsorPoint& t);

/// Surface point of t, canonicalized. Throws NotOnTorsor.
SurfacePoint psi(const TorsorPoint& t);

/// T1 coordinates of a point of E. Throws std::invalid_argument when p is
/// not in E and InternalInvariantViolation if a division is inexact.
TorsorPoint lift_T1(const SurfacePoint& p);

/// Exponents of one prime in (xi1, xi3, xi6, tau1).
struct PrimeExponents {
  int m1 = 0, m3 = 0, m6 = 0, n1 = 0;

  friend bool operator==(const PrimeExponents&, const PrimeExponents&) = default;
};

/// Per-prime rule of the T1 -> T2 map; throws InternalInvariantViolation
/// unless exactly one of its cases applies.
PrimeExponents phi_rule(const PrimeExponents& e);
/// Per-prime rule of the T2 -> T1 map.
PrimeExponents phi_inverse_rule(const PrimeExponents& e);

/// Throws NotT1 / NotT2 when the input fails its scheme.
TorsorPoint phi_T1_to_T2(const TorsorPoint& t);
TorsorPoint phi_T2_to_T1(const TorsorPoint& t);

struct Validation {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Torsor equation, sign conventions and every condition of t.scheme.
Validation validate(const TorsorPoint& t);

}  // namespace e6
