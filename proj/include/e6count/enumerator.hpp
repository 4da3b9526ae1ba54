// Exact #E(B) by enumerating T2 torsor coordinates: xi over the height
// region, tau1 and tau2 inside the g-function bounds, tau2 found either by a
// divisibility scan or by stepping through the roots of its congruence.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "e6count/surface.hpp"
#include "e6count/torsor.hpp"

namespace e6 {

class NonUnitInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All x mod p^k with x^2 = c, sorted. Throws NonUnitInput when p | c.
std::vector<u64> sqrt_mod_prime_power(i64 c, u64 p, int k);

/// All tau2 mod q0 with xi2 tau2^2 = -tau1^3 xi1^2 xi3, sorted; {0} for q0 = 1.
/// Throws PreconditionViolated unless gcd(tau1 xi1 xi2 xi3, q0) = 1.
std::vector<i64> solve_tau2_congruence(const XiVector& xi, i64 tau1, i64 q0);

enum class Strategy { direct, residue, automatic };

std::string to_string(Strategy s);

struct EnumerationOptions {
  Strategy strategy = Strategy::automatic;
  /// Extra integers added on both sides of every floating-point loop bound.
  int slack = 1;
  int threads = 1;
  /// Called for every accepted T2 point; concurrently when threads > 1.
  std::function<void(const TorsorPoint&)> visit;
};

struct EnumerationStats {
  i64 e_count = 0;
  i64 xi_tuples = 0;        // xi in F with xi^lambda <= B
  i64 tau1_values = 0;      // (xi, tau1) pairs examined
  i64 tau2_candidates = 0;  // tau2 values tested exactly

  void add(const EnumerationStats& o);
};

EnumerationStats enumerate_E_torsor(i64 bound, const EnumerationOptions& options = {});

/// #E(B).
i64 count_E_torsor(i64 bound, Strategy strategy = Strategy::automatic, int threads = 1);

/// N_{U,H}(B) = 2 #E(B) + the three family counts.
CountReport count_total(i64 bound, Strategy strategy = Strategy::automatic, int threads = 1);

}  // namespace e6
