// The height region in torsor coordinates: the functions g1, g21, g22, g2,
// g3, the loop parameters (alpha, X1, X2) for a fixed xi, and the real
// density omega_inf computed by two independent routes.
#pragma once

#include <stdexcept>
#include <vector>

#include "e6count/xi.hpp"

namespace e6 {

/// -(min{1/v^4, 1 + 1/v^2})^{1/3}; DomainError (std::domain_error) outside (0, 1].
double g1(double v);

/// sqrt(-1 - u^3) for u <= -1, else 0.
double g21(double u, double v);

/// sqrt(1 - u^3) for u >= -(1/v^2 - 1)^{1/3}, else 1/v.
double g22(double u, double v);

/// g22 - g21 on g1(v) <= u <= 1, 0 < v <= 1; zero elsewhere.
double g2(double u, double v);

/// Length of {t : 0 <= t v <= 1, |t^2 + u^3| <= 1}, with the endpoints found
/// by bisection on the raw constraints; independent of the closed form.
double g2_numeric(double u, double v);

/// Breakpoints of u -> g2(u, v) inside [g1(v), 1], sorted, endpoints included.
std::vector<double> g2_breakpoints(double v);

/// Integral of g2(u, v) over g1(v) <= u <= 1.
double g3(double v, double tol = 1e-10);

/// Integral over [g1(v), 1] of d/du g2(u, v) (or of its absolute value) by
/// central differences and adaptive quadrature on each smooth piece.
double integral_D1_g2(double v, bool absolute = false);

/// 12 vol{(t, u, v) : |t^2 + u^3| <= 1, 0 <= t v^3 <= 1, 0 <= v <= 1, |u v^4| <= 1}.
/// The v-integral is done in closed form, then (u, t) by quadrature.
double omega_inf_3d(double tol = 1e-10);

/// 12 int_0^1 g3(v^3) dv; the same volume sliced by alpha = v^3.
double omega_inf_g3(double tol = 1e-9);

/// 12 int_0^1 g3(v) dv, reported as a diagnostic only.
double omega_inf_g3_literal(double tol = 1e-9);

class OutOfRegion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Floating-point loop bounds for one xi. Used only to bound loops, never to
/// accept or reject a point.
struct RegionParams {
  i64 bound = 0;
  double alpha = 0.0;
  double X1 = 0.0;
  double X2 = 0.0;
};

/// Throws OutOfRegion when xi^(2,3,4,3,4,5,6) > B.
RegionParams region_params(const XiVector& xi, i64 bound);

}  // namespace e6
