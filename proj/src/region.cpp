#include "e6count/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace e6 {

namespace {

using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
constexpr unsigned kMaxDepth = 10;

// Kinks of alpha -> g3(alpha): 2^{-1/2} and (golden ratio)^{-1/2}.
const double kAlphaKink1 = std::sqrt(0.5);
const double kAlphaKink2 = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);

template <class F>
double integrate(F&& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  return Quad::integrate(f, a, b, kMaxDepth, tol);
}

template <class F>
double integrate_pieces(F&& f, const std::vector<double>& cuts, double tol) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) s += integrate(f, cuts[i], cuts[i + 1], tol);
  return s;
}

void check_v(double v, const char* who) {
  if (!(v > 0.0 && v <= 1.0)) throw std::domain_error(std::string(who) + ": v must lie in (0, 1]");
}

// Largest x in [lo, hi] with pred(x), pred monotone true-then-false.
template <class P>
double bisect_last_true(P&& pred, double lo, double hi) {
  for (int i = 0; i < 2000 && hi > lo; ++i) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

// Integral over u of min(c, |u|^{-1/4}) from 0 to x, odd in x.
double G(double x, double c) {
  const double ax = std::fabs(x);
  const double knee = std::pow(c, -4.0);
  const double val = ax <= knee ? c * ax : 4.0 / 3.0 * std::pow(ax, 0.75) - std::pow(c, -3.0) / 3.0;
  return x < 0 ? -val : val;
}

// v-integrated volume density at fixed t >= 0: integral over
// |t^2 + u^3| <= 1 of min(1, t^{-1/3}, |u|^{-1/4}).
double slice_3d(double t) {
  const double c = t <= 1.0 ? 1.0 : std::cbrt(1.0 / t);
  const double a = -std::cbrt(1.0 + t * t);
  const double b = std::cbrt(1.0 - t * t);
  if (t > 1.0 && -a <= std::pow(c, -4.0)) {
    const double A = -a, Bv = std::cbrt(t * t - 1.0);
    return c * 2.0 / (A * A + A * Bv + Bv * Bv);
  }
  return G(b, c) - G(a, c);
}

double omega_g3_route(double tol, bool cube) {
  auto f = [&](double v) {
    const double alpha = cube ? v * v * v : v;
    return g3(std::max(alpha, std::numeric_limits<double>::min()), tol * 1e-2);
  };
  std::vector<double> cuts{0.0, kAlphaKink1, kAlphaKink2, 1.0};
  if (cube) {
    cuts[1] = std::cbrt(kAlphaKink1);
    cuts[2] = std::cbrt(kAlphaKink2);
  }
  return 12.0 * integrate_pieces(f, cuts, tol);
}

}  // namespace

double g1(double v) {
  check_v(v, "g1");
  const double iv2 = 1.0 / (v * v);
  return -std::cbrt(std::min(iv2 * iv2, 1.0 + iv2));
}

double g21(double u, double) { return u <= -1.0 ? std::sqrt(-1.0 - u * u * u) : 0.0; }

double g22(double u, double v) {
  const double knee = -std::cbrt(1.0 / (v * v) - 1.0);
  return u >= knee ? std::sqrt(1.0 - u * u * u) : 1.0 / v;
}

double g2(double u, double v) {
  if (!(v > 0.0 && v <= 1.0) || u > 1.0 || u < g1(v)) return 0.0;
  const double u3 = u * u * u;
  const double iv2 = 1.0 / (v * v);
  const double hi = std::sqrt(std::min(iv2, 1.0 - u3));
  if (u3 >= -1.0) return hi;
  // hi - lo = (hi^2 - lo^2) / (hi + lo), free of cancellation for large |u|.
  const double lo = std::sqrt(-1.0 - u3);
  const double diff_sq = 1.0 - u3 <= iv2 ? 2.0 : iv2 + 1.0 + u3;
  return std::max(0.0, diff_sq) / (hi + lo);
}

double g2_numeric(double u, double v) {
  check_v(v, "g2_numeric");
  const double u3 = u * u * u;
  const double tmax = 1.0 / v;
  // -1 - u^3 <= t^2 <= 1 - u^3, each side formed once.
  const double lower = -1.0 - u3, upper = 1.0 - u3;
  double t_lo = 0.0;
  if (lower > 0.0) {
    double hi = 1.0;
    while (hi * hi < lower) hi *= 2.0;
    t_lo = bisect_last_true([&](double t) { return t * t < lower; }, 0.0, hi);
    t_lo = std::nextafter(t_lo, hi);
    if (t_lo * t_lo < lower) t_lo = std::nextafter(t_lo, hi);
  }
  double t_hi = tmax;
  if (tmax * tmax > upper) t_hi = bisect_last_true([&](double t) { return t * t <= upper; }, 0.0, tmax);
  if (t_hi < t_lo) return 0.0;
  return integrate([](double) { return 1.0; }, t_lo, t_hi, 1e-14);
}

std::vector<double> g2_breakpoints(double v) {
  check_v(v, "g2_breakpoints");
  const double lo = g1(v);
  std::vector<double> cuts{lo, 1.0};
  for (double c : {-1.0, 0.0, -std::cbrt(1.0 / (v * v) - 1.0)})
    if (c > lo && c < 1.0) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

double g3(double v, double tol) {
  check_v(v, "g3");
  const auto cuts = g2_breakpoints(v);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b <= -1.0) {
      // u = -1/w^2 flattens the |u|^{-3/2} decay of long negative pieces.
      auto f = [v](double w) { return g2(-1.0 / (w * w), v) * 2.0 / (w * w * w); };
      s += integrate(f, 1.0 / std::sqrt(-a), 1.0 / std::sqrt(-b), tol);
    } else {
      s += integrate([v](double u) { return g2(u, v); }, a, b, tol);
    }
  }
  return s;
}

double integral_D1_g2(double v, bool absolute) {
  const auto cuts = g2_breakpoints(v);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    auto d = [&](double u) {
      const double h = std::min(1e-6, 1e-3 * std::min(u - a, b - u));
      if (!(h > 0.0)) return 0.0;
      const double val = (g2(u + h, v) - g2(u - h, v)) / (2.0 * h);
      return absolute ? std::fabs(val) : val;
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    s += ts.integrate(d, a, b, 1e-10);
  }
  return s;
}

double omega_inf_3d(double tol) {
  // t in [0, 1], then t = w^{-3/2} on the tail.
  const double head = integrate(slice_3d, 0.0, 1.0, tol);
  auto tail_f = [](double w) {
    if (w <= 0.0) return 0.0;
    const double t = std::pow(w, -1.5);
    return slice_3d(t) * 1.5 * std::pow(w, -2.5);
  };
  // Beyond t^2 = golden ratio the whole u-slice has |u| <= t^{4/3}.
  const double w_knee = std::pow((1.0 + std::sqrt(5.0)) / 2.0, -1.0 / 3.0);
  const double tail = integrate(tail_f, 0.0, w_knee, tol) + integrate(tail_f, w_knee, 1.0, tol);
  return 12.0 * (head + tail);
}

double omega_inf_g3(double tol) { return omega_g3_route(tol, true); }

double omega_inf_g3_literal(double tol) { return omega_g3_route(tol, false); }

RegionParams region_params(const XiVector& xi, i64 bound) {
  if (bound < 1) throw std::domain_error("region_params: B must be positive");
  for (i64 x : xi)
    if (x < 1) throw std::domain_error("region_params: xi must be positive");
  const i128 h = monomial_capped(xi, monomials::kX2, bound);
  if (h > bound) throw OutOfRegion("region_params: xi^(2,3,4,3,4,5,6) exceeds B");
  const double B = static_cast<double>(bound);
  auto d = [&](XiIndex i) { return static_cast<double>(xi[i]); };
  RegionParams r;
  r.bound = bound;
  r.alpha = std::sqrt(static_cast<double>(h) / B);
  r.X1 = std::cbrt(B) * std::pow(d(kXi1), -2.0 / 3.0) * std::pow(d(kXi3), -1.0 / 3.0) * d(kXiL) *
         std::pow(d(kXi4), 2.0 / 3.0) * std::cbrt(d(kXi5));
  r.X2 = std::sqrt(B / d(kXi2)) * std::pow(d(kXiL), 1.5) * d(kXi4) * std::sqrt(d(kXi5));
  return r;
}

}  // namespace e6
