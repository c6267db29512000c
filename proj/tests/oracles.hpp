// Reference values computed independently of the library: plain series
// and a simple adaptive Simpson rule.

#pragma once

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kB = 1.380649e-23;
inline constexpr double kHbar = 1.054571817e-34;
inline constexpr double kC = 299792458.0;
inline constexpr double kZeta3 = 1.2020569031595942854;

namespace detail {
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson on [a, b] to absolute tolerance tol.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, 50);
}

/// Simpson over consecutive panels [x_i, x_{i+1}].
inline double simpson_panels(const std::function<double(double)>& f, std::initializer_list<double> xs, double tol) {
  double s = 0.0;
  const double* p = xs.begin();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) s += simpson(f, p[i], p[i + 1], tol);
  return s;
}

/// int_zeta^inf dy / (e^y - 1) = sum_k e^{-k zeta} / k.
inline double bose0(double zeta) {
  double s = 0.0;
  for (int k = 1;; ++k) {
    const double t = std::exp(-k * zeta) / k;
    s += t;
    if (t < 1e-17 * s) return s;
  }
}

/// int_zeta^inf y^2 dy / (e^y - 1) = sum_k e^{-k zeta} (zeta^2 / k + 2 zeta / k^2 + 2 / k^3).
inline double bose2(double zeta) {
  double s = 0.0;
  for (int k = 1;; ++k) {
    const double kk = k;
    const double t = std::exp(-kk * zeta) * (zeta * zeta / kk + 2.0 * zeta / (kk * kk) + 2.0 / (kk * kk * kk));
    s += t;
    if (t < 1e-17 * s) return s;
  }
}

/// int_zeta^inf y [2 ln(1 - rho e^-y)] dy for constant rho (both polarizations).
inline double constant_rho_integral(double rho, double zeta) {
  double s = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const double t = std::pow(rho, k) * (1.0 + k * zeta) * std::exp(-k * zeta) / (1.0 * k * k * k);
    s += t;
    if (t < 1e-18 * s) break;
  }
  return -2.0 * s;
}

/// Plasma TE coefficient at zero frequency.
inline double plasma_te0_sq(double wpt, double y) {
  const double s = std::sqrt(wpt * wpt + y * y);
  const double r = (s - y) / (s + y);
  return r * r;
}

/// -int_0^inf y ln(1 - r_perp,p^2(0, y) e^-y) dy / zeta(3), x = delta0 / a.
inline double linear_bracket(double x) {
  const double wpt = 2.0 / x;
  auto f = [wpt](double y) { return y > 0.0 ? y * std::log1p(-plasma_te0_sq(wpt, y) * std::exp(-y)) : 0.0; };
  return -simpson_panels(f, {0.0, 0.5, 2.0, 5.0, 10.0, 20.0, 40.0, 80.0}, 1e-14) / kZeta3;
}

}  // namespace oracle
