#include "casimir/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir::asymptotic {

namespace {

constexpr double kPi = std::numbers::pi;

double one_minus_r2e(double r2, double y) {
  const double x = r2 * std::exp(-y);
  if (x < 0.5) return 1.0 - x;
  return (1.0 - r2) - r2 * std::expm1(-y);
}

SmallParameters small_parameters(const PlateSystem& sys, const MetalScales& metal, double gamma) {
  SmallParameters p;
  p.tau = reduced_temperature(sys);
  p.alpha = metal.alpha;
  p.gamma_over_omega_p = gamma / metal.omega_p;
  p.gamma_over_xi1 = sys.T > 0.0 ? gamma / matsubara_xi(sys, 1) : 0.0;
  return p;
}

Expansion make_expansion(double value, const SmallParameters& p) {
  ExpansionInput in{p.alpha, p.tau, p.gamma_over_omega_p, 0.0};
  return Expansion{value, p, in_validity_window(in)};
}

// B_{2k} / (2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
double bernoulli_over_factorial_even(int k) {
  const double s = 2.0 * k;
  constexpr double n = 40.0;
  // Euler-Maclaurin tail past n.
  double z = std::pow(n, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(n, -s) + s * std::pow(n, -s - 1.0) / 12.0 -
             s * (s + 1.0) * (s + 2.0) * std::pow(n, -s - 3.0) / 720.0;
  for (int j = 40; j >= 1; --j) z += std::pow(static_cast<double>(j), -s);
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * 2.0 * z / std::pow(2.0 * kPi, 2.0 * k);
}

std::array<double, 7> y_breaks(double zeta) {
  return {zeta, zeta + 0.5, zeta + 2.0, zeta + 5.0, zeta + 10.0, zeta + 20.0, zeta + 45.0};
}

// y [R_par e^-y / (1 - r_par,p^2 e^-y) + R_perp e^-y / (1 - r_perp,p^2 e^-y)]
double first_order_integrand(double zeta, double y, double alpha) {
  const auto rf = r_functions_full(zeta, y, alpha);
  const auto rp = reflect_from_eps(1.0 + 1.0 / (alpha * alpha * zeta * zeta), zeta, y);
  const double e = std::exp(-y);
  return y * e * (rf.r_par / one_minus_r2e(rp.r_par_sq, y) + rf.r_perp / one_minus_r2e(rp.r_perp_sq, y));
}

QuadratureSpec checked(const QuadratureSpec& spec) {
  validate(spec);
  return spec;
}

}  // namespace

ExpansionInput make_expansion_input(const PlateSystem& sys, const MetalScales& metal, double gamma,
                                    double gamma0) {
  return ExpansionInput{metal.alpha, reduced_temperature(sys), gamma / metal.omega_p, gamma0};
}

bool in_validity_window(const ExpansionInput& in) {
  return in.alpha > 0.0 && in.alpha <= 0.1 && in.tau > 0.0 && in.tau <= 0.05;
}

RFunctions r_functions_full(double zeta, double y, double alpha) {
  if (!(zeta > 0.0) || !(y >= zeta) || !(alpha > 0.0)) {
    throw std::invalid_argument("r_functions_full: requires y >= zeta > 0 and alpha > 0");
  }
  const auto rp = reflect_from_eps(1.0 + 1.0 / (alpha * alpha * zeta * zeta), zeta, y);
  const double q = std::sqrt(1.0 + alpha * alpha * y * y);
  const double ay = alpha * y;
  const double z2 = zeta * zeta;
  const double den_par = y + alpha * z2 * (ay + q);
  const double r_par = 2.0 * z2 * alpha * y * (1.0 + alpha * alpha * (2.0 * y * y - z2)) *
                       std::sqrt(rp.r_par_sq) / (q * den_par * den_par);
  const double r_perp = 2.0 * ay * std::sqrt(rp.r_perp_sq) / (q * (ay + q) * (ay + q));
  return {r_par, r_perp};
}

RFunctions r_functions_small_alpha(double zeta, double y, double alpha) {
  if (!(zeta > 0.0) || !(y >= zeta)) {
    throw std::invalid_argument("r_functions_small_alpha: requires y >= zeta > 0");
  }
  return {2.0 * zeta * zeta * alpha / y, 2.0 * y * alpha};
}

Expansion plasma_free_energy_low_t(const PlateSystem& sys, const MetalScales& metal, double energy_T0) {
  const double tau = reduced_temperature(sys);
  const double d = metal.delta0_over_a();
  const double z3 = kPhys.zeta3;
  const double a3 = sys.a * sys.a * sys.a;
  const double bracket = (1.0 + 2.0 * d) * tau * tau * tau -
                         std::pow(kPi, 3) / (45.0 * z3) * (1.0 + 4.0 * d) * std::pow(tau, 4);
  const double value = energy_T0 - kPhys.hbar * kPhys.c * z3 / (16.0 * kPi * a3) * bracket;
  return make_expansion(value, small_parameters(sys, metal, 0.0));
}

Expansion plasma_free_energy_low_t(const PlateSystem& sys, const MetalScales& metal,
                                   const QuadratureSpec& spec) {
  const auto e = free_energy_T0(Reflector(PermittivityModel(PlasmaModel{metal.omega_p})), sys, spec);
  return plasma_free_energy_low_t(sys, metal, e.value);
}

Expansion plasma_entropy_low_t(const PlateSystem& sys, const MetalScales& metal) {
  const double tau = reduced_temperature(sys);
  const double d = metal.delta0_over_a();
  const double c = std::pow(kPi, 3) / (135.0 * kPhys.zeta3);
  const double value = 3.0 * kPhys.k_B * kPhys.zeta3 / (8.0 * kPi * sys.a * sys.a) * tau * tau *
                       (1.0 - 4.0 * c * tau + 2.0 * d * (1.0 - 8.0 * c * tau));
  return make_expansion(value, small_parameters(sys, metal, 0.0));
}

double linear_term_series(double x) {
  if (!(x >= 0.0 && x <= 0.2)) throw std::invalid_argument("linear_term_series: delta0/a must lie in [0, 0.2]");
  const double r = kPhys.zeta5 / kPhys.zeta3;
  return 1.0 - 4.0 * x + 12.0 * x * x - 32.0 * std::pow(x, 3) * (1.0 - r / 16.0) +
         80.0 * std::pow(x, 4) * (1.0 - r / 4.0);
}

double linear_term_quadrature(double delta0_over_a) {
  if (!(delta0_over_a > 0.0)) return 1.0;
  const auto q = plasma_zero_mode_te_integral(2.0 / delta0_over_a);
  return -q.value / kPhys.zeta3;
}

double s0_drude(const PlateSystem& sys, const MetalScales& metal) {
  const auto q = plasma_zero_mode_te_integral(metal.omega_p_tilde);
  return kPhys.k_B / (16.0 * kPi * sys.a * sys.a) * q.value;
}

double s0_drude_series(const PlateSystem& sys, const MetalScales& metal) {
  return -kPhys.k_B * kPhys.zeta3 / (16.0 * kPi * sys.a * sys.a) * linear_term_series(metal.delta0_over_a());
}

double drude_entropy_limit(const PlateSystem& sys, const MetalScales& metal) { return s0_drude(sys, metal); }

double bose_integral_0(double zeta) {
  if (!(zeta > 0.0)) throw std::invalid_argument("bose_integral_0: zeta must be positive");
  return -std::log(-std::expm1(-zeta));
}

double bose_integral_2(double zeta) {
  if (!(zeta >= 0.0)) throw std::invalid_argument("bose_integral_2: zeta must be non-negative");
  if (zeta >= 2.0) {
    // sum_k e^-k zeta (zeta^2 / k + 2 zeta / k^2 + 2 / k^3)
    quad::CompensatedSum s;
    for (int k = 1; k < 200; ++k) {
      const double kk = k;
      const double t = std::exp(-kk * zeta) * (zeta * zeta / kk + 2.0 * zeta / (kk * kk) + 2.0 / (kk * kk * kk));
      s.add(t);
      if (t < 1e-18 * s.value()) break;
    }
    return s.value();
  }
  // 2 zeta(3) - int_0^zeta y^2 / (e^y - 1), with y / (e^y - 1) = sum B_n y^n / n!.
  double head = zeta * zeta / 2.0 - zeta * zeta * zeta / 6.0;
  for (int k = 1; k <= 40; ++k) {
    const int n = 2 * k;
    const double t = bernoulli_over_factorial_even(k) * std::pow(zeta, n + 2) / (n + 2);
    head += t;
    if (std::abs(t) < 1e-18 * head) break;
  }
  return 2.0 * kPhys.zeta3 - head;
}

GammaSums gamma_sums_exact(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("gamma_sums_exact: tau must be positive");
  const double step = 2.0 * kPi * tau;
  quad::CompensatedSum s1, s2;
  for (long l = 1;; ++l) {
    const double z = step * static_cast<double>(l);
    if (z > 80.0) break;
    s1.add(z * bose_integral_0(z));
    s2.add(bose_integral_2(z) / z);
  }
  return {s1.value(), s2.value()};
}

GammaSums gamma_sums_kform(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("gamma_sums_kform: tau must be positive");
  const double step = 2.0 * kPi * tau;
  quad::CompensatedSum a, b, c, d;  // first; ln sum; 1/(k^2 em); (1/em + 1/em^2)/k
  for (long k = 1;; ++k) {
    const double kk = static_cast<double>(k);
    const double x = step * kk;
    if (x > 80.0) break;
    const double em = std::expm1(x);
    const double bose = 1.0 / em + 1.0 / (em * em);
    a.add(bose / kk);
    b.add(std::log(-std::expm1(-x)) / (kk * kk * kk));
    c.add(1.0 / (kk * kk * em));
    d.add(bose / kk);
  }
  GammaSums out;
  out.first = step * a.value();
  out.second = (-2.0 * b.value() + 2.0 * step * c.value() + step * step * d.value()) / step;
  return out;
}

GammaSums gamma_sums_asymptotic(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("gamma_sums_asymptotic: tau must be positive");
  const double z2 = kPhys.zeta2;
  const double z3 = kPhys.zeta3;
  const double u = 2.0 * kPi * tau;
  return {z3 / u + z2, -(z3 / (kPi * tau)) * std::log(u) + 3.0 * z3 / u + 2.0 * z2};
}

Expansion f_gamma_exact(const PlateSystem& sys, const MetalScales& metal, double gamma) {
  const auto p = small_parameters(sys, metal, gamma);
  if (gamma == 0.0) return make_expansion(0.0, p);
  const auto s = gamma_sums_exact(p.tau);
  const double value = p.gamma_over_omega_p * kPhys.k_B * sys.T / (4.0 * kPi * sys.a * sys.a) * (s.first + s.second);
  return make_expansion(value, p);
}

Expansion f_gamma_asymptotic(const PlateSystem& sys, const MetalScales& metal, double gamma) {
  const auto p = small_parameters(sys, metal, gamma);
  const double bracket =
      -std::log(2.0 * kPi * p.tau) + 2.0 + 3.0 * kPi * kPhys.zeta2 / kPhys.zeta3 * p.tau;
  const double value =
      p.gamma_over_omega_p * kPhys.k_B * sys.T_eff * kPhys.zeta3 / (4.0 * kPi * kPi * sys.a * sys.a) * bracket;
  return make_expansion(value, p);
}

Expansion s_gamma_asymptotic(const PlateSystem& sys, const MetalScales& metal, double gamma0) {
  const double gamma = gamma0 * sys.T * sys.T;
  auto p = small_parameters(sys, metal, gamma);
  const double bracket =
      -2.0 * std::log(2.0 * kPi * p.tau) + 3.0 + 9.0 * kPi * kPhys.zeta2 / kPhys.zeta3 * p.tau;
  const double value =
      -kPhys.k_B * kPhys.zeta3 / (4.0 * kPi * kPi * sys.a * sys.a) * p.gamma_over_omega_p / p.tau * bracket;
  return make_expansion(value, p);
}

ThermoResult f_gamma_first_order(const PlateSystem& sys, const MetalScales& metal, double gamma,
                                 const QuadratureSpec& spec_in, Execution exec) {
  const auto spec = checked(spec_in);
  if (!(sys.T > 0.0)) throw std::invalid_argument("f_gamma_first_order: T must be positive");
  const double gt = gamma / sys.omega_c;
  const double alpha = metal.alpha;
  const double term_tol = 0.25 * spec.rel_tol;
  auto term = [&](long l) {
    const double zeta = zeta_l(sys, l);
    auto f = [&](double y) { return first_order_integrand(zeta, y, alpha); };
    const auto breaks = y_breaks(zeta);
    const auto q = quad::integrate(f, std::span<const double>(breaks), term_tol, 0.0, spec.max_subdivisions);
    return IntegralResult{gt / zeta * q.value, gt / zeta * q.error, q.subdivisions, q.converged};
  };
  QuadratureSpec series_spec = spec;
  series_spec.abs_floor = spec.abs_floor * std::min(1.0, gamma / matsubara_xi(sys, 1));
  const auto s = matsubara_series(term, sys, 1, 1.0, series_spec, exec);
  const double pref = lifshitz_prefactor(sys);
  return ThermoResult{pref * s.sum, s.l_max, pref * s.error, s.converged, false};
}

ThermoResult first_order_residual(const PlateSystem& sys, const MetalScales& metal, double gamma,
                                  const QuadratureSpec& spec_in, Execution exec) {
  const auto spec = checked(spec_in);
  if (!(sys.T > 0.0)) throw std::invalid_argument("first_order_residual: T must be positive");
  const double gt = gamma / sys.omega_c;
  const double wpt = metal.omega_p_tilde;
  const double alpha = metal.alpha;
  const double term_tol = 0.25 * spec.rel_tol;
  auto term = [&](long l) {
    const double zeta = zeta_l(sys, l);
    const double g = gt / zeta;
    auto f = [&](double y) {
      const auto d = drude_plasma_log_difference(wpt, gt, zeta, y);
      return y * (d.r_par_sq + d.r_perp_sq) - g * first_order_integrand(zeta, y, alpha);
    };
    const auto breaks = y_breaks(zeta);
    // Resolve the remainder relative to its expected (gamma / xi)^2 size.
    const double scale = std::min(1.0, g * g) * (1.0 + zeta) * std::exp(-zeta);
    // The subtraction leaves roundoff of order eps * g of the full integrand.
    const double noise = 1e-12 * g * (1.0 + zeta) * std::exp(-zeta);
    const auto q = quad::integrate(f, std::span<const double>(breaks), term_tol,
                                   1e-4 * term_tol * scale + noise, spec.max_subdivisions);
    return IntegralResult{q.value, q.error, q.subdivisions, q.converged};
  };
  QuadratureSpec series_spec = spec;
  const double r = std::min(1.0, gamma / matsubara_xi(sys, 1));
  series_spec.abs_floor = spec.abs_floor * r * r;
  const auto s = matsubara_series(term, sys, 1, 1.0, series_spec, exec);
  const double pref = lifshitz_prefactor(sys);
  return ThermoResult{pref * s.sum, s.l_max, pref * s.error, s.converged, false};
}

RegimeGuard regime_guard(const PlateSystem& sys, const MetalScales& metal, double gamma,
                         const QuadratureSpec& spec) {
  const double xi1 = matsubara_xi(sys, 1);
  const auto first = f_gamma_first_order(sys, metal, gamma, spec);
  const auto resid = first_order_residual(sys, metal, gamma, spec);
  // Quadratic extrapolation from a reference gamma deep in the expansion regime.
  const double gamma_ref = 1e-3 * xi1;
  const auto ref = first_order_residual(sys, metal, gamma_ref, spec);
  RegimeGuard g{};
  g.gamma_over_xi1 = gamma / xi1;
  g.first_order = first.value;
  g.residual = resid.value;
  g.relative_residual = std::abs(resid.value / first.value);
  g.small_gamma_trend = ref.value * (gamma / gamma_ref) * (gamma / gamma_ref);
  g.departs_from_trend = std::abs(resid.value - g.small_gamma_trend) > 0.25 * std::abs(g.small_gamma_trend);
  g.expansion_valid = g.relative_residual <= 0.1 && !g.departs_from_trend;
  return g;
}

}  // namespace casimir::asymptotic
