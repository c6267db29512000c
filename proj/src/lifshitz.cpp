#include "casimir/lifshitz.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kMaxTerms = 5'000'000;
constexpr double kMinStopZeta = 30.0;

// 1 - r2 e^-y, accurate both for small r2 e^-y and for r2 -> 1, y -> 0.
double one_minus_r2e(double r2, double y) {
  const double x = r2 * std::exp(-y);
  if (x < 0.5) return 1.0 - x;
  return (1.0 - r2) - r2 * std::expm1(-y);
}

double log_one_minus_r2e(double r2, double y) {
  const double x = r2 * std::exp(-y);
  if (x < 0.5) return std::log1p(-x);
  return std::log((1.0 - r2) - r2 * std::expm1(-y));
}

// Integration length past zeta; e^-L stays well below the tolerance.
double tail_length(double rel_tol) { return 40.0 + std::max(0.0, std::log(1e-10 / rel_tol)); }

// |int_Y^inf y [ln(1 - r1 e^-y) + ln(1 - r2 e^-y)] dy| <= 2 (Y + 1) e^-Y / (1 - e^-Y).
double integral_tail_bound(double Y) { return 2.0 * (Y + 1.0) * std::exp(-Y) / -std::expm1(-Y); }

std::array<double, 7> y_breaks(double zeta, double length) {
  return {zeta, zeta + 0.5, zeta + 2.0, zeta + 5.0, zeta + 10.0, zeta + 20.0, zeta + length};
}

class SeriesAccumulator {
 public:
  SeriesAccumulator(const PlateSystem& sys, double zero_weight, double rel_tol, double abs_tol)
      : sys_(sys), zero_weight_(zero_weight), rel_tol_(rel_tol), abs_tol_(abs_tol) {}

  // Returns true once the stopping rule is met after adding term l.
  bool add(long l, const IntegralResult& r) {
    const double w = (l == 0) ? zero_weight_ : 1.0;
    const double contrib = w * r.value;
    sum_.add(contrib);
    error_ += w * r.error;
    converged_terms_ = converged_terms_ && r.converged;
    l_max_ = l;
    const double scale = std::max(abs_tol_, rel_tol_ * std::abs(sum_.value()));
    small_run_ = (std::abs(contrib) < scale) ? small_run_ + 1 : 0;
    if (zeta_l(sys_, l) <= kMinStopZeta || small_run_ < 3) return false;
    const double tail = matsubara_tail_bound(sys_, l);
    if (tail > scale) return false;
    error_ += tail;
    done_ = true;
    return true;
  }

  SeriesResult result() const {
    return SeriesResult{sum_.value(), error_, l_max_, done_ && converged_terms_};
  }

 private:
  PlateSystem sys_;
  double zero_weight_;
  double rel_tol_;
  double abs_tol_;
  quad::CompensatedSum sum_;
  double error_ = 0.0;
  long l_max_ = -1;
  int small_run_ = 0;
  bool converged_terms_ = true;
  bool done_ = false;
};

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0 && spec.rel_tol <= 1e-3)) {
    throw std::invalid_argument("QuadratureSpec: rel_tol must lie in (0, 1e-3]");
  }
  if (spec.max_subdivisions < 10) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 10");
  if (!(spec.abs_floor >= 0.0)) throw std::invalid_argument("QuadratureSpec: abs_floor must be >= 0");
}

IntegralResult mode_integral(const ModeReflection& mode, double zeta, double rel_tol, double abs_tol,
                             int max_panels) {
  auto f = [&mode](double y) {
    const auto r = mode(y);
    return y * (log_one_minus_r2e(r.r_par_sq, y) + log_one_minus_r2e(r.r_perp_sq, y));
  };
  const double length = tail_length(rel_tol);
  const auto breaks = y_breaks(zeta, length);
  const auto q = quad::integrate(f, std::span<const double>(breaks), rel_tol, abs_tol, max_panels);
  const double tail = integral_tail_bound(zeta + length);
  const double err = q.error + tail;
  return IntegralResult{q.value, err, q.subdivisions,
                        q.converged && err <= std::max(abs_tol, rel_tol * std::abs(q.value)) + tail};
}

IntegralResult matsubara_integral(const Reflector& r, const PlateSystem& sys, long l,
                                  const QuadratureSpec& spec) {
  validate(spec);
  const auto mode = mode_reflection(r, sys, l);
  return mode_integral(mode, zeta_l(sys, l), spec.rel_tol, 0.0, spec.max_subdivisions);
}

double matsubara_tail_bound(const PlateSystem& sys, long l) {
  const double step = zeta_l(sys, 1);
  const double z = zeta_l(sys, l);
  const double z_next = z + step;
  // |I(m)| <= 2 (1 + zeta_m) e^-zeta_m / (1 - e^-zeta_m); the sum over m > l is
  // bounded by the integral of the decreasing envelope from zeta_l.
  return 2.0 * (2.0 + z) * std::exp(-z) / (step * -std::expm1(-z_next));
}

double lifshitz_prefactor(const PlateSystem& sys) {
  return kPhys.k_B * sys.T / (8.0 * kPi * sys.a * sys.a);
}

SeriesResult matsubara_series(const std::function<IntegralResult(long)>& term, const PlateSystem& sys,
                              long first, double zero_weight, const QuadratureSpec& spec,
                              Execution exec) {
  if (!(sys.T > 0.0)) throw std::invalid_argument("matsubara_series: temperature must be positive");
  const double abs_tol = spec.abs_floor / lifshitz_prefactor(sys);
  SeriesAccumulator acc(sys, zero_weight, 0.25 * spec.rel_tol, 0.25 * abs_tol);

  if (exec == Execution::Serial) {
    for (long l = first; l < kMaxTerms; ++l) {
      if (acc.add(l, term(l))) return acc.result();
    }
    return acc.result();
  }

  long next = first;
  long block = 32;
  std::vector<IntegralResult> buffer;
  while (next < kMaxTerms) {
    buffer.assign(static_cast<std::size_t>(block), IntegralResult{});
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < block; ++i) {
      try {
        buffer[static_cast<std::size_t>(i)] = term(next + i);
      } catch (...) {
#pragma omp critical(casimir_series_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (long i = 0; i < block; ++i) {
      if (acc.add(next + i, buffer[static_cast<std::size_t>(i)])) return acc.result();
    }
    next += block;
    block = std::min<long>(2 * block, 2048);
  }
  return acc.result();
}

ThermoResult free_energy(const Reflector& r, const PlateSystem& sys, const QuadratureSpec& spec,
                         Execution exec) {
  validate(spec);
  if (!(sys.T > 0.0)) {
    throw std::invalid_argument("free_energy: T must be positive; use free_energy_T0 at T = 0");
  }
  if (sys.T < sys.T_eff * spec.min_reduced_temperature) {
    throw LowTemperatureError("free_energy: T = " + std::to_string(sys.T) +
                              " K is below the direct-summation limit; use the low-temperature expansions");
  }
  const double term_tol = 0.25 * spec.rel_tol;
  const double abs_tol = 1e-3 * spec.abs_floor / lifshitz_prefactor(sys);
  auto term = [&](long l) {
    const auto mode = mode_reflection(r, sys, l);
    return mode_integral(mode, zeta_l(sys, l), term_tol, abs_tol, spec.max_subdivisions);
  };
  const auto s = matsubara_series(term, sys, 0, 0.5, spec, exec);
  const double pref = lifshitz_prefactor(sys);
  ThermoResult out;
  out.value = pref * s.sum;
  out.est_error = pref * s.error;
  out.l_max_used = s.l_max;
  out.converged = s.converged && out.est_error <= std::max(spec.rel_tol * std::abs(out.value), spec.abs_floor);
  return out;
}

ThermoResult free_energy_T0(const Reflector& r, const PlateSystem& sys, const QuadratureSpec& spec) {
  validate(spec);
  const double inner_tol = 0.01 * spec.rel_tol;
  bool inner_ok = true;
  auto g = [&](double zeta) {
    const auto mode = mode_reflection_at(r, sys, zeta);
    const auto q = mode_integral(mode, zeta, inner_tol, 0.0, std::max(spec.max_subdivisions, 100));
    inner_ok = inner_ok && q.converged;
    return q.value;
  };
  constexpr double kZetaMax = 60.0;
  const std::array<double, 8> breaks{0.0, 0.5, 2.0, 5.0, 10.0, 20.0, 40.0, kZetaMax};
  const auto q = quad::integrate(g, std::span<const double>(breaks), 0.25 * spec.rel_tol, 0.0,
                                 std::max(spec.max_subdivisions, 200));
  const double outer_tail = 2.0 * (2.0 + kZetaMax) * std::exp(-kZetaMax);
  const double pref = kPhys.hbar * kPhys.c / (32.0 * kPi * kPi * sys.a * sys.a * sys.a);
  ThermoResult out;
  out.value = pref * q.value;
  out.est_error = pref * (q.error + outer_tail);
  out.l_max_used = q.subdivisions;
  out.converged = q.converged && inner_ok &&
                  out.est_error <= std::max(spec.rel_tol * std::abs(out.value), spec.abs_floor);
  return out;
}

ReflectionPair drude_plasma_log_difference(double wpt, double gt, double zeta, double y) {
  const double w2 = wpt * wpt;
  const double eps_p = 1.0 + w2 / (zeta * zeta);
  const double deps = -w2 * gt / (zeta * zeta * (zeta + gt));  // eps_D - eps_p
  const double eps_d = eps_p + deps;
  const double s_p = std::hypot(wpt, y);
  const double s_d = std::sqrt(w2 * zeta / (zeta + gt) + y * y);
  const double ds = deps * zeta * zeta / (s_d + s_p);  // s_D - s_p

  // Signed amplitudes r = (y - s)/(y + s) and (y eps - s)/(y eps + s).
  const double rp_perp = (y - s_p) / (y + s_p);
  const double rd_perp = (y - s_d) / (y + s_d);
  const double dr_perp = 2.0 * y * ds / ((y + s_p) * (y + s_d));  // r_p - r_D

  const double rp_par = (y * eps_p - s_p) / (y * eps_p + s_p);
  const double rd_par = (y * eps_d - s_d) / (y * eps_d + s_d);
  const double dr_par = 2.0 * y * (eps_p * ds - deps * s_p) / ((y * eps_p + s_p) * (y * eps_d + s_d));

  const double e = std::exp(-y);
  auto diff = [&](double rp, double rd, double dr) {
    const double d2 = dr * (rp + rd);  // r_p^2 - r_D^2
    return std::log1p(d2 * e / one_minus_r2e(rp * rp, y));
  };
  return {diff(rp_par, rd_par, dr_par), diff(rp_perp, rd_perp, dr_perp)};
}

IntegralResult plasma_zero_mode_te_integral(double omega_p_tilde, double rel_tol) {
  auto f = [omega_p_tilde](double y) {
    return y * log_one_minus_r2e(plasma_zero_mode(omega_p_tilde, y).r_perp_sq, y);
  };
  const double length = tail_length(rel_tol);
  const auto breaks = y_breaks(0.0, length);
  const auto q = quad::integrate(f, std::span<const double>(breaks), rel_tol, 0.0, 200);
  const double tail = 0.5 * integral_tail_bound(length);
  return IntegralResult{q.value, q.error + tail, q.subdivisions, q.converged};
}

DrudeDecomposition decomposed_free_energy_drude(const PlateSystem& sys, const MetalScales& metal,
                                                const RelaxationModel& relax, const QuadratureSpec& spec,
                                                Execution exec) {
  validate(spec);
  DrudeDecomposition out{};
  out.plasma = free_energy(Reflector(PermittivityModel(PlasmaModel{metal.omega_p})), sys, spec, exec);

  const double pref = lifshitz_prefactor(sys);
  const auto zm = plasma_zero_mode_te_integral(metal.omega_p_tilde, 0.01 * spec.rel_tol);
  out.zero_mode_term = -0.5 * pref * zm.value;

  const double wpt = metal.omega_p_tilde;
  const double gt = gamma_of_T(relax, sys.T) / sys.omega_c;
  const double term_tol = 0.25 * spec.rel_tol;
  // Differences are small next to F; give them the absolute scale of the
  // full terms so tiny differences are not over-resolved.
  auto term = [&](long l) {
    const double zeta = zeta_l(sys, l);
    auto f = [&](double y) {
      const auto d = drude_plasma_log_difference(wpt, gt, zeta, y);
      return y * (d.r_par_sq + d.r_perp_sq);
    };
    const double length = tail_length(term_tol);
    const auto breaks = y_breaks(zeta, length);
    const double scale = 2.0 * (1.0 + zeta) * std::exp(-zeta);
    const auto q = quad::integrate(f, std::span<const double>(breaks), term_tol, 1e-3 * term_tol * scale,
                                   spec.max_subdivisions);
    return IntegralResult{q.value, q.error + integral_tail_bound(zeta + length), q.subdivisions, q.converged};
  };
  const auto s = matsubara_series(term, sys, 1, 1.0, spec, exec);
  out.difference_sum = pref * s.sum;
  out.difference_error = pref * s.error;

  out.total.value = out.plasma.value + out.zero_mode_term + out.difference_sum;
  out.total.est_error = out.plasma.est_error + pref * 0.5 * zm.error + out.difference_error;
  out.total.l_max_used = std::max(out.plasma.l_max_used, s.l_max);
  out.total.converged = out.plasma.converged && zm.converged && s.converged;
  return out;
}

}  // namespace casimir
