#include "casimir/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

namespace {

// Truncation error of the extrapolated difference that marks a result step-limited.
constexpr double kStepTolerance = 1e-6;

struct Stencil {
  double value;
  double quad_error;
  long l_max;
  bool converged;
};

// -(f(x + h) - f(x - h)) / (2h), optionally Richardson-extrapolated with h/2.
template <class Eval>
ThermoResult negative_derivative(Eval&& eval, double x, double h, bool richardson, double rel_tol) {
  auto central = [&](double step) {
    const ThermoResult up = eval(x + step);
    const ThermoResult down = eval(x - step);
    return Stencil{-(up.value - down.value) / (2.0 * step), (up.est_error + down.est_error) / (2.0 * step),
                   std::max(up.l_max_used, down.l_max_used), up.converged && down.converged};
  };
  const Stencil coarse = central(h);
  ThermoResult out;
  if (!richardson) {
    out.value = coarse.value;
    out.est_error = coarse.quad_error;
    out.l_max_used = coarse.l_max;
    out.converged = coarse.converged;
    return out;
  }
  const Stencil fine = central(0.5 * h);
  const double extrapolated = (4.0 * fine.value - coarse.value) / 3.0;
  const double truncation = std::abs(extrapolated - fine.value);
  out.value = extrapolated;
  out.est_error = (4.0 * fine.quad_error + coarse.quad_error) / 3.0 + truncation;
  out.l_max_used = std::max(coarse.l_max, fine.l_max);
  out.converged = coarse.converged && fine.converged;
  out.step_limited = truncation > std::max(rel_tol, kStepTolerance) * std::abs(extrapolated);
  return out;
}

}  // namespace

void validate(const DerivativeSpec& spec) {
  if (!(spec.rel_step >= 1e-5 && spec.rel_step <= 1e-2)) {
    throw std::invalid_argument("DerivativeSpec: rel_step must lie in [1e-5, 1e-2]");
  }
  if (!(spec.min_step_T > 0.0) || !(spec.min_step_a > 0.0)) {
    throw std::invalid_argument("DerivativeSpec: minimum steps must be positive");
  }
}

ThermoResult pressure(const Reflector& r, double a, double T, const DerivativeSpec& dspec,
                      const QuadratureSpec& qspec, Execution exec) {
  validate(dspec);
  validate(qspec);
  if (!(T > 0.0)) throw std::invalid_argument("pressure: T must be positive");
  const double h = std::max(dspec.rel_step * a, dspec.min_step_a);
  if (!(a > h)) throw std::invalid_argument("pressure: separation must exceed the difference step");
  auto eval = [&](double x) { return free_energy(r, make_plate_system(x, T), qspec, exec); };
  return negative_derivative(eval, a, h, dspec.richardson, qspec.rel_tol);
}

ThermoResult entropy(const Reflector& r, double a, double T, const DerivativeSpec& dspec,
                     const QuadratureSpec& qspec, Execution exec) {
  validate(dspec);
  validate(qspec);
  const auto sys = make_plate_system(a, T);
  const double h = std::max(dspec.rel_step * T, dspec.min_step_T);
  if (!(T > h)) {
    throw std::invalid_argument("entropy: T = " + std::to_string(T) + " K does not exceed the step " +
                                std::to_string(h) + " K");
  }
  if (T < sys.T_eff * qspec.min_reduced_temperature) {
    throw LowTemperatureError("entropy: T is below the direct-summation limit; use the asymptotic entropy");
  }
  // The requested T passed the guard; let the lower stencil points sit below it.
  QuadratureSpec stencil = qspec;
  stencil.min_reduced_temperature = qspec.min_reduced_temperature * (T - h) / T;
  auto eval = [&](double x) { return free_energy(r, make_plate_system(a, x), stencil, exec); };
  return negative_derivative(eval, T, h, dspec.richardson, qspec.rel_tol);
}

}  // namespace casimir
