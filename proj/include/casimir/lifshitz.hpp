// Lifshitz free energy between parallel plates:
//
//   F(a, T) = k_B T / (8 pi a^2) * sum'_l I(l),
//   I(l)    = int_{zeta_l}^inf y dy [ln(1 - r_par^2 e^-y) + ln(1 - r_perp^2 e^-y)],
//
// where the primed sum halves the l = 0 term.

#pragma once

#include <functional>
#include <stdexcept>

#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"
#include "casimir/scales.hpp"

namespace casimir {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_floor = 1e-25;  // J/m^2
  int max_subdivisions = 60;
  // Direct summation is refused below T = T_eff * min_reduced_temperature.
  double min_reduced_temperature = 1.0 / 2000.0;
};

/// Throws std::invalid_argument unless rel_tol in (0, 1e-3] and
/// max_subdivisions >= 10.
void validate(const QuadratureSpec& spec);

struct ThermoResult {
  double value = 0.0;  // J/m^2, Pa or J/(K m^2)
  long l_max_used = 0;
  double est_error = 0.0;
  bool converged = false;
  // Derivatives only: the finite-difference truncation estimate exceeds
  // max(rel_tol, 1e-6) * |value|.
  bool step_limited = false;
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

enum class Execution { Serial, Parallel };

/// Raised when the number of Matsubara terms would exceed the direct
/// summation budget; the low-temperature expansions cover that regime.
class LowTemperatureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inner integral at one frequency for already-evaluated coefficients.
IntegralResult mode_integral(const ModeReflection& mode, double zeta, double rel_tol, double abs_tol,
                             int max_panels);

/// I(l); non-positive.
IntegralResult matsubara_integral(const Reflector& r, const PlateSystem& sys, long l,
                                  const QuadratureSpec& spec = {});

/// Bound on sum_{m > l} |I(m)| for any coefficients in [0, 1].
double matsubara_tail_bound(const PlateSystem& sys, long l);

struct SeriesResult {
  double sum = 0.0;  // dimensionless, l = 0 weighted by zero_weight
  double error = 0.0;
  long l_max = 0;
  bool converged = false;
};

/// Sums term(l) from l = first, stopping once zeta_l > 30, three
/// consecutive terms are below rel_tol of the partial sum and the
/// tail bound is too. The parallel path evaluates blocks of terms
/// concurrently and reduces them in index order, so both paths return
/// bit-identical results.
SeriesResult matsubara_series(const std::function<IntegralResult(long)>& term, const PlateSystem& sys,
                              long first, double zero_weight, const QuadratureSpec& spec,
                              Execution exec);

/// k_B T / (8 pi a^2), J/m^2.
double lifshitz_prefactor(const PlateSystem& sys);

/// Free energy per unit area, J/m^2. Throws LowTemperatureError below
/// the direct-summation limit and std::invalid_argument for T = 0.
ThermoResult free_energy(const Reflector& r, const PlateSystem& sys, const QuadratureSpec& spec = {},
                         Execution exec = Execution::Parallel);

/// Zero-temperature energy per unit area,
/// hbar c / (32 pi^2 a^3) int_0^inf dzeta I(zeta). l_max_used holds the
/// number of outer panels.
ThermoResult free_energy_T0(const Reflector& r, const PlateSystem& sys, const QuadratureSpec& spec = {});

/// ln(1 - r_D^2 e^-y) - ln(1 - r_p^2 e^-y) for both polarizations, with
/// the coefficient differences formed algebraically so that small gamma
/// does not cancel. Arguments are dimensionless (wpt = omega_p / omega_c,
/// gt = gamma / omega_c), zeta > 0.
ReflectionPair drude_plasma_log_difference(double wpt, double gt, double zeta, double y);

struct DrudeDecomposition {
  ThermoResult total;        // F^D
  ThermoResult plasma;       // F^p
  double zero_mode_term;     // -(k_B T / 16 pi a^2) int y ln(1 - r_perp,p^2(0,y) e^-y)
  double difference_sum;     // J/m^2, l >= 1 Drude minus plasma
  double difference_error;
};

/// F^D = F^p + zero-mode term + sum_{l >= 1} (Drude - plasma).
DrudeDecomposition decomposed_free_energy_drude(const PlateSystem& sys, const MetalScales& metal,
                                                const RelaxationModel& relax,
                                                const QuadratureSpec& spec = {},
                                                Execution exec = Execution::Parallel);

/// int_0^inf y ln(1 - r_perp,p^2(0, y) e^-y) dy by quadrature (negative).
IntegralResult plasma_zero_mode_te_integral(double omega_p_tilde, double rel_tol = 1e-13);

}  // namespace casimir
