// Pressure and entropy from the free energy by central differences.
//
// The reflector is rebuilt at every stencil point through the plate
// system, so omega_p / omega_c, zeta_l and gamma(T) all follow a and T.

#pragma once

#include "casimir/lifshitz.hpp"

namespace casimir {

struct DerivativeSpec {
  double rel_step = 1e-3;
  double min_step_T = 0.05;   // K
  double min_step_a = 1e-10;  // m
  bool richardson = true;
};

/// Throws std::invalid_argument unless rel_step in [1e-5, 1e-2] and the
/// minimum steps are positive.
void validate(const DerivativeSpec& spec);

/// P = -dF/da in Pa; attraction is negative.
ThermoResult pressure(const Reflector& r, double a, double T, const DerivativeSpec& dspec = {},
                      const QuadratureSpec& qspec = {}, Execution exec = Execution::Parallel);

/// S = -dF/dT in J/(K m^2), including the drift of gamma(T).
/// Requires T > step; throws LowTemperatureError below the direct
/// summation limit.
ThermoResult entropy(const Reflector& r, double a, double T, const DerivativeSpec& dspec = {},
                     const QuadratureSpec& qspec = {}, Execution exec = Execution::Parallel);

}  // namespace casimir
