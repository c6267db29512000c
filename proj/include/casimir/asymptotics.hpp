// Low-temperature expansions of the Drude and plasma free energy and
// entropy, with exact sums and quadratures to test them against.
//
// Small parameters: tau = T / T_eff, alpha = 1 / omega_p_tilde
// (delta0 / a = 2 alpha) and gamma / omega_p.

#pragma once

#include "casimir/lifshitz.hpp"

namespace casimir::asymptotic {

struct SmallParameters {
  double tau = 0.0;
  double alpha = 0.0;
  double gamma_over_omega_p = 0.0;
  double gamma_over_xi1 = 0.0;
};

struct ExpansionInput {
  double alpha;               // delta0 / (2a)
  double tau;                 // T / T_eff
  double gamma_over_omega_p;  //
  double gamma0;              // rad/(s K^2) when gamma = gamma0 T^2, else 0
};

ExpansionInput make_expansion_input(const PlateSystem& sys, const MetalScales& metal, double gamma,
                                    double gamma0 = 0.0);

/// alpha in (0, 0.1] and tau in (0, 0.05]. Outside, results are still
/// returned with in_window = false.
bool in_validity_window(const ExpansionInput& in);

struct Expansion {
  double value = 0.0;
  SmallParameters params;
  bool in_window = true;
};

// ---- first order in gamma / xi_l ------------------------------------------------

struct RFunctions {
  double r_par;
  double r_perp;
};

/// Coefficients of -gamma_tilde / zeta in r_D^2 - r_p^2 at first order;
/// both non-negative. Requires y >= zeta > 0, alpha > 0.
RFunctions r_functions_full(double zeta, double y, double alpha);

/// Their first order in alpha: (2 zeta^2 alpha / y, 2 y alpha).
RFunctions r_functions_small_alpha(double zeta, double y, double alpha);

// ---- plasma free energy and entropy ---------------------------------------------

/// E_p - (hbar c zeta(3) / 16 pi a^3) [(1 + 2 d) tau^3 - pi^3 / (45 zeta(3)) (1 + 4 d) tau^4],
/// d = delta0 / a, with the zero-temperature energy E_p supplied.
Expansion plasma_free_energy_low_t(const PlateSystem& sys, const MetalScales& metal, double energy_T0);

/// Same, with E_p from the zero-temperature Lifshitz integral.
Expansion plasma_free_energy_low_t(const PlateSystem& sys, const MetalScales& metal,
                                   const QuadratureSpec& spec = {});

Expansion plasma_entropy_low_t(const PlateSystem& sys, const MetalScales& metal);

// ---- zero-mode (linear in T) term ------------------------------------------------

/// 1 - 4x + 12x^2 - 32x^3 (1 - zeta5/(16 zeta3)) + 80x^4 (1 - zeta5/(4 zeta3)), x = delta0 / a.
/// Throws std::invalid_argument outside [0, 0.2].
double linear_term_series(double delta0_over_a);

/// The same bracket from quadrature: -int y ln(1 - r_perp,p^2(0,y) e^-y) dy / zeta(3).
double linear_term_quadrature(double delta0_over_a);

/// Temperature-independent Drude entropy term (k_B / 16 pi a^2) int y ln(...) dy, by quadrature.
double s0_drude(const PlateSystem& sys, const MetalScales& metal);

/// -(k_B zeta(3) / 16 pi a^2) * linear_term_series(delta0 / a).
double s0_drude_series(const PlateSystem& sys, const MetalScales& metal);

/// T -> 0 limit of the Drude entropy; equals s0_drude.
double drude_entropy_limit(const PlateSystem& sys, const MetalScales& metal);

// ---- relaxation-dependent contribution ------------------------------------------

/// Bose integrals int_zeta^inf dy / (e^y - 1) and int_zeta^inf y^2 dy / (e^y - 1).
double bose_integral_0(double zeta);
double bose_integral_2(double zeta);

struct GammaSums {
  double first;   // sum_l zeta_l int_{zeta_l} dy / (e^y - 1)
  double second;  // sum_l (1 / zeta_l) int_{zeta_l} y^2 dy / (e^y - 1)
};

/// Direct l-sums with closed-form integrals.
GammaSums gamma_sums_exact(double tau);

/// After exchanging the l and k sums (geometric series in l done exactly).
GammaSums gamma_sums_kform(double tau);

/// Leading terms as printed: zeta(3)/(2 pi tau) + zeta(2) and
/// -(zeta(3)/(pi tau)) ln(2 pi tau) + 3 zeta(3)/(2 pi tau) + 2 zeta(2).
GammaSums gamma_sums_asymptotic(double tau);

/// (gamma / omega_p) (k_B T / 4 pi a^2) (first + second), small-alpha R functions.
Expansion f_gamma_exact(const PlateSystem& sys, const MetalScales& metal, double gamma);

/// (gamma / omega_p) (k_B T_eff zeta(3) / 4 pi^2 a^2) [-ln(2 pi tau) + 2 + 3 pi zeta(2)/zeta(3) tau].
Expansion f_gamma_asymptotic(const PlateSystem& sys, const MetalScales& metal, double gamma);

/// -(k_B zeta(3) / 4 pi^2 a^2)(gamma / omega_p)(1 / tau)[-2 ln(2 pi tau) + 3 + 9 pi zeta(2)/zeta(3) tau]
/// with gamma = gamma0 T^2.
Expansion s_gamma_asymptotic(const PlateSystem& sys, const MetalScales& metal, double gamma0);

/// First-order Drude correction with the full R functions, by quadrature:
/// (k_B T / 8 pi a^2) sum_{l>=1} (gamma_tilde / zeta_l) int y [R e^-y / (1 - r_p^2 e^-y)] dy.
ThermoResult f_gamma_first_order(const PlateSystem& sys, const MetalScales& metal, double gamma,
                                 const QuadratureSpec& spec = {}, Execution exec = Execution::Parallel);

/// F^D - (F^p + zero-mode term + f_gamma_first_order), formed under the
/// integral so that the second-order remainder is resolved.
ThermoResult first_order_residual(const PlateSystem& sys, const MetalScales& metal, double gamma,
                                  const QuadratureSpec& spec = {}, Execution exec = Execution::Parallel);

struct RegimeGuard {
  double gamma_over_xi1;
  double first_order;          // J/m^2
  double residual;             // J/m^2
  double relative_residual;    // |residual / first_order|
  double small_gamma_trend;    // residual at gamma = 1e-3 xi_1, scaled by (gamma / gamma_ref)^2
  bool departs_from_trend;     // |residual - trend| > 0.25 |trend|
  bool expansion_valid;        // relative_residual <= 0.1 and no departure
};

/// Checks whether the first-order expansion in gamma / xi_l holds for a
/// given (constant) gamma at the system's temperature.
RegimeGuard regime_guard(const PlateSystem& sys, const MetalScales& metal, double gamma,
                         const QuadratureSpec& spec = {});

}  // namespace casimir::asymptotic
