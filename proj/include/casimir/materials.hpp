// Dielectric permittivity along the imaginary frequency axis and the
// temperature-dependent relaxation parameter of metals.

#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "casimir/scales.hpp"

namespace casimir {

// ---- relaxation parameter gamma(T), rad/s ----------------------------------

struct ConstantRelaxation {
  double gamma;  // rad/s
};

/// gamma(T) = gamma0 * T^2
struct QuadraticRelaxation {
  double gamma0;  // rad/(s K^2)
};

/// gamma(T) = gamma_res + A_ee T^2 + bg_amplitude * B(T / T_D), where B is
/// the Bloch-Gruneisen function below.
struct CompositeRelaxation {
  double gamma_res;     // rad/s
  double A_ee;          // rad/(s K^2)
  double bg_amplitude;  // rad/s
  double T_D;           // K
};

struct TablePoint {
  double T;      // K
  double gamma;  // rad/s, > 0
};

/// Log-linear interpolation of measured data, clamped outside the nodes.
struct TableRelaxation {
  std::vector<TablePoint> points;  // strictly increasing in T
};

using RelaxationModel =
    std::variant<ConstantRelaxation, QuadraticRelaxation, CompositeRelaxation, TableRelaxation>;

/// B(x) = x^5 * integral_0^{1/x} u^5 e^u / (e^u - 1)^2 du; B(0) = 0.
/// B(x) -> 120 zeta(5) x^5 for x -> 0 and x / 4 for x -> infinity.
double bloch_gruneisen(double x);

/// Throws std::invalid_argument for negative T.
double gamma_of_T(const RelaxationModel& model, double T);

/// Solves for (A_ee, bg_amplitude) so that gamma(T_room) = gamma_room and
/// gamma(T_low) = gamma_low.
CompositeRelaxation calibrate_composite(double gamma_room, double T_room, double gamma_low,
                                        double T_low, double T_D, double gamma_res = 0.0);

/// Validates ordering and positivity.
TableRelaxation make_table_relaxation(std::vector<TablePoint> points);

// ---- permittivity models ----------------------------------------------------

struct DrudeModel {
  double omega_p;  // rad/s
  RelaxationModel relaxation;
};

struct PlasmaModel {
  double omega_p;  // rad/s
};

struct ConstantPermittivity {
  double eps;
};

struct DebyeTerm {
  double strength;   // C_n
  double frequency;  // omega_n, rad/s
};

/// eps(i xi) = 1 + sum_n C_n / (1 + xi / omega_n)
struct PolarDebyeModel {
  std::vector<DebyeTerm> terms;
};

using PermittivityModel =
    std::variant<DrudeModel, PlasmaModel, ConstantPermittivity, PolarDebyeModel>;

/// eps(i xi) at temperature T. Drude at xi = 0 throws std::domain_error:
/// the zero mode has to be taken from its analytic limit.
double eps_imag_axis(const PermittivityModel& model, double xi, double T);

/// True for Drude and plasma, whose eps(i xi) diverges at xi -> 0.
bool is_metal(const PermittivityModel& model);

/// eps(i 0) for dielectrics; throws std::domain_error for metals.
double static_permittivity(const PermittivityModel& model);

/// Plasma frequency of a metal model; throws std::domain_error otherwise.
double plasma_frequency(const PermittivityModel& model);

// ---- presets ----------------------------------------------------------------

namespace au {
inline constexpr double kOmegaP = 1.37e16;          // rad/s
inline constexpr double kDebyeTemperature = 165.0;  // K
inline constexpr double kGammaRoom = 5.32e13;       // rad/s at 300 K
inline constexpr double kGammaOverXi1At10K = 1.8e-3;
inline constexpr double kGammaResidualImpure = 5.32e7;  // rad/s

/// Composite gamma(T) anchored at 300 K and at gamma/xi_1 = 1.8e-3 at 10 K.
CompositeRelaxation composite_relaxation(double gamma_res = 0.0);
/// gamma0 T^2 law through the same 10 K anchor.
QuadraticRelaxation quadratic_relaxation();

DrudeModel drude();
DrudeModel drude_quadratic();
PlasmaModel plasma();
}  // namespace au

/// Two-term Debye model with eps(0) = 100 and eps ~ 7 near 1e14 rad/s.
PolarDebyeModel polar_dielectric_example();

}  // namespace casimir
