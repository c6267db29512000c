// Physical constants and the dimensionless parameterization of the
// parallel-plate problem.
//
// Everything public is in SI. Lifshitz integrals are written in the
// dimensionless variables zeta = xi / omega_c and y, with
// omega_c = c / (2a).

#pragma once

#include <numbers>

namespace casimir {

struct PhysicalConstants {
  double k_B;    // J/K
  double hbar;   // J s
  double c;      // m/s
  double zeta2;  // Riemann zeta values
  double zeta3;
  double zeta5;
};

// CODATA 2018 (k_B, hbar, c are exact in the revised SI).
inline constexpr PhysicalConstants kPhys{
    1.380649e-23,
    1.054571817e-34,
    299792458.0,
    std::numbers::pi * std::numbers::pi / 6.0,
    1.2020569031595942854,
    1.0369277551433699263,
};

/// Plate separation and temperature with the derived scales.
struct PlateSystem {
  double a;        // m
  double T;        // K
  double omega_c;  // c / (2a), rad/s
  double T_eff;    // hbar * omega_c / k_B, K
};

/// Throws std::invalid_argument unless a > 0 and T >= 0 (both finite).
PlateSystem make_plate_system(double a, double T);

/// Same separation, new temperature.
PlateSystem with_temperature(const PlateSystem& sys, double T);

/// Matsubara frequency xi_l = 2 pi k_B T l / hbar in rad/s.
double matsubara_xi(const PlateSystem& sys, long l);

/// Dimensionless Matsubara frequency zeta_l = xi_l / omega_c = 2 pi l T / T_eff.
double zeta_l(const PlateSystem& sys, long l);

/// Reduced temperature tau = T / T_eff.
inline double reduced_temperature(const PlateSystem& sys) { return sys.T / sys.T_eff; }

struct MetalScales {
  double omega_p;        // rad/s
  double omega_p_tilde;  // omega_p / omega_c
  double alpha;          // 1 / omega_p_tilde = lambda_p / (4 pi a)
  double lambda_p;       // 2 pi c / omega_p, m
  double delta0;         // skin depth c / omega_p, m

  double delta0_over_a() const { return 2.0 * alpha; }
};

/// Throws std::invalid_argument for non-positive omega_p.
MetalScales make_metal_scales(double omega_p, const PlateSystem& sys);

}  // namespace casimir
