#include "casimir/scales.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

PlateSystem make_plate_system(double a, double T) {
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw std::invalid_argument("plate separation must be positive, got " + std::to_string(a));
  }
  if (!std::isfinite(T) || T < 0.0) {
    throw std::invalid_argument("temperature must be non-negative, got " + std::to_string(T));
  }
  const double omega_c = kPhys.c / (2.0 * a);
  return PlateSystem{a, T, omega_c, kPhys.hbar * omega_c / kPhys.k_B};
}

PlateSystem with_temperature(const PlateSystem& sys, double T) {
  return make_plate_system(sys.a, T);
}

double matsubara_xi(const PlateSystem& sys, long l) {
  return 2.0 * std::numbers::pi * kPhys.k_B * sys.T * static_cast<double>(l) / kPhys.hbar;
}

double zeta_l(const PlateSystem& sys, long l) {
  return 2.0 * std::numbers::pi * static_cast<double>(l) * sys.T / sys.T_eff;
}

MetalScales make_metal_scales(double omega_p, const PlateSystem& sys) {
  if (!std::isfinite(omega_p) || !(omega_p > 0.0)) {
    throw std::invalid_argument("plasma frequency must be positive");
  }
  const double wpt = omega_p / sys.omega_c;
  const double lambda_p = 2.0 * std::numbers::pi * kPhys.c / omega_p;
  return MetalScales{omega_p, wpt, 1.0 / wpt, lambda_p, kPhys.c / omega_p};
}

}  // namespace casimir
