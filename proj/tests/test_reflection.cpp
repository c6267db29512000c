#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "casimir/reflection.hpp"

using namespace casimir;

namespace {

// Textbook form, no rearrangement.
ReflectionPair naive_eps(double eps, double zeta, double y) {
  const double k = std::sqrt(y * y + zeta * zeta * (eps - 1.0));
  const double rpar = (eps * y - k) / (eps * y + k);
  const double rperp = (k - y) / (k + y);
  return {rpar * rpar, rperp * rperp};
}

}  // namespace

TEST_CASE("permittivity form matches the textbook expression") {
  for (double eps : {1.5, 7.0, 100.0, 1e6}) {
    for (double zeta : {0.01, 1.0, 10.0}) {
      for (double y : {zeta, 2.0 * zeta + 0.5, 30.0 + zeta}) {
        const auto r = reflect_from_eps(eps, zeta, y);
        const auto n = naive_eps(eps, zeta, y);
        CHECK(r.r_par_sq == doctest::Approx(n.r_par_sq).epsilon(1e-12));
        CHECK(r.r_perp_sq == doctest::Approx(n.r_perp_sq).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("permittivity form near eps = 1 keeps relative accuracy") {
  const double d = 1e-9;
  const auto r = reflect_from_eps(1.0 + d, 1.0, 2.0);
  // r_perp ~ d zeta^2 / (4 y^2), r_par ~ d (2y^2 - zeta^2) / (4 y^2) to first order.
  CHECK(std::sqrt(r.r_perp_sq) == doctest::Approx(d / 16.0).epsilon(1e-6));
  CHECK(std::sqrt(r.r_par_sq) == doctest::Approx(d * 7.0 / 16.0).epsilon(1e-6));
}

TEST_CASE("limits of the permittivity form") {
  const auto big = reflect_from_eps(1e12, 1.0, 1.0);
  CHECK(big.r_par_sq == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(big.r_perp_sq == doctest::Approx(1.0).epsilon(1e-5));
  const auto vac = reflect_from_eps(1.0, 1.0, 2.0);
  CHECK(vac.r_par_sq == 0.0);
  CHECK(vac.r_perp_sq == 0.0);
  const auto zero = reflect_from_eps(7.0, 0.0, 3.0);
  CHECK(zero.r_par_sq == doctest::Approx(std::pow(6.0 / 8.0, 2)));
  CHECK(zero.r_perp_sq == 0.0);
  CHECK_THROWS_AS(reflect_from_eps(7.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("plasma zero mode is the zeta -> 0 limit of the permittivity form") {
  const double wpt = 91.4;
  for (double y : {0.1, 1.0, 10.0, 200.0}) {
    const double zeta = 1e-7;
    const auto lim = reflect_from_eps(1.0 + wpt * wpt / (zeta * zeta), zeta, y);
    const auto z = plasma_zero_mode(wpt, y);
    CHECK(z.r_par_sq == 1.0);
    CHECK(z.r_perp_sq == doctest::Approx(lim.r_perp_sq).epsilon(1e-6));
    const double s = std::hypot(wpt, y);
    CHECK(z.r_perp_sq == doctest::Approx(std::pow((s - y) / (s + y), 2)).epsilon(1e-12));
  }
}

TEST_CASE("zero-frequency rules per model") {
  const auto sys = make_plate_system(1e-6, 300.0);
  CHECK(reflect_from_eps_model(au::drude(), sys, 0, 2.0).r_par_sq == 1.0);
  CHECK(reflect_from_eps_model(au::drude(), sys, 0, 2.0).r_perp_sq == 0.0);
  const auto die = reflect_from_eps_model(ConstantPermittivity{7.0}, sys, 0, 2.0);
  CHECK(die.r_par_sq == doctest::Approx(0.5625));
  CHECK(die.r_perp_sq == 0.0);
  const auto ir = mode_reflection(ImpedanceModel(InfraredOpticsImpedance{au::kOmegaP}), sys, 0)(2.0);
  const double wpt = au::kOmegaP / sys.omega_c;
  CHECK(ir.r_par_sq == 1.0);
  CHECK(ir.r_perp_sq == doctest::Approx(std::pow((wpt - 2.0) / (wpt + 2.0), 2)));
  const auto skin = mode_reflection(ImpedanceModel(LeontovichImpedance{au::drude()}), sys, 0)(2.0);
  CHECK(skin.r_par_sq == 1.0);
  CHECK(skin.r_perp_sq == 1.0);
  CHECK(reflect_impedance_zero_mode(ZeroModeRule::NormalSkin, wpt, 5.0).r_perp_sq == 1.0);
  CHECK_THROWS_AS(reflect_from_impedance(0.0, 0.0, 1.0), std::domain_error);
  // Leontovich with a dielectric interior: Z0 = 1/sqrt(eps0) > 0 gives (1, 1).
  const auto dz = mode_reflection(ImpedanceModel(LeontovichImpedance{ConstantPermittivity{7.0}}), sys, 0)(2.0);
  CHECK(dz.r_par_sq == 1.0);
  CHECK(dz.r_perp_sq == 1.0);
}

TEST_CASE("impedance form") {
  const auto m = reflect_from_impedance(1.0, 2.0, 2.0);
  CHECK(m.r_par_sq == 0.0);
  CHECK(m.r_perp_sq == 0.0);
  const auto ideal = reflect_from_impedance(0.0, 1.0, 3.0);
  CHECK(ideal.r_par_sq == 1.0);
  CHECK(ideal.r_perp_sq == 1.0);
  const double Z = 0.01, zeta = 1.5, y = 4.0;
  const auto r = reflect_from_impedance(Z, zeta, y);
  CHECK(r.r_par_sq == doctest::Approx(std::pow((y - Z * zeta) / (y + Z * zeta), 2)));
  CHECK(r.r_perp_sq == doctest::Approx(std::pow((zeta - Z * y) / (zeta + Z * y), 2)));
}

TEST_CASE("infrared impedance follows the plasma TE coefficient to first order in alpha") {
  const auto sys = make_plate_system(1e-6, 300.0);
  for (double wp : {1.37e16, 3e16}) {
    const double wpt = wp / sys.omega_c;
    const double alpha = 1.0 / wpt;
    REQUIRE(alpha <= 0.05);
    const Reflector imp(ImpedanceModel(InfraredOpticsImpedance{wp}));
    const Reflector pl(PermittivityModel(PlasmaModel{wp}));
    for (long l = 1; l < 200; l += 13) {
      const double zeta = zeta_l(sys, l);
      if (zeta > 0.1 * wpt) break;  // impedance form needs zeta << omega_p
      for (double y : {zeta, zeta + 1.0, zeta + 10.0}) {
        const double a = mode_reflection(imp, sys, l)(y).r_perp_sq;
        const double b = mode_reflection(pl, sys, l)(y).r_perp_sq;
        CHECK(std::abs(a - b) <= 5.0 * alpha * b);
      }
    }
  }
}

TEST_CASE("property: squared coefficients lie in [0, 1]") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Reflector sources[] = {PermittivityModel(au::drude()), PermittivityModel(au::plasma()),
                               PermittivityModel(polar_dielectric_example()), PermittivityModel(ConstantPermittivity{7.0}),
                               ImpedanceModel(InfraredOpticsImpedance{au::kOmegaP}),
                               ImpedanceModel(LeontovichImpedance{au::drude()})};
  for (int i = 0; i < 300; ++i) {
    const auto sys = make_plate_system(1e-7 * std::pow(100.0, u(rng)), 1.0 + 1000.0 * u(rng));
    const long l = static_cast<long>(50 * u(rng));
    const double y = zeta_l(sys, l) + 40.0 * u(rng);
    for (const auto& s : sources) {
      const auto r = mode_reflection(s, sys, l)(y);
      CHECK(r.r_par_sq >= 0.0);
      CHECK(r.r_par_sq <= 1.0);
      CHECK(r.r_perp_sq >= 0.0);
      CHECK(r.r_perp_sq <= 1.0);
    }
  }
}
