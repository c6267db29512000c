#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "casimir/asymptotics.hpp"
#include "casimir/thermo.hpp"
#include "oracles.hpp"

using namespace casimir;
namespace as = casimir::asymptotic;

namespace {

// r_D^2 - r_p^2 from the permittivity form, with gamma_tilde = g.
double drude_minus_plasma(double zeta, double y, double alpha, double g, bool tm) {
  const double w2 = 1.0 / (alpha * alpha);
  auto r2 = [&](double eps) {
    const double k = std::sqrt(y * y + zeta * zeta * (eps - 1.0));
    const double r = tm ? (eps * y - k) / (eps * y + k) : (k - y) / (k + y);
    return r * r;
  };
  return r2(1.0 + w2 / (zeta * (zeta + g))) - r2(1.0 + w2 / (zeta * zeta));
}

struct Au1um {
  PlateSystem sys = make_plate_system(1e-6, 30.0);
  MetalScales metal = make_metal_scales(au::kOmegaP, sys);
};

}  // namespace

TEST_CASE("R functions are the first-order gamma derivative of r^2") {
  const double alpha = 0.0109;
  for (double zeta : {0.05, 1.0, 6.0}) {
    for (double y : {zeta, zeta + 2.0, zeta + 12.0}) {
      const auto R = as::r_functions_full(zeta, y, alpha);
      // -(zeta / g)(r_D^2 - r_p^2) -> R with an O(g) remainder: Richardson in g.
      auto est = [&](double g, bool tm) { return -zeta / g * drude_minus_plasma(zeta, y, alpha, g, tm); };
      const double g = 1e-5 * zeta;
      const double par = 2.0 * est(g, true) - est(2.0 * g, true);
      const double perp = 2.0 * est(g, false) - est(2.0 * g, false);
      CHECK(R.r_par == doctest::Approx(par).epsilon(1e-6));
      CHECK(R.r_perp == doctest::Approx(perp).epsilon(1e-6));
      // remainder shrinks linearly
      const double e1 = std::abs(est(1e-4 * zeta, false) - R.r_perp);
      const double e2 = std::abs(est(1e-6 * zeta, false) - R.r_perp);
      CHECK(std::log10(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
    }
  }
}

TEST_CASE("R functions reduce to their small-alpha form") {
  for (double alpha : {1e-3, 1e-4}) {
    const auto full = as::r_functions_full(0.7, 2.0, alpha);
    const auto small = as::r_functions_small_alpha(0.7, 2.0, alpha);
    CHECK(full.r_par == doctest::Approx(small.r_par).epsilon(20 * alpha));
    CHECK(full.r_perp == doctest::Approx(small.r_perp).epsilon(20 * alpha));
  }
  CHECK_THROWS_AS(as::r_functions_full(1.0, 0.5, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(as::r_functions_full(0.0, 0.5, 0.01), std::invalid_argument);
}

TEST_CASE("property: R functions are non-negative") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double zeta = 1e-3 + 20.0 * u(rng), y = zeta + 40.0 * u(rng), alpha = 1e-4 + 0.1 * u(rng);
    const auto R = as::r_functions_full(zeta, y, alpha);
    CHECK(R.r_par >= 0.0);
    CHECK(R.r_perp >= 0.0);
  }
}

TEST_CASE("linear-term bracket: series against direct quadrature") {
  CHECK(as::linear_term_series(0.0) == 1.0);
  const Au1um au1;
  const double x = au1.metal.delta0_over_a();
  CHECK(as::linear_term_series(x) == doctest::Approx(0.91796).epsilon(1e-4));
  CHECK(as::linear_term_series(x) == doctest::Approx(oracle::linear_bracket(x)).epsilon(1e-4));
  CHECK(as::linear_term_quadrature(x) == doctest::Approx(oracle::linear_bracket(x)).epsilon(1e-9));
  const double x300 = make_metal_scales(au::kOmegaP, make_plate_system(3e-7, 30.0)).delta0_over_a();
  CHECK(std::abs(as::linear_term_series(x300) - oracle::linear_bracket(x300)) < 0.01);
  CHECK(as::linear_term_series(x300) == doctest::Approx(0.760).epsilon(0.015));
  CHECK_THROWS_AS(as::linear_term_series(0.3), std::invalid_argument);
}

TEST_CASE("Drude T -> 0 entropy") {
  const Au1um au1;
  const double s0 = as::s0_drude(au1.sys, au1.metal);
  CHECK(s0 == doctest::Approx(-3.03e-13).epsilon(0.005));
  CHECK(s0 == doctest::Approx(as::s0_drude_series(au1.sys, au1.metal)).epsilon(1e-4));
  CHECK(as::drude_entropy_limit(au1.sys, au1.metal) == s0);
  // omega_p -> infinity: bracket -> 1.
  const auto stiff = make_metal_scales(1e22, au1.sys);
  CHECK(as::s0_drude(au1.sys, stiff) ==
        doctest::Approx(-oracle::kB * oracle::kZeta3 / (16.0 * oracle::kPi * 1e-12)).epsilon(1e-5));
  // 1/a^2 scaling at fixed delta0 / a.
  const auto half = make_plate_system(0.5e-6, 30.0);
  const auto half_metal = make_metal_scales(2.0 * au::kOmegaP, half);
  CHECK(as::s0_drude(half, half_metal) / s0 == doctest::Approx(4.0).epsilon(1e-10));
  for (double wp : {3e15, 1e16, 5e16}) CHECK(as::drude_entropy_limit(au1.sys, make_metal_scales(wp, au1.sys)) < 0.0);
}

TEST_CASE("Bose integrals against their exponential series") {
  for (double z : {1e-3, 0.1, 1.0, 1.99, 2.0, 5.0, 30.0}) {
    CHECK(as::bose_integral_0(z) == doctest::Approx(oracle::bose0(z)).epsilon(1e-13));
    CHECK(as::bose_integral_2(z) == doctest::Approx(oracle::bose2(z)).epsilon(1e-13));
  }
  CHECK(as::bose_integral_2(0.0) == doctest::Approx(2.0 * oracle::kZeta3).epsilon(1e-15));
}

TEST_CASE("gamma sums: exchanged form and direct l-sums agree") {
  for (double tau : {1e-2, 1e-3}) {
    double s1 = 0.0, s2 = 0.0;
    const double step = 2.0 * oracle::kPi * tau;
    for (long l = 1; step * l < 80.0; ++l) {
      const double z = step * l;
      s1 += z * oracle::bose0(z);
      s2 += oracle::bose2(z) / z;
    }
    const auto k = as::gamma_sums_kform(tau);
    const auto e = as::gamma_sums_exact(tau);
    CHECK(k.first == doctest::Approx(s1).epsilon(1e-9));
    CHECK(k.second == doctest::Approx(s2).epsilon(1e-9));
    CHECK(e.first == doctest::Approx(s1).epsilon(1e-9));
    CHECK(e.second == doctest::Approx(s2).epsilon(1e-9));
  }
}

TEST_CASE("gamma sums: leading behaviour of the exact sums") {
  // What the exact sums approach: zeta(3)/(2 pi tau) and
  // -(zeta(3)/(pi tau)) ln(2 pi tau) + (3 zeta(3) + 2 zeta'(3)) / (2 pi tau).
  const double dzeta3 = -0.19812624288563685;
  for (double tau : {1e-3, 1e-4}) {
    const auto e = as::gamma_sums_exact(tau);
    const double u = 2.0 * oracle::kPi * tau;
    CHECK(e.first == doctest::Approx(oracle::kZeta3 / u).epsilon(10 * tau));
    CHECK(e.second == doctest::Approx(-(oracle::kZeta3 / (oracle::kPi * tau)) * std::log(u) +
                                      (3.0 * oracle::kZeta3 + 2.0 * dzeta3) / u)
                          .epsilon(10 * tau));
  }
}

TEST_CASE("relaxation contribution: exact, leading form and signs") {
  const Au1um au1;
  const auto sys = make_plate_system(1e-6, 1e-3 * au1.sys.T_eff);
  CHECK(as::f_gamma_exact(sys, au1.metal, 0.0).value == 0.0);
  const double g = 1e8;
  const auto e = as::f_gamma_exact(sys, au1.metal, g);
  CHECK(e.value > 0.0);
  CHECK(e.params.tau == doctest::Approx(1e-3));
  CHECK(e.params.gamma_over_omega_p == doctest::Approx(g / au::kOmegaP));
  CHECK(e.in_window);
  for (double tau : {1e-2, 1e-3, 1e-4, 0.15}) {
    CHECK(as::f_gamma_asymptotic(make_plate_system(1e-6, tau * sys.T_eff), au1.metal, g).value > 0.0);
  }
  // gamma_tilde ~ T^0 here; the difference between leading form and exact sums shrinks with tau.
  auto rel = [&](double tau) {
    const auto s = make_plate_system(1e-6, tau * sys.T_eff);
    const double ex = as::f_gamma_exact(s, au1.metal, g).value;
    return std::abs(as::f_gamma_asymptotic(s, au1.metal, g).value / ex - 1.0);
  };
  CHECK(rel(1e-4) < rel(1e-3));
  CHECK(rel(1e-3) < rel(1e-2));
}

TEST_CASE("entropy of the relaxation term") {
  const Au1um au1;
  const double g0 = au::quadratic_relaxation().gamma0;
  const double T = 1e-3 * au1.sys.T_eff;
  const auto s = as::s_gamma_asymptotic(make_plate_system(1e-6, T), au1.metal, g0);
  auto f = [&](double t) { return as::f_gamma_asymptotic(make_plate_system(1e-6, t), au1.metal, g0 * t * t).value; };
  const double h = 1e-3 * T;
  CHECK(s.value == doctest::Approx(-(f(T + h) - f(T - h)) / (2.0 * h)).epsilon(0.01));
  CHECK(as::s_gamma_asymptotic(make_plate_system(1e-6, T), au1.metal, 2.0 * g0).value == doctest::Approx(2.0 * s.value));
  const double small = std::abs(as::s_gamma_asymptotic(make_plate_system(1e-6, 1e-3), au1.metal, g0).value);
  CHECK(small < 1e-2 * std::abs(s.value));
}

TEST_CASE("plasma free energy and entropy at low temperature") {
  const Au1um au1;
  const Reflector pl(PermittivityModel(au::plasma()));
  const auto F = free_energy(pl, au1.sys);
  const auto E = free_energy_T0(pl, au1.sys);
  const auto lowT = as::plasma_free_energy_low_t(au1.sys, au1.metal, E.value);
  CHECK(lowT.value - E.value == doctest::Approx(F.value - E.value).epsilon(5e-3));
  CHECK(as::plasma_free_energy_low_t(au1.sys, au1.metal).value == doctest::Approx(lowT.value).epsilon(1e-12));
  auto thermal = [&](double tau) {
    return as::plasma_free_energy_low_t(make_plate_system(1e-6, tau * au1.sys.T_eff), au1.metal, 0.0).value;
  };
  CHECK(thermal(2e-3) / thermal(1e-3) == doctest::Approx(8.0).epsilon(0.05));
  CHECK(thermal(1e-9) == doctest::Approx(0.0).epsilon(1e-30));

  const auto S = entropy(pl, 1e-6, 30.0);
  const auto S18 = as::plasma_entropy_low_t(au1.sys, au1.metal);
  CHECK(S18.value == doctest::Approx(S.value).epsilon(0.03));
  CHECK(S18.value > 0.0);
  auto st = [&](double tau) { return as::plasma_entropy_low_t(make_plate_system(1e-6, tau * au1.sys.T_eff), au1.metal).value; };
  CHECK(st(2e-3) / st(1e-3) == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("validity window is reported, not enforced") {
  const Au1um au1;
  const auto hot = as::plasma_entropy_low_t(make_plate_system(1e-6, 300.0), au1.metal);
  CHECK_FALSE(hot.in_window);
  CHECK(std::isfinite(hot.value));
  CHECK(as::in_validity_window(as::make_expansion_input(au1.sys, au1.metal, 1e9)));
}

TEST_CASE("first-order reconstruction residual is quadratic in gamma") {
  const Au1um au1;
  const double xi1 = matsubara_xi(au1.sys, 1);
  const double r1 = as::first_order_residual(au1.sys, au1.metal, 1e-4 * xi1).value;
  const double r2 = as::first_order_residual(au1.sys, au1.metal, 0.5e-4 * xi1).value;
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.01));
  // Reconstruction against the direct Drude free energy at a moderate gamma.
  const double g = 1e-2 * xi1;
  const Reflector drude(PermittivityModel(DrudeModel{au::kOmegaP, ConstantRelaxation{g}}));
  const auto dec = decomposed_free_energy_drude(au1.sys, au1.metal, ConstantRelaxation{g});
  const double first = as::f_gamma_first_order(au1.sys, au1.metal, g).value;
  const double resid = as::first_order_residual(au1.sys, au1.metal, g).value;
  const double direct = free_energy(drude, au1.sys).value;
  const double rebuilt = dec.plasma.value + dec.zero_mode_term + first + resid;
  CHECK(rebuilt == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("regime guard: constant gamma above xi_1 breaks the expansion") {
  const auto sys = make_plate_system(1e-6, 10.0);
  const auto metal = make_metal_scales(au::kOmegaP, sys);
  const double gamma = 5.4e13;  // 35.6 meV, so hbar gamma / (2 pi k_B) ~ 66 K > T
  REQUIRE(10.0 < oracle::kHbar * gamma / (2.0 * oracle::kPi * oracle::kB));
  const auto bad = as::regime_guard(sys, metal, gamma);
  CHECK(bad.gamma_over_xi1 > 1.0);
  CHECK(bad.departs_from_trend);
  CHECK(bad.relative_residual > 0.1);
  CHECK_FALSE(bad.expansion_valid);
  const auto good = as::regime_guard(sys, metal, 1e-4 * matsubara_xi(sys, 1));
  CHECK(good.expansion_valid);
  CHECK(good.relative_residual < 1e-3);
}
