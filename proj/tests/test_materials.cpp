#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "casimir/materials.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

double xi1(double T) { return 2.0 * oracle::kPi * oracle::kB * T / oracle::kHbar; }

double excess_slope(const CompositeRelaxation& m, double T1, double T2) {
  const double g1 = gamma_of_T(m, T1) - m.gamma_res;
  const double g2 = gamma_of_T(m, T2) - m.gamma_res;
  return std::log(g2 / g1) / std::log(T2 / T1);
}

}  // namespace

TEST_CASE("Bloch-Gruneisen limits") {
  // 120 zeta(5) x^5 for small x, x/4 - 1/36 x^{-1}... -> x/4 for large x.
  for (double x : {1e-3, 5e-3, 1e-2}) {
    CHECK(bloch_gruneisen(x) == doctest::Approx(120.0 * 1.0369277551433699 * std::pow(x, 5)).epsilon(1e-8));
  }
  CHECK(bloch_gruneisen(50.0) / 50.0 == doctest::Approx(0.25).epsilon(1e-4));
  CHECK(bloch_gruneisen(0.0) == 0.0);
  CHECK_THROWS_AS(bloch_gruneisen(-1.0), std::invalid_argument);
  // Against a direct Simpson quadrature at an intermediate point.
  const double x = 0.3;
  auto f = [](double u) { return u > 0 ? std::pow(u, 5) * std::exp(u) / std::pow(std::expm1(u), 2) : 0.0; };
  CHECK(bloch_gruneisen(x) == doctest::Approx(std::pow(x, 5) * oracle::simpson(f, 0.0, 1.0 / x, 1e-13)).epsilon(1e-10));
}

TEST_CASE("gold relaxation anchors and published ratios") {
  const auto m = au::composite_relaxation();
  CHECK(gamma_of_T(m, 300.0) == doctest::Approx(5.32e13).epsilon(1e-12));
  CHECK(gamma_of_T(m, 10.0) == doctest::Approx(1.8e-3 * xi1(10.0)).epsilon(1e-12));
  CHECK(gamma_of_T(m, 300.0) / au::kOmegaP == doctest::Approx(3.88e-3).epsilon(0.01));
  CHECK(gamma_of_T(m, 70.0) / au::kOmegaP == doctest::Approx(6.71e-4).epsilon(0.05));
  CHECK(gamma_of_T(m, 10.0) / au::kOmegaP == doctest::Approx(1.06e-6).epsilon(0.05));
  CHECK(gamma_of_T(m, 30.0) / xi1(30.0) == doctest::Approx(0.049).epsilon(0.2));
}

TEST_CASE("composite relaxation regime exponents") {
  const auto m = au::composite_relaxation(au::kGammaResidualImpure);
  const double TD = au::kDebyeTemperature;
  CHECK(excess_slope(m, 1.0, 4.0) == doctest::Approx(2.0).epsilon(0.15));
  CHECK(excess_slope(m, TD, 2.0 * TD) == doctest::Approx(1.0).epsilon(0.3));
  // The two gold anchors leave a sizeable T^2 term inside this window.
  const double mid = excess_slope(m, TD / 20.0, TD / 8.0);
  CHECK(mid > 4.0);
  CHECK(mid < 5.3);
}

TEST_CASE("Bloch-Gruneisen window exponent of 5 +- 0.3" * doctest::may_fail()) {
  const auto m = au::composite_relaxation(au::kGammaResidualImpure);
  const double TD = au::kDebyeTemperature;
  CHECK(excess_slope(m, TD / 20.0, TD / 8.0) == doctest::Approx(5.0).epsilon(0.06));
}

TEST_CASE("quadratic law shares the 10 K anchor") {
  const auto q = au::quadratic_relaxation();
  CHECK(gamma_of_T(q, 10.0) == doctest::Approx(gamma_of_T(au::composite_relaxation(), 10.0)).epsilon(1e-12));
  CHECK(gamma_of_T(q, 20.0) == doctest::Approx(4.0 * gamma_of_T(q, 10.0)));
}

TEST_CASE("relaxation table interpolates log-linearly and clamps") {
  const auto t = make_table_relaxation({{10.0, 1e10}, {100.0, 1e12}});
  CHECK(gamma_of_T(t, 1.0) == 1e10);
  CHECK(gamma_of_T(t, 1000.0) == 1e12);
  CHECK(gamma_of_T(t, 55.0) == doctest::Approx(1e11).epsilon(1e-12));
  CHECK_THROWS_AS(make_table_relaxation({}), std::invalid_argument);
  CHECK_THROWS_AS(make_table_relaxation({{10.0, 1.0}, {5.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_table_relaxation({{10.0, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(gamma_of_T(t, -1.0), std::invalid_argument);
}

TEST_CASE("permittivity along the imaginary axis") {
  const double wp = 1.37e16, g = 5.32e13, xi = 3e14;
  const PermittivityModel drude = DrudeModel{wp, ConstantRelaxation{g}};
  CHECK(eps_imag_axis(drude, xi, 300.0) == doctest::Approx(1.0 + wp * wp / (xi * (xi + g))).epsilon(1e-15));
  CHECK(eps_imag_axis(PlasmaModel{wp}, xi, 0.0) == doctest::Approx(1.0 + wp * wp / (xi * xi)).epsilon(1e-15));
  CHECK(std::isinf(eps_imag_axis(PlasmaModel{wp}, 0.0, 0.0)));
  CHECK_THROWS_AS(eps_imag_axis(drude, 0.0, 300.0), std::domain_error);
  CHECK(eps_imag_axis(ConstantPermittivity{7.0}, xi, 0.0) == 7.0);
  const auto polar = polar_dielectric_example();
  CHECK(static_permittivity(polar) == doctest::Approx(100.0));
  CHECK(eps_imag_axis(polar, 1e14, 0.0) == doctest::Approx(1.0 + 93.0 / (1.0 + 1e7) + 6.0 / 1.01).epsilon(1e-14));
  CHECK(is_metal(drude));
  CHECK_FALSE(is_metal(polar));
  CHECK_THROWS_AS(static_permittivity(drude), std::domain_error);
  CHECK(plasma_frequency(drude) == wp);
  CHECK_THROWS_AS(plasma_frequency(polar), std::domain_error);
}

TEST_CASE("property: eps(i xi) >= 1 and non-increasing in xi") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> lx(8.0, 17.0);
  const PermittivityModel models[] = {au::drude(), au::plasma(), PermittivityModel(polar_dielectric_example()),
                                      ConstantPermittivity{7.0}};
  for (int i = 0; i < 200; ++i) {
    const double x1 = std::pow(10.0, lx(rng)), x2 = x1 * 1.5;
    for (const auto& m : models) {
      const double e1 = eps_imag_axis(m, x1, 150.0), e2 = eps_imag_axis(m, x2, 150.0);
      CHECK(e1 >= 1.0);
      CHECK(e2 <= e1);
    }
  }
}
