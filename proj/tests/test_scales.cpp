#include <doctest.h>

#include <stdexcept>

#include "casimir/scales.hpp"
#include "oracles.hpp"

using namespace casimir;

TEST_CASE("characteristic frequency and temperature at 1 um") {
  const auto sys = make_plate_system(1e-6, 300.0);
  CHECK(sys.omega_c == doctest::Approx(oracle::kC / 2e-6).epsilon(1e-15));
  CHECK(sys.omega_c == doctest::Approx(1.499e14).epsilon(1e-3));
  CHECK(sys.T_eff == doctest::Approx(oracle::kHbar * oracle::kC / (2e-6 * oracle::kB)).epsilon(1e-14));
  CHECK(sys.T_eff == doctest::Approx(1145.0).epsilon(1e-3));
}

TEST_CASE("Matsubara frequencies") {
  const auto sys = make_plate_system(1e-6, 300.0);
  CHECK(matsubara_xi(sys, 0) == 0.0);
  CHECK(matsubara_xi(sys, 1) == doctest::Approx(2 * oracle::kPi * oracle::kB * 300.0 / oracle::kHbar).epsilon(1e-14));
  CHECK(zeta_l(sys, 3) == doctest::Approx(2 * oracle::kPi * 3 * 300.0 / sys.T_eff).epsilon(1e-14));
  CHECK(reduced_temperature(sys) == doctest::Approx(300.0 / sys.T_eff));
}

TEST_CASE("gold scales at 1 um") {
  const auto sys = make_plate_system(1e-6, 300.0);
  const auto m = make_metal_scales(1.37e16, sys);
  CHECK(m.omega_p_tilde == doctest::Approx(91.4).epsilon(2e-3));
  CHECK(m.delta0_over_a() == doctest::Approx(0.02188).epsilon(1e-3));
  CHECK(m.lambda_p == doctest::Approx(4 * oracle::kPi * 1e-6 * m.alpha).epsilon(1e-14));
  CHECK(m.delta0 == doctest::Approx(oracle::kC / 1.37e16));
}

TEST_CASE("plate system rejects bad input") {
  CHECK_THROWS_AS(make_plate_system(0.0, 300.0), std::invalid_argument);
  CHECK_THROWS_AS(make_plate_system(-1e-6, 300.0), std::invalid_argument);
  CHECK_THROWS_AS(make_plate_system(1e-6, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_plate_system(1e-6, std::nan("")), std::invalid_argument);
  CHECK_NOTHROW(make_plate_system(1e-6, 0.0));
  const auto sys = make_plate_system(1e-6, 0.0);
  CHECK_THROWS_AS(make_metal_scales(0.0, sys), std::invalid_argument);
  CHECK(with_temperature(sys, 10.0).T == 10.0);
  CHECK(with_temperature(sys, 10.0).omega_c == sys.omega_c);
}
