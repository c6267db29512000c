#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// u^5 e^u / (e^u - 1)^2, written to stay finite for large u.
double bg_integrand(double u) {
  if (u <= 0.0) return 0.0;
  const double em = std::expm1(-u);  // e^{-u} - 1
  return u * u * u * u * u * std::exp(-u) / (em * em);
}

}  // namespace

double bloch_gruneisen(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("bloch_gruneisen: negative argument");
  if (x == 0.0) return 0.0;
  // Beyond u = 80 the integrand is below 1e-25 of its total.
  const double upper = std::min(1.0 / x, 80.0);
  const std::array<double, 5> breaks{0.0, 0.25 * upper, 0.5 * upper, 0.75 * upper, upper};
  const auto r = quad::integrate(bg_integrand, std::span<const double>(breaks), 1e-14, 0.0, 200);
  const double x2 = x * x;
  return x2 * x2 * x * r.value;
}

double gamma_of_T(const RelaxationModel& model, double T) {
  if (!(T >= 0.0)) throw std::invalid_argument("gamma_of_T: temperature must be non-negative");
  return std::visit(
      overloaded{
          [](const ConstantRelaxation& m) { return m.gamma; },
          [T](const QuadraticRelaxation& m) { return m.gamma0 * T * T; },
          [T](const CompositeRelaxation& m) {
            return m.gamma_res + m.A_ee * T * T + m.bg_amplitude * bloch_gruneisen(T / m.T_D);
          },
          [T](const TableRelaxation& m) {
            const auto& p = m.points;
            if (p.empty()) throw std::invalid_argument("gamma_of_T: empty table");
            if (T <= p.front().T) return p.front().gamma;
            if (T >= p.back().T) return p.back().gamma;
            const auto hi = std::upper_bound(p.begin(), p.end(), T,
                                             [](double t, const TablePoint& q) { return t < q.T; });
            const auto lo = hi - 1;
            const double w = (T - lo->T) / (hi->T - lo->T);
            return std::exp((1.0 - w) * std::log(lo->gamma) + w * std::log(hi->gamma));
          },
      },
      model);
}

CompositeRelaxation calibrate_composite(double gamma_room, double T_room, double gamma_low,
                                        double T_low, double T_D, double gamma_res) {
  // [B(T_room/T_D)  T_room^2] [bg]   [gamma_room - gamma_res]
  // [B(T_low/T_D)   T_low^2 ] [A ] = [gamma_low  - gamma_res]
  const double b1 = bloch_gruneisen(T_room / T_D);
  const double b2 = bloch_gruneisen(T_low / T_D);
  const double q1 = T_room * T_room;
  const double q2 = T_low * T_low;
  const double det = b1 * q2 - b2 * q1;
  if (det == 0.0) throw std::invalid_argument("calibrate_composite: degenerate anchors");
  const double r1 = gamma_room - gamma_res;
  const double r2 = gamma_low - gamma_res;
  const double bg = (r1 * q2 - r2 * q1) / det;
  const double A = (b1 * r2 - b2 * r1) / det;
  if (bg < 0.0 || A < 0.0) {
    throw std::invalid_argument("calibrate_composite: anchors imply a negative coefficient");
  }
  return CompositeRelaxation{gamma_res, A, bg, T_D};
}

TableRelaxation make_table_relaxation(std::vector<TablePoint> points) {
  if (points.empty()) throw std::invalid_argument("relaxation table is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].gamma > 0.0) || !(points[i].T >= 0.0)) {
      throw std::invalid_argument("relaxation table needs T >= 0 and gamma > 0");
    }
    if (i > 0 && !(points[i].T > points[i - 1].T)) {
      throw std::invalid_argument("relaxation table must be strictly increasing in T");
    }
  }
  return TableRelaxation{std::move(points)};
}

double eps_imag_axis(const PermittivityModel& model, double xi, double T) {
  if (!(xi >= 0.0)) throw std::invalid_argument("eps_imag_axis: xi must be non-negative");
  return std::visit(
      overloaded{
          [&](const DrudeModel& m) {
            if (xi == 0.0) {
              throw std::domain_error("Drude permittivity is singular at xi = 0; use the zero-mode limit");
            }
            const double g = gamma_of_T(m.relaxation, T);
            return 1.0 + m.omega_p * m.omega_p / (xi * (xi + g));
          },
          [&](const PlasmaModel& m) {
            if (xi == 0.0) return std::numeric_limits<double>::infinity();
            return 1.0 + (m.omega_p / xi) * (m.omega_p / xi);
          },
          [](const ConstantPermittivity& m) { return m.eps; },
          [&](const PolarDebyeModel& m) {
            double e = 1.0;
            for (const auto& t : m.terms) e += t.strength / (1.0 + xi / t.frequency);
            return e;
          },
      },
      model);
}

bool is_metal(const PermittivityModel& model) {
  return std::holds_alternative<DrudeModel>(model) || std::holds_alternative<PlasmaModel>(model);
}

double static_permittivity(const PermittivityModel& model) {
  if (is_metal(model)) throw std::domain_error("static permittivity of a metal is infinite");
  return eps_imag_axis(model, 0.0, 0.0);
}

double plasma_frequency(const PermittivityModel& model) {
  if (const auto* d = std::get_if<DrudeModel>(&model)) return d->omega_p;
  if (const auto* p = std::get_if<PlasmaModel>(&model)) return p->omega_p;
  throw std::domain_error("plasma frequency requested for a dielectric model");
}

namespace au {

CompositeRelaxation composite_relaxation(double gamma_res) {
  const double xi1_10K = 2.0 * std::numbers::pi * kPhys.k_B * 10.0 / kPhys.hbar;
  return calibrate_composite(kGammaRoom, 300.0, kGammaOverXi1At10K * xi1_10K, 10.0,
                             kDebyeTemperature, gamma_res);
}

QuadraticRelaxation quadratic_relaxation() {
  const double xi1_10K = 2.0 * std::numbers::pi * kPhys.k_B * 10.0 / kPhys.hbar;
  return QuadraticRelaxation{kGammaOverXi1At10K * xi1_10K / 100.0};
}

DrudeModel drude() { return DrudeModel{kOmegaP, composite_relaxation()}; }
DrudeModel drude_quadratic() { return DrudeModel{kOmegaP, quadratic_relaxation()}; }
PlasmaModel plasma() { return PlasmaModel{kOmegaP}; }

}  // namespace au

PolarDebyeModel polar_dielectric_example() {
  return PolarDebyeModel{{DebyeTerm{93.0, 1e7}, DebyeTerm{6.0, 1e16}}};
}

}  // namespace casimir
