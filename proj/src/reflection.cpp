#include "casimir/reflection.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_order(double zeta, double y) {
  if (!(zeta >= 0.0)) throw std::invalid_argument("reflection: zeta must be non-negative");
  if (!(y >= zeta)) throw std::invalid_argument("reflection: requires y >= zeta");
}

double infrared_z(double wpt, double zeta) { return zeta / std::hypot(wpt, zeta); }

}  // namespace

ReflectionPair reflect_from_eps(double eps, double zeta, double y) {
  check_order(zeta, y);
  if (!std::isfinite(eps)) throw std::domain_error("reflect_from_eps: permittivity must be finite");
  if (zeta == 0.0) {
    const double r = (eps - 1.0) / (eps + 1.0);
    return {r * r, 0.0};
  }
  const double arg = (eps - 1.0) * zeta * zeta + y * y;
  if (arg < 0.0) throw std::domain_error("reflect_from_eps: negative radicand");
  const double s = std::sqrt(arg);
  // y - s = -(eps-1) zeta^2 / (y + s) and y eps - s = (eps-1)((eps+1) y^2 - zeta^2) / (y eps + s),
  // which avoid cancellation when eps is close to one.
  const double den_perp = y + s;
  const double r_perp = (eps - 1.0) * zeta * zeta / (den_perp * den_perp);
  const double den_par = y * eps + s;
  const double r_par = (eps - 1.0) * ((eps + 1.0) * y * y - zeta * zeta) / (den_par * den_par);
  return {r_par * r_par, r_perp * r_perp};
}

ReflectionPair plasma_zero_mode(double omega_p_tilde, double y) {
  if (!(y >= 0.0)) throw std::invalid_argument("plasma_zero_mode: y must be non-negative");
  const double d = y + std::hypot(omega_p_tilde, y);
  const double r = omega_p_tilde * omega_p_tilde / (d * d);
  return {1.0, r * r};
}

ReflectionPair reflect_from_eps_model(const PermittivityModel& model, const PlateSystem& sys,
                                      long l, double y) {
  if (l < 0) throw std::invalid_argument("reflect_from_eps_model: negative Matsubara index");
  if (l == 0) {
    check_order(0.0, y);
    if (std::holds_alternative<DrudeModel>(model)) return {1.0, 0.0};
    if (const auto* p = std::get_if<PlasmaModel>(&model)) {
      return plasma_zero_mode(p->omega_p / sys.omega_c, y);
    }
    return reflect_from_eps(static_permittivity(model), 0.0, y);
  }
  const double eps = eps_imag_axis(model, matsubara_xi(sys, l), sys.T);
  return reflect_from_eps(eps, zeta_l(sys, l), y);
}

double impedance_at(const ImpedanceModel& model, const PlateSystem& sys, double zeta) {
  return std::visit(overloaded{
                        [&](const InfraredOpticsImpedance& m) {
                          return infrared_z(m.omega_p / sys.omega_c, zeta);
                        },
                        [&](const LeontovichImpedance& m) {
                          if (zeta == 0.0) {
                            return is_metal(m.inner) ? 0.0 : 1.0 / std::sqrt(static_permittivity(m.inner));
                          }
                          return 1.0 / std::sqrt(eps_imag_axis(m.inner, zeta * sys.omega_c, sys.T));
                        },
                    },
                    model);
}

double impedance_value(const ImpedanceModel& model, const PlateSystem& sys, long l) {
  if (l < 0) throw std::invalid_argument("impedance_value: negative Matsubara index");
  return impedance_at(model, sys, l == 0 ? 0.0 : zeta_l(sys, l));
}

ReflectionPair reflect_from_impedance(double Z, double zeta, double y) {
  check_order(zeta, y);
  if (!(Z >= 0.0)) throw std::invalid_argument("reflect_from_impedance: Z must be non-negative");
  if (zeta == 0.0) {
    if (Z == 0.0) throw std::domain_error("reflect_from_impedance: Z(0) = 0 needs a zero-mode rule");
    return {1.0, 1.0};
  }
  const double zz = Z * zeta;
  const double r_par = (y - zz) / (y + zz);
  const double zy = Z * y;
  const double r_perp = (zeta - zy) / (zeta + zy);
  return {r_par * r_par, r_perp * r_perp};
}

ReflectionPair reflect_impedance_zero_mode(ZeroModeRule rule, double omega_p_tilde, double y) {
  if (!(y >= 0.0)) throw std::invalid_argument("reflect_impedance_zero_mode: y must be non-negative");
  if (rule == ZeroModeRule::NormalSkin) return {1.0, 1.0};
  const double r = (omega_p_tilde - y) / (omega_p_tilde + y);
  return {1.0, r * r};
}

ZeroModeRule zero_mode_rule(const ImpedanceModel& model) {
  if (std::holds_alternative<InfraredOpticsImpedance>(model)) return ZeroModeRule::InfraredOptics;
  const auto& inner = std::get<LeontovichImpedance>(model).inner;
  // 1/sqrt(eps_plasma) is exactly the infrared-optics impedance; a Drude
  // interior gives Z ~ sqrt(xi), the normal skin effect.
  return std::holds_alternative<PlasmaModel>(inner) ? ZeroModeRule::InfraredOptics
                                                    : ZeroModeRule::NormalSkin;
}

ReflectionPair ModeReflection::operator()(double y) const {
  switch (kind_) {
    case Kind::Fixed:
      return {p0_, p1_};
    case Kind::FromEps:
      return reflect_from_eps(p0_, zeta_, y);
    case Kind::FromImpedance:
      if (zeta_ == 0.0 && y == 0.0) return {1.0, 1.0};
      return reflect_from_impedance(p0_, zeta_, y);
    case Kind::PlasmaTE0:
      return plasma_zero_mode(p0_, y);
    case Kind::InfraredTE0:
      return reflect_impedance_zero_mode(ZeroModeRule::InfraredOptics, p0_, y);
  }
  return {0.0, 0.0};
}

namespace {

ModeReflection eps_mode(const PermittivityModel& m, const PlateSystem& sys, double zeta, bool zero) {
  if (zero) {
    if (std::holds_alternative<DrudeModel>(m)) return ModeReflection::fixed({1.0, 0.0});
    if (const auto* p = std::get_if<PlasmaModel>(&m)) {
      return ModeReflection::plasma_te0(p->omega_p / sys.omega_c);
    }
    return ModeReflection::from_eps(static_permittivity(m), 0.0);
  }
  return ModeReflection::from_eps(eps_imag_axis(m, zeta * sys.omega_c, sys.T), zeta);
}

ModeReflection impedance_mode(const ImpedanceModel& m, const PlateSystem& sys, double zeta, bool zero) {
  if (zero) {
    const double z0 = impedance_at(m, sys, 0.0);
    if (z0 > 0.0) return ModeReflection::from_impedance(z0, 0.0);
    if (zero_mode_rule(m) == ZeroModeRule::NormalSkin) return ModeReflection::fixed({1.0, 1.0});
    const double wpt = std::holds_alternative<InfraredOpticsImpedance>(m)
                           ? std::get<InfraredOpticsImpedance>(m).omega_p / sys.omega_c
                           : plasma_frequency(std::get<LeontovichImpedance>(m).inner) / sys.omega_c;
    return ModeReflection::infrared_te0(wpt);
  }
  return ModeReflection::from_impedance(impedance_at(m, sys, zeta), zeta);
}

ModeReflection dispatch(const Reflector& r, const PlateSystem& sys, double zeta, bool zero) {
  return std::visit(overloaded{
                        [&](const PermittivityModel& m) { return eps_mode(m, sys, zeta, zero); },
                        [&](const ImpedanceModel& m) { return impedance_mode(m, sys, zeta, zero); },
                        [](const IdealMetal&) { return ModeReflection::fixed({1.0, 1.0}); },
                        [](const ConstantReflectivity& c) {
                          return ModeReflection::fixed({c.r_par_sq, c.r_perp_sq});
                        },
                    },
                    r.source());
}

}  // namespace

ModeReflection mode_reflection(const Reflector& r, const PlateSystem& sys, long l) {
  if (l < 0) throw std::invalid_argument("mode_reflection: negative Matsubara index");
  return dispatch(r, sys, zeta_l(sys, l), l == 0);
}

ModeReflection mode_reflection_at(const Reflector& r, const PlateSystem& sys, double zeta) {
  if (!(zeta > 0.0)) throw std::invalid_argument("mode_reflection_at: zeta must be positive");
  return dispatch(r, sys, zeta, false);
}

}  // namespace casimir
