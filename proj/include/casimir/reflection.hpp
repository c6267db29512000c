// Squared reflection coefficients r_par^2 (TM) and r_perp^2 (TE) at
// imaginary frequency, from a permittivity or from a surface impedance.
//
// Arguments are the dimensionless frequency zeta = xi / omega_c and
// y = 2 a q with y >= zeta. The zero-frequency (l = 0) values are
// analytic limits chosen per model; they are never obtained numerically.

#pragma once

#include <variant>

#include "casimir/materials.hpp"
#include "casimir/scales.hpp"

namespace casimir {

struct ReflectionPair {
  double r_par_sq;
  double r_perp_sq;
};

// ---- impedance models ---------------------------------------------------------

/// Infrared-optics impedance Z(i zeta) = zeta / sqrt(omega_p_tilde^2 + zeta^2).
/// Holds omega_p in rad/s so that the model follows the separation.
struct InfraredOpticsImpedance {
  double omega_p;
};

/// Leontovich impedance Z = 1 / sqrt(eps(i xi)).
struct LeontovichImpedance {
  PermittivityModel inner;
};

using ImpedanceModel = std::variant<InfraredOpticsImpedance, LeontovichImpedance>;

/// How an impedance with Z(0) = 0 reflects at zero frequency.
enum class ZeroModeRule {
  NormalSkin,      // normal and anomalous skin effect: (1, 1)
  InfraredOptics,  // (1, ((wp - y) / (wp + y))^2)
};

// ---- coefficient formulas -----------------------------------------------------

/// Permittivity form. Throws std::invalid_argument if y < zeta.
ReflectionPair reflect_from_eps(double eps, double zeta, double y);

/// Plasma-model zero mode: r_par^2 = 1, r_perp^2 from the zeta -> 0 limit of
/// eps zeta^2 -> omega_p_tilde^2.
ReflectionPair plasma_zero_mode(double omega_p_tilde, double y);

/// Per-model coefficients at Matsubara index l, with analytic l = 0 limits.
ReflectionPair reflect_from_eps_model(const PermittivityModel& model, const PlateSystem& sys,
                                      long l, double y);

/// Z at Matsubara index l (analytic limit at l = 0).
double impedance_value(const ImpedanceModel& model, const PlateSystem& sys, long l);

/// Z at a continuous dimensionless frequency zeta > 0.
double impedance_at(const ImpedanceModel& model, const PlateSystem& sys, double zeta);

/// Impedance form. Throws std::invalid_argument if y < zeta and
/// std::domain_error when zeta = 0 and Z = 0 (use the zero-mode rule).
ReflectionPair reflect_from_impedance(double Z, double zeta, double y);

ReflectionPair reflect_impedance_zero_mode(ZeroModeRule rule, double omega_p_tilde, double y);

/// Zero-mode rule implied by an impedance model whose Z(0) vanishes.
ZeroModeRule zero_mode_rule(const ImpedanceModel& model);

// ---- reflection sources for the Lifshitz engine ---------------------------------

/// Perfect reflector: r_par^2 = r_perp^2 = 1 everywhere.
struct IdealMetal {};

/// Frequency- and angle-independent coefficients (quadrature oracle).
struct ConstantReflectivity {
  double r_par_sq;
  double r_perp_sq;
};

class Reflector {
 public:
  using Source = std::variant<PermittivityModel, ImpedanceModel, IdealMetal, ConstantReflectivity>;

  Reflector(PermittivityModel m) : source_(std::move(m)) {}
  Reflector(ImpedanceModel m) : source_(std::move(m)) {}
  Reflector(IdealMetal m) : source_(m) {}
  Reflector(ConstantReflectivity m) : source_(m) {}

  const Source& source() const { return source_; }

 private:
  Source source_;
};

/// Coefficients at one frequency, cheap to evaluate for many y. Holds the
/// already-evaluated eps or Z so that the y loop does no model dispatch.
class ModeReflection {
 public:
  enum class Kind { Fixed, FromEps, FromImpedance, PlasmaTE0, InfraredTE0 };

  static ModeReflection fixed(ReflectionPair p) { return {Kind::Fixed, p.r_par_sq, p.r_perp_sq, 0.0}; }
  static ModeReflection from_eps(double eps, double zeta) { return {Kind::FromEps, eps, 0.0, zeta}; }
  static ModeReflection from_impedance(double Z, double zeta) {
    return {Kind::FromImpedance, Z, 0.0, zeta};
  }
  static ModeReflection plasma_te0(double wpt) { return {Kind::PlasmaTE0, wpt, 0.0, 0.0}; }
  static ModeReflection infrared_te0(double wpt) { return {Kind::InfraredTE0, wpt, 0.0, 0.0}; }

  ReflectionPair operator()(double y) const;

  Kind kind() const { return kind_; }
  double zeta() const { return zeta_; }

 private:
  ModeReflection(Kind k, double p0, double p1, double zeta) : kind_(k), p0_(p0), p1_(p1), zeta_(zeta) {}

  Kind kind_;
  double p0_;
  double p1_;
  double zeta_;
};

/// Coefficients at Matsubara index l of the system's temperature.
ModeReflection mode_reflection(const Reflector& r, const PlateSystem& sys, long l);

/// Coefficients at continuous zeta > 0 (zero-temperature integrals).
ModeReflection mode_reflection_at(const Reflector& r, const PlateSystem& sys, double zeta);

}  // namespace casimir
