// Run configuration for the command-line tool: material presets, JSON
// parsing and the embedded figure presets.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir/lifshitz.hpp"
#include "casimir/thermo.hpp"

namespace casimir {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { SweepT, SweepA, Figure1, Figure2, Figure3, Verify };

enum class Quantity { FreeEnergy, Pressure, Entropy };

/// start, stop and points >= 2; log spacing needs start > 0.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  bool log = false;

  std::vector<double> grid() const;
};

struct Material {
  std::string label;
  Reflector reflector;
};

struct RunConfig {
  Command command = Command::SweepT;
  std::vector<Material> materials;
  Quantity quantity = Quantity::Pressure;
  bool magnitude = false;  // emit |value|
  double a = 1e-6;         // m, fixed for temperature sweeps
  double T = 300.0;        // K, fixed for separation sweeps
  Range range;             // T in K or a in m, depending on the command
  std::string output_path;
  QuadratureSpec quadrature;
  DerivativeSpec derivative;
  // verify only
  std::optional<double> constant_gamma;  // rad/s
  std::optional<double> zeta3_override;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);
Quantity parse_quantity(const std::string& name);

/// au-drude, au-drude-quadratic, au-plasma, au-impedance, au-leontovich,
/// mica, eps100, polar-debye, ideal.
Material material_preset(const std::string& name);
std::vector<std::string> material_preset_names();

/// Either {"preset": name} or an explicit model, e.g.
/// {"type": "drude", "omega_p": 1.37e16, "relaxation": {"type": "constant", "gamma": 5.32e13}}.
Material material_from_json(const nlohmann::json& j);

/// Preset for figure1/2/3; a = 1 um, 120 log points on [1, 1200] K.
RunConfig figure_preset(Command c);

/// Builds a config for the given command; fields present in j override
/// the defaults (figure presets for figure commands).
RunConfig config_from_json(Command c, const nlohmann::json& j);

/// Throws ConfigError for empty ranges, missing materials or bad specs.
void validate(const RunConfig& cfg);

}  // namespace casimir
