#include "casimir/config.hpp"

#include <cmath>
#include <map>

namespace casimir {

namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ConfigError(std::string("missing or non-numeric field '") + key + "' in " + j.dump());
  }
  return j[key].get<double>();
}

double positive(const json& j, const char* key, double fallback) {
  const double v = j.contains(key) ? number(j, key) : fallback;
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string("'") + key + "' must be positive and finite");
  return v;
}

RelaxationModel relaxation_from_json(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "au-composite") return au::composite_relaxation();
    if (name == "au-quadratic") return au::quadratic_relaxation();
    throw ConfigError("unknown relaxation preset '" + name + "'");
  }
  const auto type = j.value("type", std::string());
  if (type == "constant") return ConstantRelaxation{positive(j, "gamma", 0.0)};
  if (type == "quadratic") return QuadraticRelaxation{positive(j, "gamma0", 0.0)};
  if (type == "composite") {
    return CompositeRelaxation{j.value("gamma_res", 0.0), number(j, "A_ee"), number(j, "bg_amplitude"),
                               number(j, "T_D")};
  }
  if (type == "table") {
    std::vector<TablePoint> pts;
    for (const auto& p : j.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    try {
      return make_table_relaxation(std::move(pts));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("unknown relaxation type '" + type + "'");
}

PermittivityModel permittivity_from_json(const json& j) {
  const auto type = j.value("type", std::string());
  if (type == "drude") {
    const auto relax = j.contains("relaxation") ? relaxation_from_json(j["relaxation"])
                                                : RelaxationModel(au::composite_relaxation());
    return DrudeModel{positive(j, "omega_p", au::kOmegaP), relax};
  }
  if (type == "plasma") return PlasmaModel{positive(j, "omega_p", au::kOmegaP)};
  if (type == "constant") {
    const double eps = number(j, "eps");
    if (!(eps >= 1.0)) throw ConfigError("constant permittivity must be >= 1");
    return ConstantPermittivity{eps};
  }
  if (type == "debye") {
    PolarDebyeModel m;
    for (const auto& t : j.at("terms")) m.terms.push_back({number(t, "strength"), number(t, "frequency")});
    if (m.terms.empty()) throw ConfigError("debye model needs at least one term");
    return m;
  }
  throw ConfigError("unknown permittivity type '" + type + "'");
}

RunConfig temperature_figure(std::vector<Material> mats, Quantity q, bool magnitude) {
  RunConfig cfg;
  cfg.materials = std::move(mats);
  cfg.quantity = q;
  cfg.magnitude = magnitude;
  cfg.a = 1e-6;
  cfg.range = Range{1.0, 1200.0, 120, true};
  return cfg;
}

Range range_from_json(const json& j, Range r) {
  if (j.contains("start")) r.start = number(j, "start");
  if (j.contains("stop")) r.stop = number(j, "stop");
  if (j.contains("points")) r.points = j["points"].get<int>();
  if (j.contains("spacing")) {
    const auto s = j["spacing"].get<std::string>();
    if (s != "log" && s != "linear") throw ConfigError("spacing must be 'log' or 'linear'");
    r.log = (s == "log");
  }
  return r;
}

}  // namespace

std::vector<double> Range::grid() const {
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    g[static_cast<std::size_t>(i)] =
        log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start))) : start + t * (stop - start);
  }
  g.front() = start;
  g.back() = stop;
  return g;
}

Command parse_command(const std::string& name) {
  static const std::map<std::string, Command> table{
      {"sweep-T", Command::SweepT},   {"sweep-a", Command::SweepA}, {"figure1", Command::Figure1},
      {"figure2", Command::Figure2},  {"figure3", Command::Figure3}, {"verify", Command::Verify}};
  const auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown command '" + name + "'");
  return it->second;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::SweepT: return "sweep-T";
    case Command::SweepA: return "sweep-a";
    case Command::Figure1: return "figure1";
    case Command::Figure2: return "figure2";
    case Command::Figure3: return "figure3";
    case Command::Verify: return "verify";
  }
  return "";
}

Quantity parse_quantity(const std::string& name) {
  if (name == "free-energy") return Quantity::FreeEnergy;
  if (name == "pressure") return Quantity::Pressure;
  if (name == "entropy") return Quantity::Entropy;
  throw ConfigError("unknown quantity '" + name + "' (free-energy, pressure, entropy)");
}

std::vector<std::string> material_preset_names() {
  return {"au-drude", "au-drude-quadratic", "au-plasma", "au-impedance", "au-leontovich",
          "mica",     "eps100",             "polar-debye", "ideal"};
}

Material material_preset(const std::string& name) {
  if (name == "au-drude") return {name, PermittivityModel(au::drude())};
  if (name == "au-drude-quadratic") return {name, PermittivityModel(au::drude_quadratic())};
  if (name == "au-plasma") return {name, PermittivityModel(au::plasma())};
  if (name == "au-impedance") return {name, ImpedanceModel(InfraredOpticsImpedance{au::kOmegaP})};
  if (name == "au-leontovich") return {name, ImpedanceModel(LeontovichImpedance{PermittivityModel(au::drude())})};
  if (name == "mica") return {name, PermittivityModel(ConstantPermittivity{7.0})};
  if (name == "eps100") return {name, PermittivityModel(ConstantPermittivity{100.0})};
  if (name == "polar-debye") return {name, PermittivityModel(polar_dielectric_example())};
  if (name == "ideal") return {name, IdealMetal{}};
  throw ConfigError("unknown material preset '" + name + "'");
}

Material material_from_json(const json& j) {
  if (j.is_string()) return material_preset(j.get<std::string>());
  if (!j.is_object()) throw ConfigError("material must be a preset name or an object");
  if (j.contains("preset")) {
    auto m = material_preset(j["preset"].get<std::string>());
    if (j.contains("label")) m.label = j["label"].get<std::string>();
    return m;
  }
  const auto type = j.value("type", std::string());
  const auto label = j.value("label", type);
  if (type == "ideal") return {label, IdealMetal{}};
  if (type == "impedance") {
    const auto model = j.value("model", std::string("infrared"));
    if (model == "infrared") return {label, ImpedanceModel(InfraredOpticsImpedance{positive(j, "omega_p", au::kOmegaP)})};
    if (model == "leontovich") {
      return {label, ImpedanceModel(LeontovichImpedance{permittivity_from_json(j.at("inner"))})};
    }
    throw ConfigError("unknown impedance model '" + model + "'");
  }
  return {label, permittivity_from_json(j)};
}

RunConfig figure_preset(Command c) {
  switch (c) {
    case Command::Figure1: {
      auto cfg = temperature_figure({material_preset("au-impedance"), material_preset("au-drude")},
                                    Quantity::Pressure, true);
      cfg.command = c;
      return cfg;
    }
    case Command::Figure2: {
      auto cfg = temperature_figure(
          {material_preset("mica"), material_preset("eps100"), material_preset("polar-debye")},
          Quantity::Pressure, true);
      cfg.command = c;
      return cfg;
    }
    case Command::Figure3: {
      auto cfg = temperature_figure({material_preset("au-impedance"), material_preset("au-drude")},
                                    Quantity::Entropy, false);
      cfg.command = c;
      return cfg;
    }
    default:
      throw ConfigError("'" + command_name(c) + "' is not a figure command");
  }
}

RunConfig config_from_json(Command c, const json& j) {
  RunConfig cfg;
  if (c == Command::Figure1 || c == Command::Figure2 || c == Command::Figure3) {
    cfg = figure_preset(c);
  } else if (c == Command::SweepT) {
    cfg.range = Range{1.0, 1200.0, 120, true};
  } else if (c == Command::SweepA) {
    cfg.range = Range{1e-7, 5e-6, 50, true};
  }
  cfg.command = c;
  if (!j.is_object()) {
    if (j.is_null()) return cfg;
    throw ConfigError("config must be a JSON object");
  }
  try {
    if (j.contains("materials")) {
      cfg.materials.clear();
      for (const auto& m : j["materials"]) cfg.materials.push_back(material_from_json(m));
    }
    if (j.contains("material")) cfg.materials = {material_from_json(j["material"])};
    if (j.contains("quantity")) cfg.quantity = parse_quantity(j["quantity"].get<std::string>());
    if (j.contains("magnitude")) cfg.magnitude = j["magnitude"].get<bool>();
    if (j.contains("a")) cfg.a = number(j, "a");
    if (j.contains("T")) cfg.T = number(j, "T");
    if (j.contains("T_range")) cfg.range = range_from_json(j["T_range"], cfg.range);
    if (j.contains("a_range")) cfg.range = range_from_json(j["a_range"], cfg.range);
    if (j.contains("output")) cfg.output_path = j["output"].get<std::string>();
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      cfg.quadrature.rel_tol = t.value("rel_tol", cfg.quadrature.rel_tol);
      cfg.quadrature.abs_floor = t.value("abs_floor", cfg.quadrature.abs_floor);
      cfg.quadrature.max_subdivisions = t.value("max_subdivisions", cfg.quadrature.max_subdivisions);
      cfg.derivative.rel_step = t.value("rel_step", cfg.derivative.rel_step);
      cfg.derivative.richardson = t.value("richardson", cfg.derivative.richardson);
    }
    if (j.contains("constant_gamma")) cfg.constant_gamma = number(j, "constant_gamma");
    if (j.contains("zeta3")) cfg.zeta3_override = number(j, "zeta3");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  try {
    validate(cfg.quadrature);
    validate(cfg.derivative);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.command == Command::Verify) return;
  if (cfg.materials.empty()) throw ConfigError("no material given");
  const auto& r = cfg.range;
  if (!(r.points >= 2)) throw ConfigError("range needs at least 2 points");
  if (!(r.start < r.stop)) throw ConfigError("range start must be below stop");
  if (!(r.start > 0.0)) throw ConfigError("range start must be positive");
  if (!(cfg.a > 0.0)) throw ConfigError("separation must be positive");
  if (!(cfg.T > 0.0)) throw ConfigError("temperature must be positive");
}

}  // namespace casimir
