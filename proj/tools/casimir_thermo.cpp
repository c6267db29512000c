// casimir-thermo: thermal Casimir free energy, pressure and entropy sweeps,
// figure reproduction and the self-check suite.
//
// Exit codes: 0 success, 1 usage or config error, 2 numerical
// non-convergence, 3 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/config.hpp"
#include "casimir/sweep.hpp"
#include "casimir/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kNonConvergence = 2, kVerifyFailed = 3 };

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw casimir::ConfigError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw casimir::ConfigError("'" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw casimir::ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string replace_extension(std::string path, const std::string& ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

int run_verify(const casimir::RunConfig& cfg, const std::string& out, bool json_summary) {
  casimir::VerifyOptions opts;
  opts.zeta3_override = cfg.zeta3_override;
  opts.constant_gamma = cfg.constant_gamma;
  const auto rep = casimir::run_verify(opts);
  casimir::write_table(rep, std::cout);
  const auto summary = casimir::to_json(rep);
  if (json_summary) std::cout << summary.dump() << '\n';
  if (!out.empty()) write_file(out, summary.dump(2) + "\n");
  return rep.passed() ? kOk : kVerifyFailed;
}

int run_sweep(const casimir::RunConfig& cfg, const std::string& out, const std::string& format) {
  const auto table = casimir::run_sweep(cfg);
  std::ostringstream csv;
  casimir::write_csv(table, csv);
  const bool want_csv = format != "svg";
  const bool want_svg = format != "csv";
  if (want_csv) {
    if (out.empty()) {
      std::cout << csv.str();
    } else {
      write_file(replace_extension(out, ".csv"), csv.str());
    }
  }
  if (want_svg) {
    const std::string svg_path = out.empty() ? casimir::command_name(cfg.command) + ".svg"
                                             : replace_extension(out, ".svg");
    std::ostringstream svg;
    casimir::write_svg(table, svg, casimir::command_name(cfg.command) + ", a = " + std::to_string(cfg.a * 1e6) + " um");
    write_file(svg_path, svg.str());
  }
  if (casimir::outcome(table) == casimir::SweepOutcome::CompleteWithWarnings) {
    std::cerr << "warning: some points did not reach the requested tolerance (see converged columns)\n";
    return kNonConvergence;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Casimir free energy, pressure and entropy between parallel plates"};
  std::string command, config_path, out, material, format = "csv", quantity;
  double a = 0.0, T = 0.0, constant_gamma = 0.0, zeta3 = 0.0;
  int points = 0;
  bool json_summary = false;
  app.add_option("command", command, "sweep-T, sweep-a, figure1, figure2, figure3 or verify")->required();
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out, "output path (extension replaced per format)");
  app.add_option("--a", a, "plate separation in meters");
  app.add_option("--T", T, "temperature in K (separation sweeps)");
  app.add_option("--material", material, "material preset name or JSON file");
  app.add_option("--points", points, "number of grid points");
  app.add_option("--format", format, "csv, svg or both")->check(CLI::IsMember({"csv", "svg", "both"}));
  app.add_option("--quantity", quantity, "free-energy, pressure or entropy (sweeps)");
  app.add_option("--constant-gamma", constant_gamma, "verify: constant relaxation in rad/s for the regime finding");
  app.add_option("--zeta3", zeta3, "verify: override the zeta(3) constant under test");
  app.add_flag("--json", json_summary, "verify: also print the JSON summary");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto cmd = casimir::parse_command(command);
    const auto j = config_path.empty() ? nlohmann::json(nullptr) : read_json(config_path);
    auto cfg = casimir::config_from_json(cmd, j);
    if (a > 0.0) cfg.a = a;
    if (T > 0.0) cfg.T = T;
    if (points > 0) cfg.range.points = points;
    if (!quantity.empty()) cfg.quantity = casimir::parse_quantity(quantity);
    if (!material.empty()) {
      cfg.materials = {std::filesystem::exists(material) ? casimir::material_from_json(read_json(material))
                                                         : casimir::material_preset(material)};
    }
    if (constant_gamma > 0.0) cfg.constant_gamma = constant_gamma;
    if (zeta3 > 0.0) cfg.zeta3_override = zeta3;
    if (!out.empty()) cfg.output_path = out;
    casimir::validate(cfg);
    if (cmd == casimir::Command::Verify) return run_verify(cfg, cfg.output_path, json_summary);
    return run_sweep(cfg, cfg.output_path, format);
  } catch (const casimir::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const casimir::LowTemperatureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}
