// Temperature and separation sweeps, written as CSV and optionally as a
// self-contained SVG line plot.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/config.hpp"

namespace casimir {

struct SweepSeries {
  std::string label;
  std::vector<double> values;
  std::vector<bool> converged;
};

struct SweepTable {
  std::string axis_name;  // "T" or "a"
  std::string axis_unit;  // "K" or "m"
  std::string quantity;   // column name, e.g. "|P|"
  std::string unit;       // "Pa", ...
  std::vector<double> axis;
  std::vector<SweepSeries> series;

  bool all_converged() const;
};

enum class SweepOutcome { Complete, CompleteWithWarnings };

/// Evaluates every (point, material) pair in parallel, each point serially
/// inside; rows come out in grid order. Throws std::runtime_error on a
/// non-finite value and LowTemperatureError below the summation limit.
SweepTable run_sweep(const RunConfig& cfg);

SweepOutcome outcome(const SweepTable& t);

/// Header "T (K),|P| au-drude (Pa),converged au-drude,...", 12 significant
/// digits, LF line endings.
void write_csv(const SweepTable& t, std::ostream& os);

/// Log-log line plot of |value| against the axis.
void write_svg(const SweepTable& t, std::ostream& os, const std::string& title);

}  // namespace casimir
