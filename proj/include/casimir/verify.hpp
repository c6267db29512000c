// Self-check suite run by `casimir-thermo verify`: constants, engine
// oracles, published numbers and the low-temperature expansions.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace casimir {

struct VerifyRow {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  std::string tolerance;  // human-readable acceptance rule
  std::string source;     // "published", "derived" or "exact"
  bool passed = false;
  bool informational = false;  // reported, never counted as a failure
  std::string note;
};

struct VerifyOptions {
  std::optional<double> zeta3_override;  // fault injection for the constants check
  std::optional<double> constant_gamma;  // rad/s; adds the first-order regime finding
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  bool passed() const;
  int failures() const;
};

VerifyReport run_verify(const VerifyOptions& opts = {});

/// Fixed-width table of measured vs expected values.
void write_table(const VerifyReport& r, std::ostream& os);

/// {"passed": bool, "failures": n, "checks": [...]}.
nlohmann::json to_json(const VerifyReport& r);

}  // namespace casimir
