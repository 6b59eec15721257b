#pragma once

// Verification report records and their JSON / CSV serialisation.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gfcs::verify {

struct VerificationReport {
  std::string check_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string grid_summary;
  std::vector<double> residuals;  // one per grid point / index
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool gated = true;  // informational checks never decide the exit status
  std::vector<std::string> notes;

  /// Sets max_residual from the residuals (NaN counts as +inf) and pass from
  /// max_residual <= tolerance. Requires tolerance > 0.
  void finalize();

  /// Exactly {check_id, params, grid_summary, max_residual, tolerance, pass, notes}.
  nlohmann::ordered_json to_json() const;
};

/// Shortest round-trip decimal, locale independent; "inf", "-inf", "nan" otherwise.
std::string format_double(double v);

/// Non-finite residuals become strings in JSON since the format has no literal for them.
nlohmann::ordered_json json_number(double v);

std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Header plus one row per report; params and notes are embedded as JSON / '; '-joined text.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace gfcs::verify
