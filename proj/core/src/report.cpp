#include "gfcs/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "gfcs/errors.hpp"

namespace gfcs::verify {

void VerificationReport::finalize() {
  if (!(tolerance > 0.0)) throw DomainError("VerificationReport: tolerance must be > 0");
  max_residual = residuals.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
  for (double r : residuals) {
    const double v = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
    if (v > max_residual) max_residual = v;
  }
  pass = max_residual <= tolerance;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["grid_summary"] = grid_summary;
  j["max_residual"] = json_number(max_residual);
  j["tolerance"] = json_number(tolerance);
  j["pass"] = pass;
  j["notes"] = notes;
  return j;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "check_id,params,grid_summary,max_residual,tolerance,pass,notes\n";
  for (const auto& r : reports) {
    std::string notes;
    for (std::size_t i = 0; i < r.notes.size(); ++i) {
      if (i) notes += "; ";
      notes += r.notes[i];
    }
    out += csv_field(r.check_id) + ',' + csv_field(r.params.dump()) + ',' + csv_field(r.grid_summary) + ',' +
           format_double(r.max_residual) + ',' + format_double(r.tolerance) + ',' +
           (r.pass ? "true" : "false") + ',' + csv_field(notes) + '\n';
  }
  return out;
}

}  // namespace gfcs::verify
