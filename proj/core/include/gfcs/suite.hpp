#pragma once

// Registry of named checks, the gated baseline, and suite execution.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gfcs/report.hpp"

namespace gfcs::verify {

/// Overrides applied on top of each check's pinned defaults.
struct RunOptions {
  std::optional<double> tolerance;  // replaces every check's tolerance
  std::optional<double> beta;
  std::optional<double> lambda;
  std::optional<int> truncation;
  std::uint64_t seed = 20240601;
};

struct CheckEntry {
  std::string id;
  bool baseline = false;  // harness self-test, runs first
  bool gated = true;      // decides the exit status
  std::string description;
  std::function<VerificationReport(const RunOptions&)> run;
};

const std::vector<CheckEntry>& registry();

/// nullptr when unknown
const CheckEntry* find_check(const std::string& id);

struct SuiteResult {
  std::vector<VerificationReport> reports;
  bool baseline_passed = true;
  bool gated_passed = true;
  std::vector<std::string> errors;  // runtime failures, reported as failed checks
};

/// Resolves "all", "baseline" or comma/space separated ids. Throws UsageError on unknown ids.
std::vector<std::string> resolve_selection(const std::vector<std::string>& selection);

/// Baseline checks always run first. When one fails, nothing else is executed.
SuiteResult run_suite(const std::vector<std::string>& ids, const RunOptions& options);

}  // namespace gfcs::verify
