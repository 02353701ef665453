#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rnf {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int order = 8;
  /// Random cases per suite.
  int samples = 10;
  /// Threshold for the flow and section comparisons.
  double tolerance = 1e-9;
};

struct SuiteResult {
  std::string name;
  /// "exact" or "numeric".
  std::string kind;
  int cases = 0;
  int failures = 0;
  /// Largest numeric discrepancy seen (numeric suites only).
  double max_error = 0;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

std::vector<std::string> exact_suite_names();
std::vector<std::string> numeric_suite_names();

/// Runs the named randomized identity suites; unknown names throw std::invalid_argument.
std::vector<SuiteResult> run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names);

}  // namespace rnf
