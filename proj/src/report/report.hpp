#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "common/residual.hpp"
#include "report/config.hpp"

namespace flagcone::report {

inline constexpr int kSchemaVersion = 1;

struct Check {
  std::string name;
  std::string anchor;  // the identity being tested, as a formula
  std::string backend;
  int samples = 0;
  double tolerance = 0;
  double residual = 0;
  bool exact = false;
  bool exact_zero = false;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string status;  // pass | fail | refused
  std::string detail;
  std::vector<Check> checks;
  double wall_time = 0;
};

struct VerificationReport {
  JobConfig config;
  nlohmann::json info;
  std::vector<SuiteResult> suites;
  bool passed = false;
};

// Combinatorial and naming data for a configuration.
nlohmann::json info_json(const JobConfig& c);

VerificationReport verify(const JobConfig& c);
nlohmann::json report_to_json(const VerificationReport& r);

// Tensor dump of one quantity at one point; see docs/report_schema.md.
nlohmann::json evaluate(const JobConfig& c, const nlohmann::json& request);

}  // namespace flagcone::report
