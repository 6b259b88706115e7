#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace flagcone::report {

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"info", "base", "sasaki", "cone", "calabi", "asymptotics"};
  return names;
}

struct JobConfig {
  std::string series = "A";
  int rank = 1;
  std::vector<int> theta;
  int ell = 1;
  std::string backend = "float";
  int jet_order = 4;
  int samples = 3;
  std::uint64_t seed = 0;
  double constant = 1.0;
  std::vector<double> radii = {10.0, 100.0, 1000.0};
  std::vector<std::string> suites = all_suites();
  // An explicit suite list turns a crepancy refusal into a configuration error.
  bool suites_explicit = false;
  double tolerance_scale = 1.0;
  bool timing = false;
  int threads = 0;

  bool exact() const { return backend == "exact"; }
  bool wants(const std::string& suite) const;
};

// Parses and validates; throws Error(kInvalidArgument) on bad input and
// Error(kNotCrepant) when an explicitly requested suite needs ell = I.
JobConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const JobConfig& c);

}  // namespace flagcone::report
