#include "report/config.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "kahler/potential.hpp"

namespace flagcone::report {

bool JobConfig::wants(const std::string& suite) const {
  return std::find(suites.begin(), suites.end(), suite) != suites.end();
}

namespace {

const std::vector<std::string> kKnownKeys = {"series",          "rank",    "theta", "ell",    "backend", "jet_order", "samples", "seed",
                                             "C",               "radii",   "suites", "timing", "threads", "tolerance_scale"};

template <class T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::kInvalidArgument, std::string("config field '") + key + "' has the wrong type");
  }
}

}  // namespace

JobConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::kInvalidArgument, "config must be a JSON object");
  for (const auto& item : j.items())
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), item.key()) == kKnownKeys.end())
      fail(ErrorCode::kInvalidArgument, "unknown config field '" + item.key() + "'");

  JobConfig c;
  c.series = field<std::string>(j, "series", c.series);
  c.rank = field<int>(j, "rank", c.rank);
  c.theta = field<std::vector<int>>(j, "theta", c.theta);
  c.ell = field<int>(j, "ell", c.ell);
  c.backend = field<std::string>(j, "backend", c.backend);
  c.jet_order = field<int>(j, "jet_order", c.jet_order);
  c.samples = field<int>(j, "samples", c.samples);
  c.seed = field<std::uint64_t>(j, "seed", c.seed);
  c.constant = field<double>(j, "C", c.constant);
  c.radii = field<std::vector<double>>(j, "radii", c.radii);
  c.tolerance_scale = field<double>(j, "tolerance_scale", c.tolerance_scale);
  c.timing = field<bool>(j, "timing", c.timing);
  c.threads = field<int>(j, "threads", c.threads);
  if (j.contains("suites") && !j["suites"].is_null()) {
    c.suites = field<std::vector<std::string>>(j, "suites", {});
    c.suites_explicit = true;
  }

  if (c.series != "A") fail(ErrorCode::kInvalidArgument, "only series A is supported, got '" + c.series + "'");
  if (c.backend != "exact" && c.backend != "float")
    fail(ErrorCode::kInvalidArgument, "backend must be 'exact' or 'float', got '" + c.backend + "'");
  if (c.jet_order < 4 || c.jet_order > 8) fail(ErrorCode::kInvalidArgument, "jet_order must lie in 4..8");
  if (c.samples < 1 || c.samples > 1000) fail(ErrorCode::kInvalidArgument, "samples must lie in 1..1000");
  if (!(c.constant > 0) || !std::isfinite(c.constant)) fail(ErrorCode::kInvalidArgument, "C must be a positive finite number");
  if (!(c.tolerance_scale >= 0) || !std::isfinite(c.tolerance_scale))
    fail(ErrorCode::kInvalidArgument, "tolerance_scale must be a non-negative finite number");
  if (c.threads < 0) fail(ErrorCode::kInvalidArgument, "threads must be non-negative");
  if (c.radii.size() < 2) fail(ErrorCode::kInvalidArgument, "radius schedule needs at least two entries");
  for (std::size_t k = 0; k < c.radii.size(); ++k) {
    if (!(c.radii[k] > 0) || !std::isfinite(c.radii[k])) fail(ErrorCode::kInvalidArgument, "radii must be positive");
    if (k > 0 && !(c.radii[k] > c.radii[k - 1])) fail(ErrorCode::kInvalidArgument, "radii must be strictly increasing");
  }
  if (c.suites.empty()) fail(ErrorCode::kInvalidArgument, "suite list is empty");
  for (const std::string& s : c.suites)
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      fail(ErrorCode::kInvalidArgument, "unknown suite '" + s + "'");
  // Canonical order keeps reports independent of how suites were listed.
  std::vector<std::string> ordered;
  for (const std::string& s : all_suites())
    if (c.wants(s)) ordered.push_back(s);
  c.suites = ordered;

  // Validates rank, theta and ell against the root system.
  kahler::PotentialSpec spec(c.rank, c.theta, c.ell);
  c.theta = spec.parabolic().theta;
  if (c.suites_explicit && spec.ell() != spec.fano_index() && (c.wants("calabi") || c.wants("asymptotics")))
    fail(ErrorCode::kNotCrepant, "the Calabi ansatz needs ell = I = " + std::to_string(spec.fano_index()) + "; ell = " +
                                     std::to_string(c.ell) + " has crepancy status " +
                                     std::string(lie::to_string(spec.parabolic().crepancy())));
  return c;
}

nlohmann::json config_to_json(const JobConfig& c) {
  nlohmann::json j;
  j["series"] = c.series;
  j["rank"] = c.rank;
  j["theta"] = c.theta;
  j["ell"] = c.ell;
  j["backend"] = c.backend;
  j["jet_order"] = c.jet_order;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["C"] = c.constant;
  j["radii"] = c.radii;
  if (c.suites_explicit) j["suites"] = c.suites;
  j["tolerance_scale"] = c.tolerance_scale;
  return j;
}

}  // namespace flagcone::report
