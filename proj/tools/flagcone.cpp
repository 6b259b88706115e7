#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <toml.hpp>

#include "flagcone/flagcone.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

struct Options {
  std::string config_file;
  std::optional<int> rank, ell, jet_order, samples, threads;
  std::optional<std::string> theta, backend, radii, suites;
  std::optional<std::uint64_t> seed;
  std::optional<double> constant, tolerance_scale;
  bool timing = false;
  std::string out;
  std::string quantity;
  std::string z, b, r;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// Copies the recognised keys of a TOML table into a JSON config.
json from_toml(const std::string& path) {
  toml::table t = toml::parse_file(path);
  json j = json::object();
  for (auto&& [key, node] : t) {
    const std::string k(key.str());
    if (auto v = node.value<std::int64_t>(); v && node.is_integer())
      j[k] = *v;
    else if (auto d = node.value<double>(); d && node.is_floating_point())
      j[k] = *d;
    else if (auto s = node.value<std::string>())
      j[k] = *s;
    else if (auto bv = node.value<bool>(); bv && node.is_boolean())
      j[k] = *bv;
    else if (const toml::array* arr = node.as_array()) {
      json a = json::array();
      for (auto&& e : *arr) {
        if (e.is_integer())
          a.push_back(*e.value<std::int64_t>());
        else if (e.is_floating_point())
          a.push_back(*e.value<double>());
        else if (e.is_string())
          a.push_back(*e.value<std::string>());
        else
          throw std::runtime_error("unsupported array entry for '" + k + "' in " + path);
      }
      j[k] = a;
    } else {
      throw std::runtime_error("unsupported value for '" + k + "' in " + path);
    }
  }
  return j;
}

json build_config(const Options& o) {
  json j = o.config_file.empty() ? json::object() : from_toml(o.config_file);
  if (o.rank) j["rank"] = *o.rank;
  if (o.ell) j["ell"] = *o.ell;
  if (o.jet_order) j["jet_order"] = *o.jet_order;
  if (o.samples) j["samples"] = *o.samples;
  if (o.threads) j["threads"] = *o.threads;
  if (o.seed) j["seed"] = *o.seed;
  if (o.constant) j["C"] = *o.constant;
  if (o.tolerance_scale) j["tolerance_scale"] = *o.tolerance_scale;
  if (o.backend) j["backend"] = *o.backend;
  if (o.timing) j["timing"] = true;
  if (o.theta) {
    std::vector<int> theta;
    for (const std::string& s : split(*o.theta)) {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument("bad theta entry '" + s + "'");
      theta.push_back(v);
    }
    j["theta"] = theta;
  }
  if (o.radii) {
    std::vector<double> radii;
    for (const std::string& s : split(*o.radii)) radii.push_back(std::stod(s));
    j["radii"] = radii;
  }
  if (o.suites) j["suites"] = split(*o.suites);
  return j;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

struct Job {
  fc_job* handle = nullptr;
  ~Job() { fc_job_destroy(handle); }
};

int report_error(fc_status status) {
  std::cerr << "flagcone: " << fc_last_error_message() << "\n";
  return status == FC_ERR_INVALID_ARGUMENT || status == FC_ERR_NOT_CREPANT || status == FC_ERR_DOMAIN ? kExitUsage : kExitFail;
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  fc_string_free(s);
  return out;
}

int run(const std::string& command, const Options& o) {
  json config;
  try {
    config = build_config(o);
  } catch (const std::exception& e) {
    std::cerr << "flagcone: " << e.what() << "\n";
    return kExitUsage;
  }
  Job job;
  if (fc_status st = fc_job_create(config.dump().c_str(), &job.handle); st != FC_OK) return report_error(st);

  char* text = nullptr;
  if (command == "info") {
    if (fc_status st = fc_job_info(job.handle, &text); st != FC_OK) return report_error(st);
    emit(take(text), o.out);
    return kExitPass;
  }
  if (command == "verify") {
    int passed = 0;
    if (fc_status st = fc_job_verify(job.handle, &passed, &text); st != FC_OK) return report_error(st);
    emit(take(text), o.out);
    return passed ? kExitPass : kExitFail;
  }
  json request;
  request["quantity"] = o.quantity;
  if (!o.z.empty()) request["z"] = split(o.z);
  if (!o.b.empty()) request["b"] = o.b;
  if (!o.r.empty()) request["r"] = o.r;
  if (fc_status st = fc_job_eval(job.handle, request.dump().c_str(), &text); st != FC_OK) return report_error(st);
  emit(take(text), o.out);
  return kExitPass;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_file, "TOML file with config keys; flags override it")->check(CLI::ExistingFile);
  cmd->add_option("--rank", o.rank, "rank n of SL(n+1)");
  cmd->add_option("--theta", o.theta, "comma-separated 1-based simple roots of the Levi factor (\"\" for the full flag)");
  cmd->add_option("--ell", o.ell, "order of the root of the anticanonical bundle");
  cmd->add_option("--backend", o.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--jet-order", o.jet_order, "truncation order of the real-coordinate jets");
  cmd->add_option("--samples", o.samples, "sample points per suite");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--constant-C", o.constant, "positive constant of the Calabi ansatz");
  cmd->add_option("--radii", o.radii, "comma-separated increasing fibre radii for the asymptotics suite");
  cmd->add_option("--suites", o.suites, "comma-separated subset of info,base,sasaki,cone,calabi,asymptotics");
  cmd->add_option("--tolerance-scale", o.tolerance_scale, "multiplies every tolerance (0 forces failure)");
  cmd->add_option("--threads", o.threads, "worker threads (0 = hardware concurrency)");
  cmd->add_flag("--timing", o.timing, "include wall-clock times in the report");
  cmd->add_option("--out", o.out, "write JSON here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sasaki-Einstein and Calabi-Yau checks on generalized flag manifolds"};
  app.set_version_flag("--version", std::string(fc_version()));
  app.require_subcommand(1);
  Options o;
  CLI::App* info = app.add_subcommand("info", "print the combinatorial data of a configuration");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites and print a JSON report");
  CLI::App* eval = app.add_subcommand("eval", "print one tensor at one point");
  for (CLI::App* cmd : {info, verify, eval}) add_common(cmd, o);
  eval->add_option("--quantity", o.quantity, "potential, metric, ricci, eta, phi, sasaki_g, cone_g or calabi_g")->required();
  eval->add_option("--z", o.z, "comma-separated chart coordinates such as 1/2+i,0,-3/4i");
  eval->add_option("--b", o.b, "fibre coordinate (calabi_g)");
  eval->add_option("--r", o.r, "cone radius (cone_g)");

  // CLI11 rejects an empty attached value, so "--theta=" becomes "--theta" "".
  std::vector<std::string> args;
  for (int k = argc - 1; k > 0; --k) {
    std::string a = argv[k];
    if (a.size() > 2 && a.rfind("--", 0) == 0 && a.back() == '=') {
      args.emplace_back();
      a.pop_back();
    }
    args.push_back(a);
  }
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (CLI::App* cmd : {info, verify, eval})
    if (cmd->parsed()) return run(cmd->get_name(), o);
  return kExitUsage;
}
