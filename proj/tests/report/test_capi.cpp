#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "flagcone/flagcone.h"

using nlohmann::json;

namespace {

struct Job {
  fc_job* handle = nullptr;
  fc_status status = FC_OK;
  explicit Job(const json& config) { status = fc_job_create(config.dump().c_str(), &handle); }
  ~Job() { fc_job_destroy(handle); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  fc_string_free(s);
  return out;
}

std::string verify_text(const json& config, int* passed = nullptr) {
  Job job(config);
  REQUIRE(job.status == FC_OK);
  char* text = nullptr;
  int ok = 0;
  REQUIRE(fc_job_verify(job.handle, &ok, &text) == FC_OK);
  if (passed) *passed = ok;
  return take(text);
}

json eval(const json& config, const json& request) {
  Job job(config);
  REQUIRE(job.status == FC_OK);
  char* text = nullptr;
  REQUIRE(fc_job_eval(job.handle, request.dump().c_str(), &text) == FC_OK);
  return json::parse(take(text));
}

fc_status create_status(const json& config) { return Job(config).status; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config validation") {
  json base = {{"rank", 1}, {"theta", json::array()}, {"ell", 2}};
  CHECK(create_status(base) == FC_OK);

  auto with = [&](const char* key, json value) {
    json j = base;
    j[key] = std::move(value);
    return create_status(j);
  };
  CHECK(with("colour", 1) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("series", "B") == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("rank", 0) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("theta", json::array({5})) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("ell", 0) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("backend", "quad") == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("jet_order", 3) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("samples", 0) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("C", 0.0) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("radii", json::array({100.0, 10.0})) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("radii", json::array({10.0})) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("suites", json::array({"base", "nope"})) == FC_ERR_INVALID_ARGUMENT);
  CHECK(with("rank", "two") == FC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(fc_last_error_message()).find("rank") != std::string::npos);

  fc_job* job = nullptr;
  CHECK(fc_job_create("{not json", &job) == FC_ERR_INVALID_ARGUMENT);
  CHECK(job == nullptr);
  CHECK(fc_job_create(nullptr, &job) == FC_ERR_NULL_POINTER);
  CHECK(fc_job_create("{}", nullptr) == FC_ERR_NULL_POINTER);
  char* text = nullptr;
  CHECK(fc_job_info(nullptr, &text) == FC_ERR_NULL_POINTER);
}

TEST_CASE("crepancy gate") {
  json explicit_calabi = {{"rank", 1}, {"theta", json::array()}, {"ell", 3}, {"suites", {"calabi"}}};
  CHECK(create_status(explicit_calabi) == FC_ERR_NOT_CREPANT);
  CHECK(std::string(fc_last_error_message()).find("non-root") != std::string::npos);

  int passed = 0;
  json report = json::parse(verify_text({{"rank", 1}, {"theta", json::array()}, {"ell", 3}, {"samples", 1}}, &passed));
  CHECK(passed == 1);
  for (const auto& s : report["suites"]) {
    if (s["name"] == "calabi" || s["name"] == "asymptotics") {
      CHECK(s["status"] == "refused");
      CHECK(s["detail"].get<std::string>().find("non-root") != std::string::npos);
    }
  }
}

TEST_CASE("info examples") {
  auto info = [](int rank, json theta, int ell) {
    Job job({{"rank", rank}, {"theta", theta}, {"ell", ell}});
    REQUIRE(job.status == FC_OK);
    char* text = nullptr;
    REQUIRE(fc_job_info(job.handle, &text) == FC_OK);
    return json::parse(take(text));
  };
  json gr = info(3, {1, 3}, 4);
  CHECK(gr["manifold"] == "Gr(2,C^4)");
  CHECK(gr["fano_index"] == 4);
  CHECK(gr["delta"] == "2a1+4a2+2a3");
  CHECK(gr["picard_rank"] == 1);
  CHECK(gr["crepancy"] == "crepant");

  json flag = info(2, json::array(), 2);
  CHECK(flag["fano_index"] == 2);
  CHECK(flag["picard_rank"] == 2);
  CHECK(flag["crepancy"] == "crepant");

  json hopf = info(1, json::array(), 1);
  CHECK(hopf["manifold"] == "CP^1");
  CHECK(hopf["link"] == "S^3");
}

TEST_CASE("eval examples") {
  json cp1 = {{"rank", 1}, {"theta", json::array()}, {"ell", 1}};
  json metric = eval(cp1, {{"quantity", "metric"}, {"z", {"0"}}});
  CHECK(metric["components"][0][0]["re"].get<double>() == doctest::Approx(1 / std::numbers::pi).epsilon(1e-14));

  json exact_cp1 = cp1;
  exact_cp1["backend"] = "exact";
  json exact_metric = eval(exact_cp1, {{"quantity", "metric"}, {"z", {"0"}}});
  CHECK(exact_metric["hessian"][0][0]["re"] == "2");
  CHECK(exact_metric["scale"] == "1/(2 pi)");

  json eta = eval(cp1, {{"quantity", "eta"}, {"z", {"0"}}});
  CHECK(eta["frame"] == json({"x1", "y1", "theta"}));
  CHECK(eta["components"] == json({0.0, 0.0, 1.0}));

  json gr = {{"rank", 3}, {"theta", {1, 3}}, {"ell", 4}, {"backend", "exact"}};
  json pot = eval(gr, {{"quantity", "potential"}, {"z", {"1", "0", "0", "1"}}});
  REQUIRE(pot["factors"].size() == 1);
  CHECK(pot["factors"][0]["norm_square"] == "4");
  CHECK(pot["factors"][0]["log_norm_square"].get<double>() == doctest::Approx(std::log(4.0)));
  CHECK(pot["K"] == "256");

  json rational = eval(exact_cp1, {{"quantity", "potential"}, {"z", {"1/2-3/4i"}}});
  CHECK(rational["factors"][0]["norm_square"] == "29/16");
  CHECK(rational["K"] == "841/256");

  json k_cp1 = {{"rank", 1}, {"theta", json::array()}, {"ell", 2}};
  json calabi = eval(k_cp1, {{"quantity", "calabi_g"}, {"z", {"0.3"}}, {"b", "0.5i"}});
  CHECK(calabi["frame"] == json({"dz1", "db"}));
  json cone = eval(k_cp1, {{"quantity", "cone_g"}, {"z", {"0"}}, {"r", "2"}});
  CHECK(cone["frame"][0] == "r");
  CHECK(cone["components"][0][0].get<double>() == doctest::Approx(1.0));

  Job job(cp1);
  char* text = nullptr;
  CHECK(fc_job_eval(job.handle, R"({"quantity": "torsion"})", &text) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_job_eval(job.handle, R"({"quantity": "metric", "z": ["1", "2"]})", &text) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_job_eval(job.handle, R"({"quantity": "metric", "z": ["1/0"]})", &text) == FC_ERR_DOMAIN);
  CHECK(fc_job_eval(job.handle, R"({"quantity": "cone_g", "z": ["0"], "r": "-1"})", &text) == FC_ERR_DOMAIN);
  CHECK(fc_job_eval(job.handle, R"({"quantity": "metric", "z": ["abc"]})", &text) == FC_ERR_INVALID_ARGUMENT);
  CHECK(text == nullptr);
}

TEST_CASE("forced failure under zero tolerance") {
  int passed = 1;
  json report = json::parse(verify_text(
      {{"rank", 1}, {"theta", json::array()}, {"ell", 2}, {"suites", {"base"}}, {"tolerance_scale", 0.0}}, &passed));
  CHECK(passed == 0);
  CHECK(report["passed"] == false);
  CHECK(report["suites"][0]["status"] == "fail");
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  for (const char* backend : {"float", "exact"}) {
    json config = {{"rank", 2}, {"theta", json::array()}, {"ell", 2}, {"backend", backend}, {"samples", 3}, {"seed", 7}};
    if (std::string(backend) == "exact") config["suites"] = {"base", "sasaki"};
    config["threads"] = 1;
    std::string serial = verify_text(config);
    config["threads"] = 4;
    std::string parallel = verify_text(config);
    std::string again = verify_text(config);
    CHECK(serial == parallel);
    CHECK(parallel == again);
  }
  json a = {{"rank", 1}, {"theta", json::array()}, {"ell", 2}, {"seed", 1}};
  json b = a;
  b["seed"] = 2;
  CHECK(verify_text(a) != verify_text(b));
}

// Replays each stored report from its echoed config. Float residuals are
// compared through their pass/fail outcome so that the goldens survive
// compiler and libm changes; everything else must match exactly.
TEST_CASE("golden reports replay") {
  namespace fs = std::filesystem;
  int replayed = 0;
  for (const auto& entry : fs::directory_iterator(FLAGCONE_GOLDEN_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().filename().string());
    json golden = json::parse(read_file(entry.path()));
    CHECK(golden["schema_version"] == 1);
    CHECK(golden["passed"] == true);
    int passed = 0;
    json fresh = json::parse(verify_text(golden["config"], &passed));
    CHECK(passed == 1);
    CHECK(fresh["config"] == golden["config"]);
    CHECK(fresh["info"] == golden["info"]);
    REQUIRE(fresh["suites"].size() == golden["suites"].size());
    for (std::size_t s = 0; s < golden["suites"].size(); ++s) {
      const json& gs = golden["suites"][s];
      const json& fs_ = fresh["suites"][s];
      CAPTURE(gs["name"].get<std::string>());
      CHECK(fs_["name"] == gs["name"]);
      CHECK(fs_["status"] == gs["status"]);
      REQUIRE(fs_["checks"].size() == gs["checks"].size());
      for (std::size_t k = 0; k < gs["checks"].size(); ++k) {
        const json& gc = gs["checks"][k];
        const json& fc = fs_["checks"][k];
        CAPTURE(gc["name"].get<std::string>());
        for (const char* key : {"name", "anchor", "backend", "samples", "tolerance", "passed"}) CHECK(fc[key] == gc[key]);
        if (gc.contains("exact_zero")) CHECK(fc["exact_zero"] == gc["exact_zero"]);
        if (gc["residual"].is_number_float() && fc["residual"].is_number_float() && gc["tolerance"].get<double>() > 0)
          CHECK(fc["residual"].get<double>() < gc["tolerance"].get<double>());
      }
    }
    ++replayed;
  }
  CHECK(replayed >= 8);
}
