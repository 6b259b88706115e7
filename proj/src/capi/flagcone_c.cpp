#include "flagcone/flagcone.h"

#include <cstring>
#include <new>
#include <string>

#include "common/error.hpp"
#include "report/report.hpp"

struct fc_job {
  flagcone::report::JobConfig config;
};

namespace {

thread_local std::string g_last_error;

fc_status status_of(flagcone::ErrorCode code) {
  using flagcone::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return FC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDomain: return FC_ERR_DOMAIN;
    case ErrorCode::kTruncation: return FC_ERR_TRUNCATION;
    case ErrorCode::kInternalConsistency: return FC_ERR_INTERNAL;
    case ErrorCode::kNotCrepant: return FC_ERR_NOT_CREPANT;
    case ErrorCode::kContactFailure: return FC_ERR_CONTACT;
  }
  return FC_ERR_UNKNOWN;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
fc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return FC_OK;
  } catch (const flagcone::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return FC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FC_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return FC_ERR_UNKNOWN;
  }
}

fc_status null_pointer(const char* what) {
  g_last_error = std::string(what) + " is null";
  return FC_ERR_NULL_POINTER;
}

}  // namespace

extern "C" {

const char* fc_version(void) { return FLAGCONE_VERSION; }

fc_status fc_job_create(const char* config_json, fc_job** out_job) {
  if (!config_json) return null_pointer("config_json");
  if (!out_job) return null_pointer("out_job");
  *out_job = nullptr;
  return guarded([&] {
    auto config = flagcone::report::parse_config(nlohmann::json::parse(config_json));
    *out_job = new fc_job{std::move(config)};
  });
}

void fc_job_destroy(fc_job* job) { delete job; }

fc_status fc_job_info(const fc_job* job, char** out_json) {
  if (!job) return null_pointer("job");
  if (!out_json) return null_pointer("out_json");
  *out_json = nullptr;
  return guarded([&] { *out_json = copy_out(flagcone::report::info_json(job->config).dump(2)); });
}

fc_status fc_job_verify(const fc_job* job, int* out_passed, char** out_json) {
  if (!job) return null_pointer("job");
  if (!out_json) return null_pointer("out_json");
  *out_json = nullptr;
  return guarded([&] {
    auto report = flagcone::report::verify(job->config);
    if (out_passed) *out_passed = report.passed ? 1 : 0;
    *out_json = copy_out(flagcone::report::report_to_json(report).dump(2));
  });
}

fc_status fc_job_eval(const fc_job* job, const char* request_json, char** out_json) {
  if (!job) return null_pointer("job");
  if (!request_json) return null_pointer("request_json");
  if (!out_json) return null_pointer("out_json");
  *out_json = nullptr;
  return guarded([&] {
    auto result = flagcone::report::evaluate(job->config, nlohmann::json::parse(request_json));
    *out_json = copy_out(result.dump(2));
  });
}

void fc_string_free(char* s) { std::free(s); }

const char* fc_last_error_message(void) { return g_last_error.c_str(); }

}  // extern "C"
