#ifndef FLAGCONE_FLAGCONE_H
#define FLAGCONE_FLAGCONE_H

/*
 * C interface to the flagcone verification engine.
 *
 * A job is created from a JSON configuration and then queried; every query
 * returns a JSON document in a string owned by the caller, to be released
 * with fc_string_free. Functions return FC_OK or an error code, in which case
 * fc_last_error_message() describes the failure for the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  if defined(FLAGCONE_BUILDING)
#    define FC_API __declspec(dllexport)
#  else
#    define FC_API __declspec(dllimport)
#  endif
#else
#  define FC_API __attribute__((visibility("default")))
#endif

typedef struct fc_job fc_job;

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_INVALID_ARGUMENT = 1,
  FC_ERR_DOMAIN = 2,
  FC_ERR_TRUNCATION = 3,
  FC_ERR_INTERNAL = 4,
  FC_ERR_NOT_CREPANT = 5,
  FC_ERR_CONTACT = 6,
  FC_ERR_NULL_POINTER = 7,
  FC_ERR_UNKNOWN = 99
} fc_status;

FC_API const char* fc_version(void);

/* Config keys: series, rank, theta, ell, backend, jet_order, samples, seed,
   C, radii, suites, tolerance_scale, timing, threads. All but rank are
   optional. */
FC_API fc_status fc_job_create(const char* config_json, fc_job** out_job);
FC_API void fc_job_destroy(fc_job* job);

FC_API fc_status fc_job_info(const fc_job* job, char** out_json);

/* Runs the configured suites. *out_passed is 1 when every check passed;
   the report is produced either way. */
FC_API fc_status fc_job_verify(const fc_job* job, int* out_passed, char** out_json);

/* request_json: {"quantity": ..., "z": ["1/2+i", ...], "b": "...", "r": "..."} */
FC_API fc_status fc_job_eval(const fc_job* job, const char* request_json, char** out_json);

FC_API void fc_string_free(char* s);
FC_API const char* fc_last_error_message(void);

#ifdef __cplusplus
}
#endif

#endif
