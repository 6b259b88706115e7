#pragma once

#include <stdexcept>
#include <string>

namespace flagcone {

enum class ErrorCode {
  kInvalidArgument,
  kDomain,
  kTruncation,
  kInternalConsistency,
  kNotCrepant,
  kContactFailure,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kTruncation: return "truncation";
    case ErrorCode::kInternalConsistency: return "internal-consistency";
    case ErrorCode::kNotCrepant: return "not-crepant";
    case ErrorCode::kContactFailure: return "contact-failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::kInvalidArgument, message);
}

}  // namespace flagcone
