#pragma once

#include <stdexcept>
#include <string>

namespace spdg {

enum class ErrorCode {
  InvalidInput,
  ConvergenceFailure,
  NotPositiveDefinite,
  DimMismatch,
  InvalidShape,
  BatchTooSmall,
  DegeneratePairs,
  Undefined,
  DegenerateSphere,
  InvalidMasks,
  InvalidVariable,
  ParseError,
  ConfigMismatch,
  IoError,
};

const char* error_code_name(ErrorCode code);

/// All library failures throw this; code() is machine-checkable, what() is
/// "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, ErrorCode code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace spdg
