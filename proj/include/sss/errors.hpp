#pragma once

#include <stdexcept>
#include <string>

namespace sss {

enum class ErrorCode {
  NonFinite,
  ConvergenceFailure,
  ShapeMismatch,
  DimensionMismatch,
  LengthMismatch,
  AllZero,
  ClusterTooSmall,
  EmptySelection,
  SpecInvalid,
  Io,
  Parse,
  RaggedRows,
};

/// Library-wide exception. `code()` classifies the failure; the message is
/// human-readable and names the offending entity (cluster id, line number, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace sss
