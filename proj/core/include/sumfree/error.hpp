#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumfree {

enum class ErrorCode {
  ZeroInverse,
  InvalidModulus,
  NoModulusFound,
  LimitExceeded,
  Overflow,
  NotDivisible,
  DependentBasis,
  ArityMismatch,
  ContradictionDetected,
  SplittingFieldTooLarge,
  InvalidArgument,
  ParseError,
};

/// Stable identifier for an error code, e.g. "LimitExceeded".
std::string_view error_name(ErrorCode code) noexcept;

/// All library failures are reported as this exception type; `code()` tells
/// callers (and the CLI exit-status mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sumfree
