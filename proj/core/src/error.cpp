#include "sumfree/error.hpp"

namespace sumfree {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::NoModulusFound: return "NoModulusFound";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ContradictionDetected: return "ContradictionDetected";
    case ErrorCode::SplittingFieldTooLarge: return "SplittingFieldTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace sumfree
