#include "tmsq/error.hpp"

namespace tmsq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kOverflow:
      return "OVERFLOW";
    case ErrorCode::kCutoffExceeded:
      return "CUTOFF_EXCEEDED";
    case ErrorCode::kCutoffMismatch:
      return "CUTOFF_MISMATCH";
    case ErrorCode::kExpmNotConverged:
      return "EXPM_NOT_CONVERGED";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace detail {

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace detail
}  // namespace tmsq
