#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmsq {

enum class ErrorCode {
  kInvalidArgument,
  kOverflow,
  kCutoffExceeded,
  kCutoffMismatch,
  kExpmNotConverged,
};

/// Stable upper-case name used in CLI reports, e.g. "CUTOFF_EXCEEDED".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) fail(code, what);
}

}  // namespace detail
}  // namespace tmsq
