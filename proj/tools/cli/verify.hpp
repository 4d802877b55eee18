#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tmsq/fock_space.hpp"

namespace tmsq::cli {

struct VerifyOptions {
  TruncationPolicy policy;
  std::uint64_t seed = 0;
  int operator_cutoff = 12;  ///< N for the dense (N+1)^2 operator checks
};

enum class CheckStatus { kPass, kFail, kError };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  double worst = 0.0;  ///< largest observed deviation (or violation count)
  double limit = 0.0;  ///< pass iff worst <= limit
  std::string worst_case;  ///< parameters at which `worst` occurred, or the error text
  bool resource_limit = false;  ///< error was CUTOFF_EXCEEDED
};

/// Runs every invariant check. Never throws for library errors; they are
/// recorded as kError results.
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options);

/// Prints the pass/fail table. Returns 0 if everything passed, 3 if any
/// check hit CUTOFF_EXCEEDED, otherwise 1.
int report(const std::vector<CheckResult>& results, std::ostream& out);

int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace tmsq::cli
