#pragma once

namespace tmsq::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInvariantFailure = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
};

}  // namespace tmsq::cli
