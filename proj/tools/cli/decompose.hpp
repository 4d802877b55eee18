#pragma once

#include <ostream>

#include "cli/format.hpp"
#include "tmsq/su11.hpp"

namespace tmsq::cli {

struct DecomposeOptions {
  OutputFormat format = OutputFormat::kCsv;
  bool degrees = false;
};

/// Prints R, Phi, Theta, the reconstruction residual and the degenerate
/// flag. Returns 0 (a degenerate phase is reported, not an error) or 2 on
/// invalid parameters.
int run_decompose(const SqueezeParams& prime, const SqueezeParams& doubleprime,
                  const DecomposeOptions& options, std::ostream& out, std::ostream& err);

}  // namespace tmsq::cli
