#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "cli/format.hpp"
#include "tmsq/fock_space.hpp"

namespace tmsq::cli {

enum class SweepVariable { kR, kOmegaT, kGammaC };

std::optional<SweepVariable> parse_sweep_variable(const std::string& name);
std::string to_string(SweepVariable v);

/// Values held fixed while one variable is swept. For an omega_t sweep the
/// time is omega_t / Omega; for an r sweep the point is (Omega, t).
struct SweepFixed {
  double r = 1.0;
  double Omega = 1.0;
  double epsilon = 0.0;
  double phi = 0.0;
  double t = 2.0 * 3.141592653589793;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::kGammaC;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  SweepFixed fixed;
  double tolerance = 1e-12;
  int max_cutoff = kDefaultMaxCutoff;

  /// Empty when valid, otherwise a usage message.
  std::optional<std::string> validation_error() const;
};

struct SweepOptions {
  OutputFormat format = OutputFormat::kCsv;
  bool degrees = false;
};

/// Largest allowed |gamma_analytic - gamma_numeric| on the circle.
inline constexpr double kSweepAgreement = 1e-8;

/// Builds the table for `spec`; angles stay in radians.
Table build_sweep_table(const SweepSpec& spec);

/// Renders the sweep. Returns 0, 1 if any abs_error exceeds kSweepAgreement
/// (the table is still written), 2 on a bad spec, 3 on CUTOFF_EXCEEDED.
/// Diagnostics go to `err`.
int run_sweep(const SweepSpec& spec, const SweepOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace tmsq::cli
