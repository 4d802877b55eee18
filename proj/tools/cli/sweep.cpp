#include "cli/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cli/exit_codes.hpp"
#include "tmsq/analytic_phases.hpp"
#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"
#include "tmsq/fock_oracle.hpp"

namespace tmsq::cli {

namespace {

const std::set<std::string> kAngleColumns = {
    "omega_t",       "total_phase",       "delta",           "gamma_mod_2pi", "gamma_numeric",
    "abs_error",     "gamma_c_unreduced", "gamma_c_reduced", "gamma_c",
};

double grid_point(const SweepSpec& spec, int k) {
  if (k == spec.points - 1) return spec.stop;
  return spec.start + (spec.stop - spec.start) * k / (spec.points - 1);
}

std::vector<double> phase_columns(double r, const SweepSpec& spec, double t) {
  const HamiltonianParams h{spec.fixed.Omega, spec.fixed.epsilon, 0.0};
  TruncationPolicy policy;
  policy.tolerance = spec.tolerance;
  policy.max_cutoff = spec.max_cutoff;

  const PhaseBreakdown analytic = geometric_phase(r, h.Omega, t);
  const double numeric = geometric_phase_numeric(r, spec.fixed.phi, h, t, policy);
  return {analytic.overlap.real(),
          analytic.overlap.imag(),
          analytic.total_phase,
          analytic.dynamical_term_delta,
          analytic.geometric_phase,
          numeric,
          circular_distance(analytic.geometric_phase, numeric)};
}

nlohmann::ordered_json spec_json(const SweepSpec& spec, const SweepOptions& options) {
  nlohmann::ordered_json j;
  j["variable"] = to_string(spec.variable);
  j["start"] = spec.start;
  j["stop"] = spec.stop;
  j["points"] = spec.points;
  j["fixed"] = {{"r", spec.fixed.r},
                {"Omega", spec.fixed.Omega},
                {"epsilon", spec.fixed.epsilon},
                {"phi", spec.fixed.phi},
                {"t", spec.fixed.t}};
  j["tolerance"] = spec.tolerance;
  j["max_cutoff"] = spec.max_cutoff;
  j["degrees"] = options.degrees;
  return j;
}

Table to_degrees(const Table& table) {
  const double scale = 180.0 / kPi;
  Table converted(table.columns());
  for (std::size_t i = 0; i < table.rows(); ++i) {
    std::vector<double> values = table.row(i);
    for (std::size_t c = 0; c < values.size(); ++c)
      if (kAngleColumns.count(table.columns()[c])) values[c] *= scale;
    converted.add_row(std::move(values));
  }
  return converted;
}

}  // namespace

std::optional<SweepVariable> parse_sweep_variable(const std::string& name) {
  if (name == "r") return SweepVariable::kR;
  if (name == "omega_t") return SweepVariable::kOmegaT;
  if (name == "gamma_c") return SweepVariable::kGammaC;
  return std::nullopt;
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kR:
      return "r";
    case SweepVariable::kOmegaT:
      return "omega_t";
    case SweepVariable::kGammaC:
      return "gamma_c";
  }
  return "?";
}

std::optional<std::string> SweepSpec::validation_error() const {
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(start) || !finite(stop)) return "start and stop must be finite";
  if (!(start < stop)) return "start must be below stop";
  if (points < 2) return "points must be >= 2";
  if (!finite(fixed.r) || !finite(fixed.Omega) || !finite(fixed.epsilon) || !finite(fixed.phi) ||
      !finite(fixed.t))
    return "fixed parameters must be finite";
  if (!(tolerance > 0.0 && tolerance < 1.0)) return "tolerance must lie in (0, 1)";
  if (max_cutoff < 0) return "max-cutoff must be non-negative";
  if (variable == SweepVariable::kGammaC) {
    if (start < 0.0) return "gamma_c sweeps must start at or above 0";
    return std::nullopt;
  }
  if (!(fixed.Omega > 0.0)) return "Omega must be positive";
  if (!(std::abs(fixed.epsilon) < fixed.Omega)) return "|epsilon| must be below Omega";
  const double r_bound = variable == SweepVariable::kR ? std::max(std::abs(start), std::abs(stop))
                                                       : std::abs(fixed.r);
  if (r_bound > kDefaultRMax) return "|r| exceeds r_max";
  return std::nullopt;
}

Table build_sweep_table(const SweepSpec& spec) {
  switch (spec.variable) {
    case SweepVariable::kGammaC: {
      Table table({"gamma_c", "entropy"});
      for (int k = 0; k < spec.points; ++k) {
        const double g = grid_point(spec, k);
        table.add_row({g, entropy_from_cyclic_phase(g)});
      }
      return table;
    }
    case SweepVariable::kOmegaT: {
      Table table({"omega_t", "re_overlap", "im_overlap", "total_phase", "delta", "gamma_mod_2pi",
                   "gamma_numeric", "abs_error"});
      for (int k = 0; k < spec.points; ++k) {
        const double wt = grid_point(spec, k);
        std::vector<double> row{wt};
        const auto cols = phase_columns(spec.fixed.r, spec, wt / spec.fixed.Omega);
        row.insert(row.end(), cols.begin(), cols.end());
        table.add_row(std::move(row));
      }
      return table;
    }
    case SweepVariable::kR: {
      Table table({"r", "re_overlap", "im_overlap", "total_phase", "delta", "gamma_mod_2pi",
                   "gamma_numeric", "abs_error", "gamma_c_unreduced", "gamma_c_reduced",
                   "entropy"});
      for (int k = 0; k < spec.points; ++k) {
        const double r = grid_point(spec, k);
        std::vector<double> row{r};
        const auto cols = phase_columns(r, spec, spec.fixed.t);
        row.insert(row.end(), cols.begin(), cols.end());
        const CyclicPhase cyclic = cyclic_geometric_phase(r);
        row.push_back(cyclic.unreduced);
        row.push_back(cyclic.reduced);
        row.push_back(entropy_from_squeeze(r));
        table.add_row(std::move(row));
      }
      return table;
    }
  }
  return Table({});
}

int run_sweep(const SweepSpec& spec, const SweepOptions& options, std::ostream& out,
              std::ostream& err) {
  if (const auto problem = spec.validation_error()) {
    err << "usage error: " << *problem << '\n';
    return kExitUsage;
  }

  Table table({});
  try {
    table = build_sweep_table(spec);
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (e.code() == ErrorCode::kCutoffExceeded) return kExitResourceLimit;
    return e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kOverflow
               ? kExitUsage
               : kExitInvariantFailure;
  }

  double worst = 0.0;
  const std::size_t err_col = table.column_index("abs_error");
  if (err_col < table.columns().size())
    for (std::size_t i = 0; i < table.rows(); ++i) worst = std::max(worst, table.row(i)[err_col]);

  const Table shown = options.degrees ? to_degrees(table) : table;
  if (options.format == OutputFormat::kCsv)
    shown.write_csv(out);
  else
    write_json(out, spec_json(spec, options), shown);

  if (worst > kSweepAgreement) {
    err << "invariant failure: abs_error " << format_number(worst) << " exceeds "
        << format_number(kSweepAgreement) << '\n';
    return kExitInvariantFailure;
  }
  return kExitSuccess;
}

}  // namespace tmsq::cli
