#include "cli/decompose.hpp"

#include "cli/exit_codes.hpp"
#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"

namespace tmsq::cli {

int run_decompose(const SqueezeParams& prime, const SqueezeParams& doubleprime,
                  const DecomposeOptions& options, std::ostream& out, std::ostream& err) {
  DecompositionTriple d;
  double residual = 0.0;
  try {
    d = decompose_product(prime, doubleprime);
    residual = max_abs_difference(reconstruct(d), product_matrix(prime, doubleprime));
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const double angle_scale = options.degrees ? 180.0 / kPi : 1.0;
  if (options.format == OutputFormat::kJson) {
    nlohmann::ordered_json spec;
    spec["prime"] = {{"r", prime.r}, {"phi", prime.phi}};
    spec["doubleprime"] = {{"r", doubleprime.r}, {"phi", doubleprime.phi}};
    spec["degrees"] = options.degrees;
    nlohmann::ordered_json result;
    result["R"] = round_to_printed(d.R);
    result["Phi"] = round_to_printed(d.Phi * angle_scale);
    result["Theta"] = round_to_printed(d.Theta * angle_scale);
    result["reconstruction_residual"] = round_to_printed(residual);
    result["degenerate_phase"] = d.degenerate_phase;
    nlohmann::ordered_json doc;
    doc["spec"] = spec;
    doc["result"] = result;
    out << doc.dump(2) << '\n';
    return kExitSuccess;
  }

  out << "R," << format_number(d.R) << '\n'
      << "Phi," << format_number(d.Phi * angle_scale) << '\n'
      << "Theta," << format_number(d.Theta * angle_scale) << '\n'
      << "reconstruction_residual," << format_number(residual) << '\n'
      << "degenerate_phase," << (d.degenerate_phase ? "true" : "false") << '\n';
  if (d.degenerate_phase) err << "note: DEGENERATE_PHASE (R = 0, Phi unconstrained)\n";
  return kExitSuccess;
}

}  // namespace tmsq::cli
