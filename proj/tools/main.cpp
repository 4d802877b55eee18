// tmsq: phases and entanglement of the two-mode squeezed vacuum.
//
//   tmsq verify    [--tolerance T] [--max-cutoff N] [--seed S]
//   tmsq sweep     --variable r|omega_t|gamma_c --start A --stop B --points K [...]
//   tmsq decompose --prime-r R1 --prime-phi P1 --doubleprime-r R2 --doubleprime-phi P2

#include <iostream>

#include "CLI11.hpp"
#include "cli/decompose.hpp"
#include "cli/exit_codes.hpp"
#include "cli/sweep.hpp"
#include "cli/verify.hpp"
#include "tmsq/error.hpp"

int main(int argc, char** argv) {
  using namespace tmsq::cli;

  CLI::App app{"Geometric, dynamical and total phases of two-mode squeezed vacuum states"};
  app.require_subcommand(1);
  app.fallthrough();

  double tolerance = 1e-12;
  int max_cutoff = tmsq::kDefaultMaxCutoff;
  std::string format_name = "csv";
  std::uint64_t seed = 0;
  bool degrees = false;
  app.add_option("--tolerance", tolerance, "Truncation tolerance (discarded probability)")
      ->capture_default_str();
  app.add_option("--max-cutoff", max_cutoff, "Largest Fock cutoff allowed")->capture_default_str();
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for random sampling in verify")->capture_default_str();
  app.add_flag("--degrees", degrees, "Display angles in degrees (input stays in radians)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  int margin = 4;
  verify->add_option("--margin", margin, "Rows excluded near the cutoff in operator checks")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Tabulate phases over a parameter grid");
  std::string variable_name;
  SweepSpec spec;
  sweep->add_option("--variable", variable_name, "Swept variable")
      ->required()
      ->check(CLI::IsMember({"r", "omega_t", "gamma_c"}));
  sweep->add_option("--start", spec.start, "First grid value (radians for angles)")->required();
  sweep->add_option("--stop", spec.stop, "Last grid value")->required();
  sweep->add_option("--points", spec.points, "Number of grid points (>= 2)")->required();
  sweep->add_option("--r", spec.fixed.r, "Squeeze factor when not swept")->capture_default_str();
  sweep->add_option("--omega", spec.fixed.Omega, "Carrier frequency Omega")->capture_default_str();
  sweep->add_option("--epsilon", spec.fixed.epsilon, "Modulation frequency epsilon")
      ->capture_default_str();
  sweep->add_option("--phi", spec.fixed.phi, "Squeeze phase angle")->capture_default_str();
  sweep->add_option("--t", spec.fixed.t, "Evolution time for r sweeps")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Factor S^dag(r',phi') S(r'',phi'')");
  tmsq::SqueezeParams prime, doubleprime;
  decompose->add_option("--prime-r", prime.r)->required();
  decompose->add_option("--prime-phi", prime.phi)->required();
  decompose->add_option("--doubleprime-r", doubleprime.r)->required();
  decompose->add_option("--doubleprime-phi", doubleprime.phi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const OutputFormat format = format_name == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  if (*verify) {
    VerifyOptions options;
    options.policy.tolerance = tolerance;
    options.policy.max_cutoff = max_cutoff;
    options.policy.margin = margin;
    options.seed = seed;
    try {
      options.policy.validate();
    } catch (const tmsq::Error& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    if (margin > options.operator_cutoff) {
      std::cerr << "usage error: margin exceeds the operator cutoff\n";
      return kExitUsage;
    }
    return run_verify(options, std::cout);
  }

  if (*sweep) {
    spec.variable = *parse_sweep_variable(variable_name);
    spec.tolerance = tolerance;
    spec.max_cutoff = max_cutoff;
    return run_sweep(spec, {format, degrees}, std::cout, std::cerr);
  }

  return run_decompose(prime, doubleprime, {format, degrees}, std::cout, std::cerr);
}
