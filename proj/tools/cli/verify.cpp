#include "cli/verify.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "cli/exit_codes.hpp"
#include "cli/format.hpp"
#include "tmsq/analytic_phases.hpp"
#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"
#include "tmsq/fock_oracle.hpp"
#include "tmsq/su11.hpp"

namespace tmsq::cli {

namespace {

// Records the largest deviation and where it happened.
class Worst {
 public:
  void observe(double value, const std::function<std::string()>& where) {
    if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
    if (!seen_ || value > worst_) {
      worst_ = value;
      where_ = where();
      seen_ = true;
    }
  }
  double value() const { return worst_; }
  const std::string& where() const { return where_; }

 private:
  bool seen_ = false;
  double worst_ = 0.0;
  std::string where_;
};

std::string params(std::initializer_list<std::pair<const char*, double>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += format_number(v);
  }
  return s;
}

using CheckBody = std::function<void(Worst&)>;

CheckResult run_check(const std::string& name, double limit, const CheckBody& body) {
  CheckResult result;
  result.name = name;
  result.limit = limit;
  Worst worst;
  try {
    body(worst);
    result.worst = worst.value();
    result.worst_case = worst.where();
    result.status = result.worst <= limit ? CheckStatus::kPass : CheckStatus::kFail;
  } catch (const Error& e) {
    result.status = CheckStatus::kError;
    result.worst = std::numeric_limits<double>::infinity();
    result.worst_case = e.what();
    result.resource_limit = e.code() == ErrorCode::kCutoffExceeded;
  }
  return result;
}

const std::vector<double> kOracleRadii = {0.1, 0.5, 1.0, 1.5, 2.0};

std::vector<double> omega_t_grid() {
  std::vector<double> grid;
  for (int k = 0; k < 63; ++k) grid.push_back(0.1 * k);
  grid.push_back(kTwoPi);
  return grid;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options) {
  const TruncationPolicy& policy = options.policy;
  std::vector<CheckResult> results;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> radius(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  results.push_back(run_check("su11.closure", GroupElement::kDeterminantTolerance, [&](Worst& w) {
    for (int chain = 0; chain < 20; ++chain) {
      GroupElement g;
      for (int k = 0; k < 100; ++k) {
        const SqueezeParams p{radius(rng), angle(rng)};
        g = multiply(g, c_matrix(p));
        w.observe(g.determinant_defect(), [&] {
          return params({{"chain", double(chain)}, {"length", double(k + 1)}});
        });
      }
    }
  }));

  results.push_back(run_check("su11.reconstruction", 1e-10, [&](Worst& w) {
    for (int k = 0; k < 1000; ++k) {
      const SqueezeParams a{radius(rng), angle(rng)};
      const SqueezeParams b{radius(rng), angle(rng)};
      const double err =
          max_abs_difference(reconstruct(decompose_product(a, b)), product_matrix(a, b));
      w.observe(err, [&] { return params({{"r'", a.r}, {"phi'", a.phi}, {"r''", b.r}, {"phi''", b.phi}}); });
    }
  }));

  results.push_back(run_check("su11.evolution_family", 1e-10, [&](Worst& w) {
    for (int i = 0; i <= 8; ++i) {
      const double r = 0.25 * i;
      for (double wt : omega_t_grid()) {
        const auto d = decompose_product({r, 0.4}, {r, 0.4 - wt});
        const double cw = std::cos(wt), sw = std::sin(wt), ch = std::cosh(2.0 * r);
        const double modulus = std::sqrt(cw * cw + sw * sw * ch * ch);
        const double err = std::max(std::abs(std::cosh(d.R) - modulus),
                                    circular_distance(d.Theta, -std::arg(total_phase_factor(r, 1.0, wt))));
        w.observe(err, [&] { return params({{"r", r}, {"omega_t", wt}}); });
      }
    }
  }));

  results.push_back(run_check("analytic.unit_modulus", 1e-12, [&](Worst& w) {
    for (int i = 0; i <= 30; ++i)
      for (int j = 0; j <= 125; ++j) {
        const double r = 0.1 * i, wt = 0.1 * j;
        w.observe(std::abs(std::abs(total_phase_factor(r, 1.0, wt)) - 1.0),
                  [&] { return params({{"r", r}, {"omega_t", wt}}); });
      }
  }));

  results.push_back(run_check("oracle.overlap", 1e-9, [&](Worst& w) {
    const HamiltonianParams h{1.0, 0.0, 0.0};
    for (double r : kOracleRadii) {
      const int n = cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff);
      const auto initial = schmidt_state(r, 0.3, n);
      for (double wt : omega_t_grid()) {
        const Complex numeric = overlap_numeric(initial, evolve(initial, h, wt));
        w.observe(std::abs(numeric - overlap_analytic(r, 1.0, wt)),
                  [&] { return params({{"r", r}, {"omega_t", wt}}); });
      }
    }
  }));

  results.push_back(run_check("oracle.geometric_phase", 1e-8, [&](Worst& w) {
    const HamiltonianParams h{1.0, 0.0, 0.0};
    for (double r : kOracleRadii)
      for (double wt : omega_t_grid()) {
        const double numeric = geometric_phase_numeric(r, 0.3, h, wt, policy);
        const double closed = geometric_phase_closed_form(r, 1.0, wt);
        w.observe(circular_distance(numeric, closed),
                  [&] { return params({{"r", r}, {"omega_t", wt}}); });
      }
  }));

  results.push_back(run_check("oracle.cyclic_total_phase", 1e-10, [&](Worst& w) {
    const HamiltonianParams h{1.0, 0.0, 0.0};
    for (double r : kOracleRadii) {
      const auto b = phase_breakdown_numeric(r, 0.3, h, kTwoPi, policy);
      w.observe(std::abs(b.overlap / std::abs(b.overlap) - 1.0), [&] { return params({{"r", r}}); });
    }
  }));

  results.push_back(run_check("oracle.cyclic_geometric_phase", 1e-9, [&](Worst& w) {
    const HamiltonianParams h{1.0, 0.0, 0.0};
    for (double r : kOracleRadii) {
      const double numeric = geometric_phase_numeric(r, 0.3, h, kTwoPi, policy);
      w.observe(circular_distance(numeric, kFourPi * std::sinh(r) * std::sinh(r)),
                [&] { return params({{"r", r}}); });
    }
  }));

  results.push_back(run_check("oracle.dynamical_term", 1e-10, [&](Worst& w) {
    for (double r : kOracleRadii)
      for (double eps : {0.0, 0.37, -0.6})
        for (int steps : {1, 1000}) {
          const HamiltonianParams h{1.0, eps, 0.0};
          const double wt = kPi / 4.0 + r;
          const double err = std::abs(dynamical_integral(r, 0.3, h, wt, steps, policy) -
                                      dynamical_term(r, 1.0, wt));
          w.observe(err, [&] {
            return params({{"r", r}, {"epsilon", eps}, {"steps", double(steps)}, {"omega_t", wt}});
          });
        }
  }));

  results.push_back(run_check("oracle.gauge_invariance", 1e-10, [&](Worst& w) {
    for (double r : kOracleRadii)
      for (double wt : {0.7, kPi / 4.0, 3.0, kTwoPi}) {
        const double base = geometric_phase_numeric(r, 0.3, {1.0, 0.0, 0.0}, wt, policy);
        for (double c : {-2.0, 0.7, 5.0}) {
          const double shifted = geometric_phase_numeric(r, 0.3, {1.0, 0.0, c}, wt, policy);
          w.observe(circular_distance(base, shifted),
                    [&] { return params({{"r", r}, {"omega_t", wt}, {"c", c}}); });
        }
      }
  }));

  results.push_back(run_check("oracle.exponentiation", 1e-10, [&](Worst& w) {
    for (double r : {0.0, 0.5, 1.0, 1.5, 2.0})
      for (double phi : {0.0, 0.7}) {
        const int n = cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff) + 10;
        TruncationPolicy p = policy;
        p.max_cutoff = std::max(p.max_cutoff, n);
        const auto brute = squeeze_by_exponentiation(r, phi, n, p);
        const auto schmidt = schmidt_state(r, phi, n);
        double err = 0.0;
        for (int k = 0; k <= n; ++k) err = std::max(err, std::abs(brute[k] - schmidt[k]));
        w.observe(err, [&] { return params({{"r", r}, {"phi", phi}, {"N", double(n)}}); });
      }
  }));

  results.push_back(run_check("oracle.disentangled_form", 1e-10, [&](Worst& w) {
    const int n = options.operator_cutoff;
    for (double r : {0.25, 0.5, 1.0}) {
      const auto ordered = squeeze_operator_normal_ordered(r, 0.2, n);
      const int big = cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff) + policy.margin;
      TruncationPolicy p = policy;
      p.max_cutoff = std::max(p.max_cutoff, big);
      const auto brute = squeeze_by_exponentiation(r, 0.2, big, p);
      const int vacuum = FullTwoModeOperator::index(n, 0, 0);
      double err = 0.0;
      for (int k = 0; k <= n; ++k)
        err = std::max(err, std::abs(ordered.matrix()(FullTwoModeOperator::index(n, k, k), vacuum) - brute[k]));
      w.observe(err, [&] { return params({{"r", r}, {"N", double(n)}}); });
    }
  }));

  results.push_back(run_check("oracle.bogoliubov", 1e-6, [&](Worst& w) {
    for (double r : {0.0, 0.25, 0.5, 0.75, 1.0})
      for (double eta : {0.0, 0.3, 1.1}) {
        const double res = bogoliubov_residual(r, eta, options.operator_cutoff, policy.margin);
        w.observe(res, [&] { return params({{"r", r}, {"eta", eta}}); });
      }
  }));

  results.push_back(run_check("oracle.rotation_conjugation", 1e-6, [&](Worst& w) {
    for (double r : {0.0, 0.5, 1.0})
      for (double theta : {0.0, 0.9, -2.4}) {
        const auto res = rotation_conjugation_check(r, 0.2, theta, 0.37 * theta + 0.1,
                                                    options.operator_cutoff, policy.margin);
        w.observe(std::max(res.rotation, res.modulation),
                  [&] { return params({{"r", r}, {"theta", theta}}); });
      }
  }));

  results.push_back(run_check("oracle.entropy", 1e-10, [&](Worst& w) {
    for (double r : kOracleRadii) {
      const int n = cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff);
      const double numeric = entropy_numeric(schmidt_state(r, 0.3, n));
      w.observe(std::abs(numeric - entropy_from_squeeze(r)), [&] { return params({{"r", r}}); });
    }
  }));

  results.push_back(run_check("analytic.entropy_identity", 1e-12, [&](Worst& w) {
    for (int i = 0; i <= 300; ++i) {
      const double r = 0.01 * i;
      const double err = std::abs(entropy_from_squeeze(r) -
                                  entropy_from_cyclic_phase(cyclic_geometric_phase(r).unreduced));
      w.observe(err, [&] { return params({{"r", r}}); });
    }
  }));

  results.push_back(run_check("analytic.additivity", 0.0, [&](Worst& w) {
    for (int i = 0; i <= 300; ++i) {
      const double r = 0.01 * i;
      const CyclicPhase c = cyclic_geometric_phase(r);
      const double one = one_mode_cyclic_phase(r);
      const double exact = std::abs(c.unreduced - 2.0 * one);
      // reduced values agree only mod 2pi
      const double reduced = circular_distance(c.reduced, wrap_to_2pi(one) + wrap_to_2pi(one));
      w.observe(std::max(exact, reduced > 1e-12 ? reduced : 0.0),
                [&] { return params({{"r", r}}); });
    }
  }));

  results.push_back(run_check("analytic.entropy_monotone", 0.0, [&](Worst& w) {
    double violations = 0.0;
    double previous = entropy_from_cyclic_phase(0.0);
    for (int k = 1; k <= 1000; ++k) {
      const double e = entropy_from_cyclic_phase(kTwoPi * k / 1000.0);
      if (!(e > previous)) violations += 1.0;
      previous = e;
    }
    w.observe(violations, [] { return std::string("gamma_c in (0, 2pi]"); });
  }));

  return results;
}

int report(const std::vector<CheckResult>& results, std::ostream& out) {
  bool failed = false;
  bool resource = false;
  out << std::left << std::setw(30) << "invariant" << std::setw(20) << "worst" << std::setw(20)
      << "limit" << std::setw(8) << "status"
      << "worst case\n";
  for (const auto& r : results) {
    const char* status = r.status == CheckStatus::kPass ? "PASS"
                         : r.status == CheckStatus::kFail ? "FAIL"
                                                          : "ERROR";
    failed |= r.status != CheckStatus::kPass;
    resource |= r.resource_limit;
    out << std::left << std::setw(30) << r.name << std::setw(20) << format_number(r.worst)
        << std::setw(20) << format_number(r.limit) << std::setw(8) << status << r.worst_case
        << '\n';
  }
  if (resource) {
    out << "verdict: CUTOFF_EXCEEDED\n";
    return kExitResourceLimit;
  }
  out << "verdict: " << (failed ? "FAIL" : "PASS") << '\n';
  return failed ? kExitInvariantFailure : kExitSuccess;
}

int run_verify(const VerifyOptions& options, std::ostream& out) {
  return report(run_invariant_suite(options), out);
}

}  // namespace tmsq::cli
