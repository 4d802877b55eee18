#include "tmsq/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"
#include "tmsq/expm.hpp"

namespace tmsq {

namespace {

// Probability tail left outside the enlarged exponentiation subspace;
// amplitudes there are ~1e-17.
constexpr double kWorkspaceTail = 1e-34;
constexpr int kWorkspacePadding = 8;

double pair_energy(const HamiltonianParams& h, int n) {
  const int n_plus = n;
  const int n_minus = n;
  return h.Omega * (n_plus + n_minus) + h.epsilon * (n_plus - n_minus) + h.energy_offset;
}

void check_operator_cutoff(int cutoff, int margin) {
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  if (cutoff > kMaxOperatorCutoff)
    detail::fail(ErrorCode::kCutoffExceeded,
                 "dense two-mode operators are limited to cutoff " +
                     std::to_string(kMaxOperatorCutoff));
  detail::require(margin >= 0 && margin <= cutoff, ErrorCode::kInvalidArgument,
                  "margin must lie in [0, cutoff]");
}

// Finite exponential series of a nilpotent matrix.
FullTwoModeOperator nilpotent_exp(const FullTwoModeOperator& a) {
  FullTwoModeOperator sum = FullTwoModeOperator::identity(a.cutoff());
  FullTwoModeOperator term = sum;
  for (int k = 1; k <= 2 * a.cutoff() + 1; ++k) {
    term = Complex(1.0 / k) * (term * a);
    if (term.matrix().cwiseAbs().maxCoeff() == 0.0) break;
    sum = sum + term;
  }
  return sum;
}

}  // namespace

DiagonalFockState schmidt_state(double r, double phi, int cutoff, double r_max) {
  SqueezeParams{r, phi}.validate(r_max);
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  const double base = -std::tanh(r);
  const double norm = 1.0 / std::cosh(r);
  std::vector<Complex> c(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n)
    c[static_cast<std::size_t>(n)] = std::pow(base, n) * norm * std::polar(1.0, 2.0 * n * phi);
  return DiagonalFockState(std::move(c));
}

DiagonalFockState squeeze_by_exponentiation(double r, double phi, int cutoff,
                                            const TruncationPolicy& policy) {
  SqueezeParams{r, phi}.validate();
  policy.validate();
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  if (cutoff > policy.max_cutoff)
    detail::fail(ErrorCode::kCutoffExceeded, "cutoff above policy.max_cutoff");
  const int required = cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff);
  detail::require(r == 0.0 || cutoff >= required + policy.margin, ErrorCode::kInvalidArgument,
                  "cutoff below the tail bound plus margin");

  const int workspace_cap = 4 * std::max(policy.max_cutoff, cutoff) + kWorkspacePadding;
  const int work =
      std::max(cutoff, cutoff_for_tolerance(r, kWorkspaceTail, workspace_cap)) + kWorkspacePadding;

  // G|n,n> = r e^{-2i phi} n |n-1,n-1> - r e^{2i phi} (n+1) |n+1,n+1>
  const Complex lower_coupling = r * std::polar(1.0, -2.0 * phi);
  const Complex raise_coupling = -r * std::polar(1.0, 2.0 * phi);
  auto apply = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    const Eigen::Index last = v.size() - 1;
    for (Eigen::Index n = 0; n <= last; ++n) {
      Complex acc{};
      if (n < last) acc += lower_coupling * static_cast<double>(n + 1) * v(n + 1);
      if (n > 0) acc += raise_coupling * static_cast<double>(n) * v(n - 1);
      out(n) = acc;
    }
    return out;
  };
  const double one_norm = std::abs(r) * (2.0 * work + 1.0);

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(work + 1);
  v(0) = 1.0;
  v = taylor_expmv(apply, one_norm, std::move(v));

  std::vector<Complex> c(v.data(), v.data() + cutoff + 1);
  return DiagonalFockState(std::move(c));
}

DiagonalFockState evolve(const DiagonalFockState& state, const HamiltonianParams& h, double t) {
  h.validate();
  detail::require(std::isfinite(t), ErrorCode::kInvalidArgument, "t must be finite");
  std::vector<Complex> c(state.coeffs().begin(), state.coeffs().end());
  for (int n = 0; n <= state.cutoff(); ++n)
    c[static_cast<std::size_t>(n)] *= std::polar(1.0, -pair_energy(h, n) * t);
  return DiagonalFockState(std::move(c));
}

Complex overlap_numeric(const DiagonalFockState& a, const DiagonalFockState& b) {
  detail::require(a.cutoff() == b.cutoff(), ErrorCode::kCutoffMismatch,
                  "states have different cutoffs");
  Complex sum{};
  for (int n = 0; n <= a.cutoff(); ++n) sum += std::conj(a[n]) * b[n];
  return sum;
}

double energy_expectation(const DiagonalFockState& state, const HamiltonianParams& h) {
  h.validate();
  double sum = 0.0;
  for (int n = 0; n <= state.cutoff(); ++n) sum += pair_energy(h, n) * std::norm(state[n]);
  return sum;
}

double dynamical_integral(double r, double phi, const HamiltonianParams& h, double t, int steps,
                          const TruncationPolicy& policy) {
  policy.validate();
  h.validate();
  detail::require(steps >= 1, ErrorCode::kInvalidArgument, "steps must be >= 1");
  detail::require(std::isfinite(t), ErrorCode::kInvalidArgument, "t must be finite");
  const int cutoff = moment_cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff);
  const DiagonalFockState initial = schmidt_state(r, phi, cutoff);

  const double dt = t / steps;
  double sum = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double weight = (k == 0 || k == steps) ? 0.5 : 1.0;
    sum += weight * energy_expectation(evolve(initial, h, k * dt), h);
  }
  return sum * dt;
}

NumericPhaseBreakdown phase_breakdown_numeric(double r, double phi, const HamiltonianParams& h,
                                              double t, const TruncationPolicy& policy, int steps) {
  policy.validate();
  NumericPhaseBreakdown b;
  b.cutoff = cutoff_for_tolerance(r, policy.tolerance, policy.max_cutoff);
  const DiagonalFockState initial = schmidt_state(r, phi, b.cutoff);
  b.overlap = overlap_numeric(initial, evolve(initial, h, t));
  b.total_phase = std::arg(b.overlap);
  b.dynamical_integral = dynamical_integral(r, phi, h, t, steps, policy);
  b.geometric_phase = wrap_to_2pi(b.total_phase + b.dynamical_integral);
  return b;
}

double geometric_phase_numeric(double r, double phi, const HamiltonianParams& h, double t,
                               const TruncationPolicy& policy) {
  return phase_breakdown_numeric(r, phi, h, t, policy).geometric_phase;
}

double entropy_numeric(const DiagonalFockState& state) {
  const double total = state.squared_norm();
  detail::require(total > 0.0, ErrorCode::kInvalidArgument, "state has zero norm");
  double entropy = 0.0;
  for (const Complex& c : state.coeffs()) {
    const double p = std::norm(c) / total;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

FullTwoModeOperator squeeze_generator(double r, double phi, int cutoff) {
  SqueezeParams{r, phi}.validate();
  check_operator_cutoff(cutoff, 0);
  const auto a_plus = annihilation(Mode::kPlus, cutoff);
  const auto a_minus = annihilation(Mode::kMinus, cutoff);
  const auto pair_lower = a_plus * a_minus;
  const auto pair_raise = pair_lower.adjoint();
  return Complex(r) * (std::polar(1.0, -2.0 * phi) * pair_lower -
                       std::polar(1.0, 2.0 * phi) * pair_raise);
}

FullTwoModeOperator squeeze_operator_exponential(double r, double phi, int cutoff) {
  const auto g = squeeze_generator(r, phi, cutoff);
  return FullTwoModeOperator(cutoff, expm(g.matrix()));
}

FullTwoModeOperator squeeze_operator_normal_ordered(double r, double phi, int cutoff) {
  SqueezeParams{r, phi}.validate();
  check_operator_cutoff(cutoff, 0);
  const auto a_plus = annihilation(Mode::kPlus, cutoff);
  const auto a_minus = annihilation(Mode::kMinus, cutoff);
  const auto pair_lower = a_plus * a_minus;
  const auto pair_raise = pair_lower.adjoint();
  const double tanh_r = std::tanh(r);
  const double cosh_r = std::cosh(r);

  const auto raise = nilpotent_exp(-std::polar(tanh_r, 2.0 * phi) * pair_raise);
  const auto lower = nilpotent_exp(std::polar(tanh_r, -2.0 * phi) * pair_lower);
  const auto middle = diagonal_operator(cutoff, [&](int np, int nm) {
    return Complex(std::pow(cosh_r, -(np + nm + 1)));
  });
  return raise * middle * lower;
}

double bogoliubov_residual(double r, double eta, int cutoff, int margin,
                           SqueezeConstruction construction) {
  SqueezeParams{r, eta}.validate();
  check_operator_cutoff(cutoff, margin);
  const auto a_plus = annihilation(Mode::kPlus, cutoff);
  const auto a_minus = annihilation(Mode::kMinus, cutoff);
  const Complex c(std::cosh(r));
  const Complex s = std::polar(std::sinh(r), 2.0 * eta);

  // S^dag a+ S = a+ cosh r - a-^dag e^{2i eta} sinh r, and the a- twin
  const auto rhs_plus = c * a_plus - s * a_minus.adjoint();
  const auto rhs_minus = c * a_minus - s * a_plus.adjoint();

  if (construction == SqueezeConstruction::kNormalOrdered) {
    const auto squeeze = squeeze_operator_normal_ordered(r, eta, cutoff);
    const double plus = (a_plus * squeeze - squeeze * rhs_plus).max_abs_inner(margin);
    const double minus = (a_minus * squeeze - squeeze * rhs_minus).max_abs_inner(margin);
    return std::max(plus, minus);
  }

  const auto squeeze = squeeze_operator_exponential(r, eta, cutoff);
  const auto squeeze_dag = squeeze.adjoint();
  const double plus = (squeeze_dag * a_plus * squeeze - rhs_plus).max_abs_inner(margin);
  const double minus = (squeeze_dag * a_minus * squeeze - rhs_minus).max_abs_inner(margin);
  return std::max(plus, minus);
}

ConjugationResiduals rotation_conjugation_check(double r, double phi, double theta,
                                                double epsilon_t, int cutoff, int margin) {
  check_operator_cutoff(cutoff, margin);
  detail::require(std::isfinite(theta) && std::isfinite(epsilon_t), ErrorCode::kInvalidArgument,
                  "angles must be finite");
  const auto squeeze = squeeze_operator_exponential(r, phi, cutoff);

  const auto rotation = diagonal_operator(
      cutoff, [&](int np, int nm) { return std::polar(1.0, -theta * (np + nm)); });
  const auto rotated_target = squeeze_operator_exponential(r, phi - theta, cutoff);

  const auto modulation = diagonal_operator(
      cutoff, [&](int np, int nm) { return std::polar(1.0, -epsilon_t * (np - nm)); });

  ConjugationResiduals out;
  out.rotation = (rotation * squeeze * rotation.adjoint() - rotated_target).max_abs_inner(margin);
  out.modulation = (modulation * squeeze * modulation.adjoint() - squeeze).max_abs_inner(margin);
  return out;
}

}  // namespace tmsq
