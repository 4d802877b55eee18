#include "tmsq/analytic_phases.hpp"

#include <cmath>

#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"

namespace tmsq {

namespace {

void check_point(double r, double Omega, double t, double r_max) {
  SqueezeParams{r, 0.0}.validate(r_max);
  detail::require(std::isfinite(Omega) && Omega > 0.0, ErrorCode::kInvalidArgument,
                  "Omega must be finite and positive");
  detail::require(std::isfinite(t), ErrorCode::kInvalidArgument, "t must be finite");
}

double sinh_squared(double r) {
  const double s = std::sinh(r);
  return s * s;
}

// (1 + x) ln(1 + x) - x ln x written without the large cancelling terms.
double bose_entropy(double x) {
  if (x == 0.0) return 0.0;
  return std::log1p(x) + x * std::log1p(1.0 / x);
}

}  // namespace

void HamiltonianParams::validate() const {
  detail::require(std::isfinite(Omega) && std::isfinite(epsilon) && std::isfinite(energy_offset),
                  ErrorCode::kInvalidArgument, "Hamiltonian parameters must be finite");
  detail::require(Omega > 0.0, ErrorCode::kInvalidArgument, "Omega must be positive");
  detail::require(std::abs(epsilon) < Omega, ErrorCode::kInvalidArgument,
                  "|epsilon| must be below Omega");
}

Complex overlap_analytic(double r, double Omega, double t, double r_max) {
  check_point(r, Omega, t, r_max);
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  return 1.0 / (c * c - s * s * std::polar(1.0, -2.0 * Omega * t));
}

Complex total_phase_factor(double r, double Omega, double t, double r_max) {
  check_point(r, Omega, t, r_max);
  const double wt = Omega * t;
  const double ch2r = std::cosh(2.0 * r);
  const Complex numerator =
      std::polar(1.0, wt) * Complex(std::cos(wt), -std::sin(wt) * ch2r);
  const double cw = std::cos(wt);
  const double sw = std::sin(wt);
  return numerator / std::sqrt(cw * cw + sw * sw * ch2r * ch2r);
}

double dynamical_term(double r, double Omega, double t, double r_max) {
  check_point(r, Omega, t, r_max);
  return 2.0 * Omega * t * sinh_squared(r);
}

PhaseBreakdown geometric_phase(double r, double Omega, double t, double r_max) {
  PhaseBreakdown b;
  b.overlap = overlap_analytic(r, Omega, t, r_max);
  b.total_phase = std::arg(b.overlap);
  if (b.total_phase <= -kPi) b.total_phase = kPi;
  b.dynamical_term_delta = dynamical_term(r, Omega, t, r_max);
  b.geometric_phase_unreduced = b.total_phase + b.dynamical_term_delta;
  b.geometric_phase = wrap_to_2pi(b.geometric_phase_unreduced);
  return b;
}

double geometric_phase_closed_form(double r, double Omega, double t, double r_max) {
  check_point(r, Omega, t, r_max);
  const double wt = Omega * t;
  const double ch2r = std::cosh(2.0 * r);
  return wrap_to_2pi(wt * ch2r + std::atan2(-std::sin(wt) * ch2r, std::cos(wt)));
}

CyclicPhase cyclic_geometric_phase(double r, double r_max) {
  SqueezeParams{r, 0.0}.validate(r_max);
  CyclicPhase c;
  c.unreduced = kFourPi * sinh_squared(r);
  c.reduced = wrap_to_2pi(c.unreduced);
  return c;
}

double one_mode_cyclic_phase(double r, double r_max) {
  SqueezeParams{r, 0.0}.validate(r_max);
  return kTwoPi * sinh_squared(r);
}

double entropy_from_squeeze(double r, double r_max) {
  SqueezeParams{r, 0.0}.validate(r_max);
  return bose_entropy(sinh_squared(r));
}

double entropy_from_cyclic_phase(double gamma_c_unreduced) {
  detail::require(std::isfinite(gamma_c_unreduced), ErrorCode::kInvalidArgument,
                  "cyclic phase must be finite");
  detail::require(gamma_c_unreduced >= 0.0, ErrorCode::kInvalidArgument,
                  "cyclic phase must be non-negative (pass the unreduced value)");
  return bose_entropy(gamma_c_unreduced / kFourPi);
}

}  // namespace tmsq
