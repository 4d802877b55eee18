#pragma once

// Brute-force counterpart of analytic_phases: every quantity is recomputed
// from truncated Fock-space states and ladder-operator matrices, without
// using the closed forms it is meant to check.

#include <complex>

#include "tmsq/analytic_phases.hpp"
#include "tmsq/fock_space.hpp"

namespace tmsq {

/// c_n = (-e^{2i phi} tanh r)^n / cosh r for n <= N.
DiagonalFockState schmidt_state(double r, double phi, int cutoff, double r_max = kDefaultRMax);

/// S(r, phi)|0,0> obtained by exponentiating the squeeze generator
/// r(a+ a- e^{-2i phi} - a+^dag a-^dag e^{2i phi}) on span{|n,n>}, where it
/// acts tridiagonally. The exponential is taken on an internally enlarged
/// subspace so the truncation edge does not leak into the kept amplitudes,
/// then cut back to `cutoff`.
///
/// Requires cutoff >= cutoff_for_tolerance(r, policy.tolerance) + policy.margin.
DiagonalFockState squeeze_by_exponentiation(double r, double phi, int cutoff,
                                            const TruncationPolicy& policy = {});

/// Applies e^{-i H0 t}: c_n -> e^{-i E_n t} c_n with
/// E_n = Omega (n + n) + epsilon (n - n) + energy_offset.
DiagonalFockState evolve(const DiagonalFockState& state, const HamiltonianParams& h, double t);

/// sum_n conj(a_n) b_n. Throws CUTOFF_MISMATCH on unequal cutoffs.
Complex overlap_numeric(const DiagonalFockState& a, const DiagonalFockState& b);

/// <psi|H0|psi> = sum_n E_n |c_n|^2.
double energy_expectation(const DiagonalFockState& state, const HamiltonianParams& h);

/// Composite trapezoid rule for int_0^t <psi(tau)|H0|psi(tau)> dtau along
/// the evolved trajectory of S(r, phi)|0>. The state is truncated so the
/// discarded mean photon number is below policy.tolerance.
double dynamical_integral(double r, double phi, const HamiltonianParams& h, double t, int steps,
                          const TruncationPolicy& policy = {});

struct NumericPhaseBreakdown {
  Complex overlap;
  double total_phase = 0.0;
  double dynamical_integral = 0.0;
  double geometric_phase = 0.0;  ///< in [0, 2pi)
  int cutoff = 0;
};

inline constexpr int kDefaultQuadratureSteps = 64;

/// Kinematic gamma = arg <psi(0)|psi(t)> + int <H>, all from Fock-space data.
NumericPhaseBreakdown phase_breakdown_numeric(double r, double phi, const HamiltonianParams& h,
                                              double t, const TruncationPolicy& policy = {},
                                              int steps = kDefaultQuadratureSteps);

double geometric_phase_numeric(double r, double phi, const HamiltonianParams& h, double t,
                               const TruncationPolicy& policy = {});

/// -sum p_n ln p_n with p_n = |c_n|^2 renormalized over the kept amplitudes.
double entropy_numeric(const DiagonalFockState& state);

/// r(a+ a- e^{-2i phi} - a+^dag a-^dag e^{2i phi}) built from truncated ladder matrices.
FullTwoModeOperator squeeze_generator(double r, double phi, int cutoff);

/// exp(squeeze_generator) by dense scaling-and-squaring.
FullTwoModeOperator squeeze_operator_exponential(double r, double phi, int cutoff);

/// Disentangled form
/// (cosh r)^{-1} exp(-e^{2i phi} tanh r a+^dag a-^dag)
///   exp(-(n+ + n-) ln cosh r) exp(e^{-2i phi} tanh r a+ a-).
/// Both outer factors are finite series of nilpotent truncated matrices, so
/// the result equals the top-left block of the untruncated operator exactly.
FullTwoModeOperator squeeze_operator_normal_ordered(double r, double phi, int cutoff);

enum class SqueezeConstruction {
  /// Check a S - S (a cosh r - b^dag e^{2i eta} sinh r) with the disentangled
  /// S. Exact up to rounding away from the cutoff.
  kNormalOrdered,
  /// Check S^dag a S - (a cosh r - b^dag e^{2i eta} sinh r) with S taken as
  /// the exponential of the truncated generator. Dominated by truncation
  /// error unless r is small.
  kExponential,
};

/// Worst entry of the Bogoliubov conjugation identities for a+ and a-,
/// restricted to n+, n- <= cutoff - margin.
double bogoliubov_residual(double r, double eta, int cutoff, int margin,
                           SqueezeConstruction construction = SqueezeConstruction::kNormalOrdered);

struct ConjugationResiduals {
  double rotation = 0.0;    ///< e^{-i theta N} S(r,phi) e^{i theta N} vs S(r, phi - theta)
  double modulation = 0.0;  ///< e^{-i eps t (n+ - n-)} S e^{i eps t (n+ - n-)} vs S
};

ConjugationResiduals rotation_conjugation_check(double r, double phi, double theta,
                                                double epsilon_t, int cutoff, int margin = 4);

}  // namespace tmsq
