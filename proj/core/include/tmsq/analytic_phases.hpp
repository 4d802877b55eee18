#pragma once

// Closed-form phases and entanglement of the two-mode squeezed vacuum
// S(r, phi)|0> evolving under H0 = Omega (n+ + n-) + epsilon (n+ - n-), hbar = 1.

#include <complex>

#include "tmsq/su11.hpp"

namespace tmsq {

/// Frequencies of the two-mode Hamiltonian. The mode frequencies are
/// Omega +/- epsilon. `energy_offset` adds c * identity to H0; it is zero for
/// the physical Hamiltonian and exists to exercise gauge invariance.
struct HamiltonianParams {
  double Omega = 1.0;
  double epsilon = 0.0;
  double energy_offset = 0.0;

  /// Requires Omega > 0, |epsilon| < Omega, all fields finite.
  void validate() const;
};

struct PhaseBreakdown {
  Complex overlap;                        ///< <psi(0)|psi(t)>
  double total_phase = 0.0;               ///< arg(overlap) in (-pi, pi]
  double dynamical_term_delta = 0.0;      ///< integral of <H>, unreduced
  double geometric_phase = 0.0;           ///< in [0, 2pi)
  double geometric_phase_unreduced = 0.0; ///< total_phase + delta
};

struct CyclicPhase {
  double unreduced = 0.0;
  double reduced = 0.0;  ///< unreduced mod 2pi, in [0, 2pi)
};

/// <psi(0)|psi(t)> = 1 / (cosh^2 r - sinh^2 r e^{-2i Omega t}).
Complex overlap_analytic(double r, double Omega, double t, double r_max = kDefaultRMax);

/// Unit-modulus e^{-i Theta}:
/// e^{i Omega t}(cos Omega t - i sin Omega t cosh 2r) / (cos^2 Omega t + sin^2 Omega t cosh^2 2r)^{1/2}.
Complex total_phase_factor(double r, double Omega, double t, double r_max = kDefaultRMax);

/// delta = 2 Omega t sinh^2 r, the negative of the dynamical phase.
double dynamical_term(double r, double Omega, double t, double r_max = kDefaultRMax);

/// gamma = arg <psi(0)|psi(t)> + delta.
PhaseBreakdown geometric_phase(double r, double Omega, double t, double r_max = kDefaultRMax);

/// gamma mod 2pi from the collapsed closed form
/// Omega t cosh 2r + arg(cos Omega t - i sin Omega t cosh 2r).
double geometric_phase_closed_form(double r, double Omega, double t, double r_max = kDefaultRMax);

/// 4 pi sinh^2 r, and its reduction mod 2pi.
CyclicPhase cyclic_geometric_phase(double r, double r_max = kDefaultRMax);

/// 2 pi sinh^2 r (unreduced): cyclic phase of one isolated squeezed mode.
double one_mode_cyclic_phase(double r, double r_max = kDefaultRMax);

/// cosh^2 r ln cosh^2 r - sinh^2 r ln sinh^2 r, in nats.
double entropy_from_squeeze(double r, double r_max = kDefaultRMax);

/// (1 + x) ln(1 + x) - x ln x with x = gamma_c / 4pi. Takes the unreduced
/// cyclic phase; rejects negative input.
double entropy_from_cyclic_phase(double gamma_c_unreduced);

}  // namespace tmsq
