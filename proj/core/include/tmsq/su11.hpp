#pragma once

// Bogoliubov matrices of the two-mode squeeze operator and the product
// decomposition S^dag(r', phi') S(r'', phi'') = e^{-i Theta} S(R, Phi - Theta) R(Theta).

#include <array>
#include <complex>

namespace tmsq {

using Complex = std::complex<double>;

/// Default overflow guard on |r|; cosh and sinh stay well inside double range.
inline constexpr double kDefaultRMax = 20.0;

/// Squeeze factor r and phase angle phi of S(r, phi).
///
/// The Bogoliubov matrix depends on phi only through e^{2i phi}, so two
/// parameter sets whose phases differ by a multiple of pi describe the same
/// operator; use `equivalent` to compare them.
struct SqueezeParams {
  double r = 0.0;
  double phi = 0.0;

  /// Throws INVALID_ARGUMENT on non-finite fields and OVERFLOW on |r| > r_max.
  void validate(double r_max = kDefaultRMax) const;
};

/// Same r, and phi equal modulo pi.
bool equivalent(const SqueezeParams& a, const SqueezeParams& b, double tol = 1e-12);

/// Element of SU(1,1) with phase, stored as the first row of
/// [[m11, m12], [conj(m12), conj(m11)]].
class GroupElement {
 public:
  static constexpr double kDeterminantTolerance = 1e-9;

  /// Identity element.
  GroupElement() = default;

  /// Validating factory: rejects non-finite entries and a determinant
  /// |m11|^2 - |m12|^2 further than kDeterminantTolerance (relative to the
  /// entry scale) from 1.
  static GroupElement from_components(Complex m11, Complex m12);

  static GroupElement identity() { return {}; }

  /// e^{i theta sigma_3} = diag(e^{i theta}, e^{-i theta}).
  static GroupElement diagonal_phase(double theta);

  Complex m11() const { return m11_; }
  Complex m12() const { return m12_; }

  /// Entry of the full 2x2 matrix, zero-based row and column.
  Complex entry(int row, int col) const;
  std::array<std::array<Complex, 2>, 2> matrix() const;

  /// |m11|^2 - |m12|^2.
  double determinant() const;

  /// |determinant - 1| divided by max(1, |m11|^2 + |m12|^2).
  double determinant_defect() const;

  friend GroupElement multiply(const GroupElement& a, const GroupElement& b);
  friend GroupElement inverse(const GroupElement& a);

 private:
  GroupElement(Complex m11, Complex m12) : m11_(m11), m12_(m12) {}

  Complex m11_{1.0, 0.0};
  Complex m12_{0.0, 0.0};
};

/// C_{r,phi}: m11 = cosh r, m12 = e^{2i phi} sinh r.
GroupElement c_matrix(const SqueezeParams& p, double r_max = kDefaultRMax);

GroupElement multiply(const GroupElement& a, const GroupElement& b);

/// m11 -> conj(m11), m12 -> -m12.
GroupElement inverse(const GroupElement& a);

/// Largest componentwise modulus of a - b over (m11, m12).
double max_abs_difference(const GroupElement& a, const GroupElement& b);

struct DecompositionTriple {
  double R = 0.0;      ///< >= 0
  double Phi = 0.0;    ///< radians; canonically 0 when R vanishes
  double Theta = 0.0;  ///< radians in (-pi, pi]
  /// Set when R is zero within kDegenerateThreshold, so Phi is unconstrained.
  bool degenerate_phase = false;
};

inline constexpr double kDegenerateThreshold = 1e-12;

/// Solves C_{R,Phi} e^{i Theta sigma_3} = C_{r'',phi''} C_{-r',phi'} for
/// (R, Phi, Theta) with R >= 0 and Theta on the principal branch.
DecompositionTriple decompose_product(const SqueezeParams& prime, const SqueezeParams& doubleprime,
                                      double r_max = kDefaultRMax);

/// The element C_{R,Phi} e^{i Theta sigma_3}: m11 = e^{i Theta} cosh R,
/// m12 = e^{i(2 Phi - Theta)} sinh R.
GroupElement reconstruct(const DecompositionTriple& d);

/// C_{r'',phi''} C_{-r',phi'}, the right-hand side that decompose_product factors.
GroupElement product_matrix(const SqueezeParams& prime, const SqueezeParams& doubleprime,
                            double r_max = kDefaultRMax);

}  // namespace tmsq
