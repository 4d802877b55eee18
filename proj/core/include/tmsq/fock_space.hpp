#pragma once

// Truncated Fock-space representations used by the numerical oracle.
//
// Two representations coexist. DiagonalFockState holds amplitudes on the
// paired kets |n>_+ |n>_- only, which is all the squeezed vacuum ever
// occupies. FullTwoModeOperator is a dense matrix over every |n+, n->
// with n+, n- <= N, used for operator identities at small N.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tmsq {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxCutoff = 4096;

/// Largest cutoff accepted for dense two-mode operators ((N+1)^2 rows).
inline constexpr int kMaxOperatorCutoff = 20;

struct TruncationPolicy {
  double tolerance = 1e-12;  ///< discarded probability mass
  int margin = 4;            ///< rows dropped near the cutoff in operator checks
  int max_cutoff = kDefaultMaxCutoff;

  void validate() const;
};

/// tanh^{2(N+1)} |r|: probability mass of the squeezed vacuum beyond |N,N>.
double tail_probability(double r, int cutoff);

/// Smallest N whose tail probability is <= tol. r = 0 gives 0.
/// Throws CUTOFF_EXCEEDED when N > max_cutoff.
int cutoff_for_tolerance(double r, double tol, int max_cutoff = kDefaultMaxCutoff);

/// Smallest N such that sum_{n>N} n p_n <= tol, so mean photon number (and
/// anything linear in it) is truncated by at most tol. Always >= the
/// probability cutoff.
int moment_cutoff_for_tolerance(double r, double tol, int max_cutoff = kDefaultMaxCutoff);

/// Amplitudes c_0..c_N on |n>_+ |n>_-.
class DiagonalFockState {
 public:
  static constexpr double kNormSlack = 1e-12;

  /// Vacuum truncated at `cutoff`.
  explicit DiagonalFockState(int cutoff = 0);

  /// Throws INVALID_ARGUMENT if empty, non-finite, or squared norm > 1 + kNormSlack.
  explicit DiagonalFockState(std::vector<Complex> coeffs);

  int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }

  double squared_norm() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Dense operator over |n+, n-> in row-major (n+, n-) order,
/// index = n+ * (N + 1) + n-.
class FullTwoModeOperator {
 public:
  FullTwoModeOperator(int cutoff, Eigen::MatrixXcd matrix);

  static FullTwoModeOperator identity(int cutoff);

  int cutoff() const { return cutoff_; }
  int dimension() const { return cutoff_ + 1; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  static int index(int cutoff, int n_plus, int n_minus) { return n_plus * (cutoff + 1) + n_minus; }

  FullTwoModeOperator adjoint() const;

  friend FullTwoModeOperator operator*(const FullTwoModeOperator& a, const FullTwoModeOperator& b);
  friend FullTwoModeOperator operator+(const FullTwoModeOperator& a, const FullTwoModeOperator& b);
  friend FullTwoModeOperator operator-(const FullTwoModeOperator& a, const FullTwoModeOperator& b);
  friend FullTwoModeOperator operator*(Complex s, const FullTwoModeOperator& a);

  /// Largest |entry| over rows and columns with n+, n- <= cutoff - margin.
  double max_abs_inner(int margin) const;

 private:
  int cutoff_;
  Eigen::MatrixXcd matrix_;
};

enum class Mode { kPlus, kMinus };

/// Truncated annihilation operator of one mode: a|n> = sqrt(n)|n-1>.
FullTwoModeOperator annihilation(Mode mode, int cutoff);
FullTwoModeOperator creation(Mode mode, int cutoff);

/// Diagonal operator sum_{n+,n-} f(n+, n-) |n+,n-><n+,n-| with integer
/// occupation numbers; used for n+ + n-, n+ - n- and their exponentials.
template <class F>
FullTwoModeOperator diagonal_operator(int cutoff, F&& f) {
  const int d = cutoff + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int np = 0; np < d; ++np)
    for (int nm = 0; nm < d; ++nm) {
      const int i = FullTwoModeOperator::index(cutoff, np, nm);
      m(i, i) = f(np, nm);
    }
  return FullTwoModeOperator(cutoff, std::move(m));
}

}  // namespace tmsq
