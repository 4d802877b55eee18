#include "tmsq/fock_space.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tmsq/error.hpp"

namespace tmsq {

void TruncationPolicy::validate() const {
  detail::require(std::isfinite(tolerance) && tolerance > 0.0 && tolerance < 1.0,
                  ErrorCode::kInvalidArgument, "tolerance must lie in (0, 1)");
  detail::require(margin >= 0, ErrorCode::kInvalidArgument, "margin must be non-negative");
  detail::require(max_cutoff >= 0, ErrorCode::kInvalidArgument, "max_cutoff must be non-negative");
}

double tail_probability(double r, int cutoff) {
  detail::require(std::isfinite(r), ErrorCode::kInvalidArgument, "r must be finite");
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  if (r == 0.0) return 0.0;
  return std::exp(2.0 * (cutoff + 1.0) * std::log(std::tanh(std::abs(r))));
}

namespace {

void check_cutoff_args(double r, double tol, int max_cutoff) {
  detail::require(std::isfinite(r), ErrorCode::kInvalidArgument, "r must be finite");
  detail::require(std::isfinite(tol) && tol > 0.0 && tol < 1.0, ErrorCode::kInvalidArgument,
                  "tolerance must lie in (0, 1)");
  detail::require(max_cutoff >= 0, ErrorCode::kInvalidArgument, "max_cutoff must be non-negative");
}

[[noreturn]] void cutoff_exceeded(double r, int max_cutoff) {
  detail::fail(ErrorCode::kCutoffExceeded,
               "r = " + std::to_string(r) + " needs a cutoff above max_cutoff = " +
                   std::to_string(max_cutoff));
}

}  // namespace

int cutoff_for_tolerance(double r, double tol, int max_cutoff) {
  check_cutoff_args(r, tol, max_cutoff);
  if (r == 0.0) return 0;
  const double log_tanh = std::log(std::tanh(std::abs(r)));
  if (log_tanh == 0.0) cutoff_exceeded(r, max_cutoff);

  const double estimate = std::ceil(std::log(tol) / (2.0 * log_tanh)) - 1.0;
  if (estimate > static_cast<double>(max_cutoff) + 1.0) cutoff_exceeded(r, max_cutoff);
  int n = std::max(0, static_cast<int>(estimate));
  // the closed form can land one off after rounding; settle on the exact minimum
  while (n > 0 && tail_probability(r, n - 1) <= tol) --n;
  while (tail_probability(r, n) > tol) ++n;
  if (n > max_cutoff) cutoff_exceeded(r, max_cutoff);
  return n;
}

int moment_cutoff_for_tolerance(double r, double tol, int max_cutoff) {
  check_cutoff_args(r, tol, max_cutoff);
  if (r == 0.0) return 0;
  const double x = std::pow(std::tanh(std::abs(r)), 2);
  if (x >= 1.0) cutoff_exceeded(r, max_cutoff);
  // sum_{n >= M} n (1 - x) x^n = x^M (M + x / (1 - x)), with M = N + 1
  const double tail_bias = x / (1.0 - x);
  auto moment_tail = [&](int n) {
    const double m = n + 1.0;
    return std::exp(m * std::log(x)) * (m + tail_bias);
  };
  int n = cutoff_for_tolerance(r, tol, max_cutoff);
  while (moment_tail(n) > tol) {
    if (++n > max_cutoff) cutoff_exceeded(r, max_cutoff);
  }
  return n;
}

DiagonalFockState::DiagonalFockState(int cutoff) {
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, Complex{});
  coeffs_[0] = 1.0;
}

DiagonalFockState::DiagonalFockState(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  detail::require(!coeffs_.empty(), ErrorCode::kInvalidArgument, "state needs at least c_0");
  for (const Complex& c : coeffs_)
    detail::require(std::isfinite(c.real()) && std::isfinite(c.imag()),
                    ErrorCode::kInvalidArgument, "state amplitudes must be finite");
  detail::require(squared_norm() <= 1.0 + kNormSlack, ErrorCode::kInvalidArgument,
                  "state is over-normalized");
}

double DiagonalFockState::squared_norm() const {
  double sum = 0.0;
  for (const Complex& c : coeffs_) sum += std::norm(c);
  return sum;
}

FullTwoModeOperator::FullTwoModeOperator(int cutoff, Eigen::MatrixXcd matrix)
    : cutoff_(cutoff), matrix_(std::move(matrix)) {
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  const Eigen::Index d = static_cast<Eigen::Index>(cutoff + 1) * (cutoff + 1);
  detail::require(matrix_.rows() == d && matrix_.cols() == d, ErrorCode::kInvalidArgument,
                  "operator matrix must be (N+1)^2 square");
}

FullTwoModeOperator FullTwoModeOperator::identity(int cutoff) {
  const int d = (cutoff + 1) * (cutoff + 1);
  return FullTwoModeOperator(cutoff, Eigen::MatrixXcd::Identity(d, d));
}

FullTwoModeOperator FullTwoModeOperator::adjoint() const {
  return FullTwoModeOperator(cutoff_, matrix_.adjoint());
}

namespace {

void require_same_cutoff(const FullTwoModeOperator& a, const FullTwoModeOperator& b) {
  detail::require(a.cutoff() == b.cutoff(), ErrorCode::kCutoffMismatch,
                  "operators have different cutoffs");
}

}  // namespace

FullTwoModeOperator operator*(const FullTwoModeOperator& a, const FullTwoModeOperator& b) {
  require_same_cutoff(a, b);
  return FullTwoModeOperator(a.cutoff_, a.matrix_ * b.matrix_);
}

FullTwoModeOperator operator+(const FullTwoModeOperator& a, const FullTwoModeOperator& b) {
  require_same_cutoff(a, b);
  return FullTwoModeOperator(a.cutoff_, a.matrix_ + b.matrix_);
}

FullTwoModeOperator operator-(const FullTwoModeOperator& a, const FullTwoModeOperator& b) {
  require_same_cutoff(a, b);
  return FullTwoModeOperator(a.cutoff_, a.matrix_ - b.matrix_);
}

FullTwoModeOperator operator*(Complex s, const FullTwoModeOperator& a) {
  return FullTwoModeOperator(a.cutoff_, s * a.matrix_);
}

double FullTwoModeOperator::max_abs_inner(int margin) const {
  detail::require(margin >= 0, ErrorCode::kInvalidArgument, "margin must be non-negative");
  const int top = cutoff_ - margin;
  double worst = 0.0;
  if (top < 0) return worst;
  for (int rp = 0; rp <= top; ++rp)
    for (int rm = 0; rm <= top; ++rm)
      for (int cp = 0; cp <= top; ++cp)
        for (int cm = 0; cm <= top; ++cm)
          worst = std::max(worst, std::abs(matrix_(index(cutoff_, rp, rm), index(cutoff_, cp, cm))));
  return worst;
}

FullTwoModeOperator annihilation(Mode mode, int cutoff) {
  detail::require(cutoff >= 0, ErrorCode::kInvalidArgument, "cutoff must be non-negative");
  const int d = cutoff + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int np = 0; np < d; ++np)
    for (int nm = 0; nm < d; ++nm) {
      const int n = mode == Mode::kPlus ? np : nm;
      if (n == 0) continue;
      const int target = mode == Mode::kPlus ? FullTwoModeOperator::index(cutoff, np - 1, nm)
                                             : FullTwoModeOperator::index(cutoff, np, nm - 1);
      m(target, FullTwoModeOperator::index(cutoff, np, nm)) = std::sqrt(static_cast<double>(n));
    }
  return FullTwoModeOperator(cutoff, std::move(m));
}

FullTwoModeOperator creation(Mode mode, int cutoff) { return annihilation(mode, cutoff).adjoint(); }

}  // namespace tmsq
