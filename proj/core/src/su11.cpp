#include "tmsq/su11.hpp"

#include <algorithm>
#include <cmath>

#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"

namespace tmsq {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void SqueezeParams::validate(double r_max) const {
  detail::require(std::isfinite(r) && std::isfinite(phi), ErrorCode::kInvalidArgument,
                  "squeeze parameters must be finite");
  detail::require(std::abs(r) <= r_max, ErrorCode::kOverflow, "|r| exceeds the configured r_max");
}

bool equivalent(const SqueezeParams& a, const SqueezeParams& b, double tol) {
  if (std::abs(a.r - b.r) > tol) return false;
  // phi only matters modulo pi
  return circular_distance(2.0 * a.phi, 2.0 * b.phi) <= 2.0 * tol;
}

GroupElement GroupElement::from_components(Complex m11, Complex m12) {
  detail::require(finite(m11) && finite(m12), ErrorCode::kInvalidArgument,
                  "group element entries must be finite");
  GroupElement g(m11, m12);
  detail::require(g.determinant_defect() <= kDeterminantTolerance, ErrorCode::kInvalidArgument,
                  "|m11|^2 - |m12|^2 must equal 1");
  return g;
}

GroupElement GroupElement::diagonal_phase(double theta) {
  detail::require(std::isfinite(theta), ErrorCode::kInvalidArgument, "theta must be finite");
  return GroupElement(std::polar(1.0, theta), Complex{});
}

Complex GroupElement::entry(int row, int col) const {
  detail::require(row >= 0 && row < 2 && col >= 0 && col < 2, ErrorCode::kInvalidArgument,
                  "2x2 index out of range");
  if (row == 0) return col == 0 ? m11_ : m12_;
  return col == 0 ? std::conj(m12_) : std::conj(m11_);
}

std::array<std::array<Complex, 2>, 2> GroupElement::matrix() const {
  return {{{m11_, m12_}, {std::conj(m12_), std::conj(m11_)}}};
}

double GroupElement::determinant() const { return std::norm(m11_) - std::norm(m12_); }

double GroupElement::determinant_defect() const {
  const double scale = std::max(1.0, std::norm(m11_) + std::norm(m12_));
  return std::abs(determinant() - 1.0) / scale;
}

GroupElement c_matrix(const SqueezeParams& p, double r_max) {
  p.validate(r_max);
  return GroupElement::from_components(Complex(std::cosh(p.r), 0.0),
                                       std::polar(1.0, 2.0 * p.phi) * std::sinh(p.r));
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  detail::require(finite(a.m11_) && finite(a.m12_) && finite(b.m11_) && finite(b.m12_),
                  ErrorCode::kInvalidArgument, "group element entries must be finite");
  return GroupElement(a.m11_ * b.m11_ + a.m12_ * std::conj(b.m12_),
                      a.m11_ * b.m12_ + a.m12_ * std::conj(b.m11_));
}

GroupElement inverse(const GroupElement& a) { return GroupElement(std::conj(a.m11_), -a.m12_); }

double max_abs_difference(const GroupElement& a, const GroupElement& b) {
  return std::max(std::abs(a.m11() - b.m11()), std::abs(a.m12() - b.m12()));
}

GroupElement product_matrix(const SqueezeParams& prime, const SqueezeParams& doubleprime,
                            double r_max) {
  const SqueezeParams reversed{-prime.r, prime.phi};
  return multiply(c_matrix(doubleprime, r_max), c_matrix(reversed, r_max));
}

DecompositionTriple decompose_product(const SqueezeParams& prime, const SqueezeParams& doubleprime,
                                      double r_max) {
  const GroupElement m = product_matrix(prime, doubleprime, r_max);

  DecompositionTriple d;
  d.Theta = std::arg(m.m11());
  if (d.Theta <= -kPi) d.Theta = kPi;

  // asinh|m12| and acosh|m11| agree on the group; asinh keeps full relative
  // precision as R -> 0 where acosh loses half the digits.
  const double abs_m12 = std::abs(m.m12());
  if (abs_m12 <= kDegenerateThreshold) {
    d.R = 0.0;
    d.Phi = 0.0;
    d.degenerate_phase = true;
  } else {
    d.R = std::asinh(abs_m12);
    d.Phi = 0.5 * (std::arg(m.m12()) + d.Theta);
  }
  return d;
}

GroupElement reconstruct(const DecompositionTriple& d) {
  detail::require(std::isfinite(d.R) && std::isfinite(d.Phi) && std::isfinite(d.Theta),
                  ErrorCode::kInvalidArgument, "decomposition must be finite");
  return GroupElement::from_components(std::polar(std::cosh(d.R), d.Theta),
                                       std::polar(std::sinh(d.R), 2.0 * d.Phi - d.Theta));
}

}  // namespace tmsq
