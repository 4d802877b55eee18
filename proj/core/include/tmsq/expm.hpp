#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Dense>

#include "tmsq/error.hpp"

namespace tmsq {

/// Dense matrix exponential by scaling and squaring with a degree 3..13
/// Pade approximant (Higham 2005 selection thresholds). Backward error is at
/// unit-roundoff level for any input norm. Throws EXPM_NOT_CONVERGED on
/// non-finite input or output.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// Action e^{A} v of an operator given only through its matrix-vector product.
///
/// `apply(x)` must return A x and `one_norm` must bound ||A||_1. The interval
/// is split into s = ceil(one_norm / step_norm) substeps and each substep
/// sums the Taylor series until two consecutive terms fall below unit
/// roundoff relative to the partial sum.
struct TaylorExpmvOptions {
  double step_norm = 4.0;
  int max_terms = 80;
};

template <class Apply>
Eigen::VectorXcd taylor_expmv(Apply&& apply, double one_norm, Eigen::VectorXcd v,
                              const TaylorExpmvOptions& options = {}) {
  detail::require(std::isfinite(one_norm) && one_norm >= 0.0, ErrorCode::kExpmNotConverged,
                  "operator norm must be finite");
  const double eps = std::numeric_limits<double>::epsilon() * 0.5;
  const long steps = std::max(1L, static_cast<long>(std::ceil(one_norm / options.step_norm)));
  const double h = 1.0 / static_cast<double>(steps);

  for (long step = 0; step < steps; ++step) {
    Eigen::VectorXcd sum = v;
    Eigen::VectorXcd term = v;
    double previous = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int k = 1; k <= options.max_terms; ++k) {
      term = apply(term);
      term *= h / static_cast<double>(k);
      sum += term;
      const double term_norm = term.lpNorm<Eigen::Infinity>();
      const double sum_norm = sum.lpNorm<Eigen::Infinity>();
      if (!std::isfinite(sum_norm)) break;
      if (term_norm <= eps * sum_norm && previous <= eps * sum_norm) {
        converged = true;
        break;
      }
      previous = term_norm;
    }
    detail::require(converged, ErrorCode::kExpmNotConverged,
                    "Taylor series did not converge within max_terms");
    v = std::move(sum);
  }
  return v;
}

}  // namespace tmsq
