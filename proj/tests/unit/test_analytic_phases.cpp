#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "tmsq/analytic_phases.hpp"
#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"
#include "tmsq/su11.hpp"

namespace tmsq {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(OverlapAnalytic, VacuumIsStationary) {
  for (double t : {0.0, 0.4, 5.0}) EXPECT_NEAR(std::abs(overlap_analytic(0.0, 1.3, t) - 1.0), 0.0, 1e-15);
}

TEST(OverlapAnalytic, HalfPeriodIsRealSech2r) {
  const Complex z = overlap_analytic(1.0, 1.0, kPi / 2);
  EXPECT_NEAR(z.real(), 0.26580222883407969, 1e-15);
  EXPECT_NEAR(z.imag(), 0.0, 1e-15);
}

TEST(OverlapAnalytic, FullPeriodReturnsOne) {
  for (double r : {0.3, 1.0, 2.5}) EXPECT_NEAR(std::abs(overlap_analytic(r, 2.0, kPi) - 1.0), 0.0, 1e-12);
}

TEST(OverlapAnalytic, MatchesDirectSeries) {
  // frozen from the series oracle: (0.5776439936669028, -0.3629163022001851)
  const Complex z = overlap_analytic(1.0, 1.0, 0.3);
  EXPECT_NEAR(z.real(), 0.57764399366690284, 1e-14);
  EXPECT_NEAR(z.imag(), -0.36291630220018506, 1e-14);
  for (double r : {0.2, 0.9, 1.7})
    for (double wt : {0.1, 1.0, 2.9, 4.4})
      EXPECT_NEAR(std::abs(overlap_analytic(r, 1.0, wt) - oracle::overlap_series(r, wt)), 0.0, 1e-13);
}

TEST(OverlapAnalytic, ModulusMatchesNormalization) {
  for (double r : {0.0, 0.6, 1.9})
    for (double wt : {0.0, 0.7, 2.1, 5.5}) {
      const double c = std::cos(wt), s = std::sin(wt), ch = std::cosh(2 * r);
      EXPECT_NEAR(std::abs(overlap_analytic(r, 1.0, wt)), 1.0 / std::sqrt(c * c + s * s * ch * ch), 1e-12);
    }
}

TEST(OverlapAnalytic, RejectsBadInputs) {
  EXPECT_THROW(overlap_analytic(30.0, 1.0, 1.0), Error);
  EXPECT_THROW(overlap_analytic(0.5, 0.0, 1.0), Error);
  EXPECT_THROW(overlap_analytic(0.5, 1.0, NAN), Error);
}

TEST(TotalPhaseFactor, Examples) {
  EXPECT_NEAR(std::abs(total_phase_factor(0.0, 1.0, 1.3) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(total_phase_factor(1.0, 1.0, kPi / 2) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::arg(total_phase_factor(1.0, 1.0, kPi / 4)), -0.52560299296813795, 1e-14);
}

TEST(TotalPhaseFactor, AgreesWithDecompositionTheta) {
  for (double r : {0.3, 1.0, 1.8})
    for (double wt : {0.2, kPi / 4, 2.0, 4.0}) {
      const auto d = decompose_product({r, 0.1}, {r, 0.1 - wt});
      EXPECT_LE(circular_distance(std::arg(total_phase_factor(r, 1.0, wt)), -d.Theta), 1e-10);
      const Complex via_su11 = std::polar(1.0 / std::cosh(d.R), -d.Theta);
      EXPECT_NEAR(std::abs(via_su11 - overlap_analytic(r, 1.0, wt)), 0.0, 1e-10);
    }
}

TEST(DynamicalTerm, Examples) {
  EXPECT_EQ(dynamical_term(0.0, 1.0, 3.0), 0.0);
  EXPECT_NEAR(dynamical_term(1.0, 1.0, kPi / 4), 2.1694234227214296, 1e-14);
  EXPECT_NEAR(dynamical_term(1.0, 1.0, 2 * kPi), 17.355387381771437, 1e-12);
  EXPECT_NEAR(dynamical_term(1.0, 2.0, kPi / 8), dynamical_term(1.0, 1.0, kPi / 4), 1e-15);
}

TEST(GeometricPhase, VacuumHasNone) {
  const auto b = geometric_phase(0.0, 1.0, 5.0);
  EXPECT_NEAR(b.geometric_phase, 0.0, 1e-15);
  EXPECT_NEAR(b.total_phase, 0.0, 1e-15);
}

TEST(GeometricPhase, QuarterPeriodValue) {
  const auto b = geometric_phase(1.0, 1.0, kPi / 4);
  EXPECT_NEAR(b.geometric_phase, 1.6438204297532917, 1e-13);
  EXPECT_NEAR(b.total_phase, -0.52560299296813795, 1e-14);
  EXPECT_NEAR(b.dynamical_term_delta, 2.1694234227214296, 1e-14);
}

TEST(GeometricPhase, CyclicValue) {
  const auto b = geometric_phase(1.0, 1.0, 2 * kPi);
  EXPECT_LE(circular_distance(b.geometric_phase, 4.7890167674122641), 1e-12);
  EXPECT_NEAR(b.geometric_phase_unreduced, 17.355387381771437, 1e-12);
}

TEST(GeometricPhase, BreakdownInvariants) {
  for (double r : {0.1, 0.7, 1.4, 2.2})
    for (double wt : {0.05, 1.1, 3.3, 6.0, 9.0}) {
      const auto b = geometric_phase(r, 1.0, wt);
      EXPECT_LE(std::abs(b.overlap), 1.0 + 1e-12);
      EXPECT_GT(b.total_phase, -kPi);
      EXPECT_LE(b.total_phase, kPi);
      EXPECT_GE(b.geometric_phase, 0.0);
      EXPECT_LT(b.geometric_phase, 2 * kPi);
      EXPECT_LE(circular_distance(b.geometric_phase, b.total_phase + b.dynamical_term_delta), 1e-12);
    }
}

TEST(GeometricPhase, AgreesWithCollapsedClosedForm) {
  for (double r : {0.0, 0.5, 1.0, 2.0, 3.0})
    for (int k = 0; k <= 40; ++k) {
      const double wt = 0.1 * k;
      EXPECT_LE(circular_distance(geometric_phase(r, 1.0, wt).geometric_phase,
                                  geometric_phase_closed_form(r, 1.0, wt)),
                1e-10)
          << "r=" << r << " wt=" << wt;
    }
}

TEST(CyclicPhase, Examples) {
  const auto zero = cyclic_geometric_phase(0.0);
  EXPECT_EQ(zero.unreduced, 0.0);
  EXPECT_EQ(zero.reduced, 0.0);
  const auto half = cyclic_geometric_phase(0.5);
  EXPECT_NEAR(half.unreduced, 3.4122762652849023, 1e-14);
  EXPECT_NEAR(half.reduced, 3.4122762652849023, 1e-14);
  const auto one = cyclic_geometric_phase(1.0);
  EXPECT_NEAR(one.unreduced, 17.355387381771437, 1e-13);
  EXPECT_NEAR(one.reduced, 4.7890167674122641, 1e-13);
}

TEST(OneModePhase, ExamplesAndAdditivity) {
  EXPECT_EQ(one_mode_cyclic_phase(0.0), 0.0);
  EXPECT_NEAR(one_mode_cyclic_phase(1.0), 8.6776936908857185, 1e-13);
  EXPECT_EQ(2.0 * one_mode_cyclic_phase(0.7), cyclic_geometric_phase(0.7).unreduced);
}

TEST(OneModePhase, ReducedAdditivityHoldsModTwoPi) {
  for (double r : {0.3, 0.9, 1.6}) {
    const double one = wrap_to_2pi(one_mode_cyclic_phase(r));
    EXPECT_LE(circular_distance(cyclic_geometric_phase(r).reduced, one + one), 1e-12);
  }
}

TEST(Entropy, FromSqueezeExamples) {
  EXPECT_EQ(entropy_from_squeeze(0.0), 0.0);
  EXPECT_NEAR(entropy_from_squeeze(0.5), 0.65945295916803670, 1e-14);
  EXPECT_NEAR(entropy_from_squeeze(1.0), 1.6198220928977023, 1e-14);
  EXPECT_NEAR(entropy_from_squeeze(-1.0), 1.6198220928977023, 1e-14);
}

TEST(Entropy, MatchesSeriesOracle) {
  for (double r : {0.05, 0.5, 1.0, 2.0}) EXPECT_NEAR(entropy_from_squeeze(r), oracle::entropy_series(r), 1e-12);
}

TEST(Entropy, StaysFiniteAtLargeSqueeze) {
  // naive cosh^2 ln cosh^2 - sinh^2 ln sinh^2 cancels catastrophically here
  const double e = entropy_from_squeeze(19.0);
  const double x = std::sinh(19.0) * std::sinh(19.0);
  EXPECT_NEAR(e, std::log(x) + 1.0, 1e-9);
}

TEST(Entropy, FromCyclicPhaseExamples) {
  EXPECT_EQ(entropy_from_cyclic_phase(0.0), 0.0);
  EXPECT_NEAR(entropy_from_cyclic_phase(2 * kPi), 0.95477125244221923, 1e-14);
  EXPECT_NEAR(entropy_from_cyclic_phase(3.4122762652849023), 0.65945295916803670, 1e-13);
  EXPECT_THROW(entropy_from_cyclic_phase(-0.1), Error);
}

TEST(Entropy, IdentityBetweenRoutes) {
  for (int i = 0; i <= 300; ++i) {
    const double r = 0.01 * i;
    EXPECT_NEAR(entropy_from_squeeze(r), entropy_from_cyclic_phase(cyclic_geometric_phase(r).unreduced), 1e-12);
  }
}

TEST(Entropy, CurveIsStrictlyIncreasing) {
  double previous = entropy_from_cyclic_phase(0.0);
  for (int k = 1; k <= 1000; ++k) {
    const double e = entropy_from_cyclic_phase(2 * kPi * k / 1000.0);
    ASSERT_GT(e, previous) << k;
    previous = e;
  }
}

TEST(HamiltonianParams, Validation) {
  EXPECT_NO_THROW((HamiltonianParams{1.0, 0.5, 0.0}.validate()));
  EXPECT_THROW((HamiltonianParams{1.0, 1.0, 0.0}.validate()), Error);
  EXPECT_THROW((HamiltonianParams{-1.0, 0.0, 0.0}.validate()), Error);
  EXPECT_THROW((HamiltonianParams{1.0, 0.0, NAN}.validate()), Error);
}

}  // namespace
}  // namespace tmsq
