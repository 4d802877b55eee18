#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "tmsq/analytic_phases.hpp"
#include "tmsq/angles.hpp"
#include "tmsq/error.hpp"
#include "tmsq/fock_oracle.hpp"

namespace tmsq {
namespace {

constexpr double kPi = std::numbers::pi;
const HamiltonianParams kUnitH{1.0, 0.0, 0.0};

double max_component_gap(const DiagonalFockState& a, const DiagonalFockState& b) {
  double gap = 0.0;
  for (int n = 0; n <= a.cutoff(); ++n) gap = std::max(gap, std::abs(a[n] - b[n]));
  return gap;
}

TEST(SchmidtState, ZeroSqueezeIsVacuum) {
  const auto s = schmidt_state(0.0, 1.2, 5);
  EXPECT_EQ(s[0], Complex(1.0));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(std::abs(s[n]), 0.0);
}

TEST(SchmidtState, LeadingCoefficients) {
  const auto s = schmidt_state(1.0, 0.0, 4);
  EXPECT_NEAR(s[0].real(), 0.64805427366388540, 1e-15);
  EXPECT_NEAR(s[1].real(), -0.49355434756457308, 1e-15);
  EXPECT_NEAR(s[1].imag(), 0.0, 1e-15);
}

TEST(SchmidtState, PhasesAdvanceByTwoPhiPlusPi) {
  const double phi = 0.37;
  const auto s = schmidt_state(0.8, phi, 12);
  for (int n = 1; n <= 12; ++n)
    EXPECT_LE(circular_distance(std::arg(s[n]), n * (2 * phi + kPi)), 1e-12) << n;
}

TEST(SchmidtState, ProbabilitiesMatchDistribution) {
  const auto s = schmidt_state(1.3, 0.2, 40);
  for (int n = 0; n <= 40; ++n)
    EXPECT_NEAR(std::norm(s[n]), static_cast<double>(oracle::pair_probability(1.3, n)), 1e-15);
}

TEST(Exponentiation, ZeroSqueezeGivesVacuum) {
  const auto s = squeeze_by_exponentiation(0.0, 0.4, 6);
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, 1e-15);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(std::abs(s[n]), 0.0);
}

TEST(Exponentiation, MatchesSchmidtForm) {
  for (double r : {0.3, 1.0, 2.0})
    for (double phi : {0.0, 0.9}) {
      const int n = cutoff_for_tolerance(r, 1e-12) + 10;
      EXPECT_LE(max_component_gap(squeeze_by_exponentiation(r, phi, n), schmidt_state(r, phi, n)), 1e-10)
          << "r=" << r << " phi=" << phi;
    }
  EXPECT_LE(max_component_gap(squeeze_by_exponentiation(1.0, 0.0, 60), schmidt_state(1.0, 0.0, 60)), 1e-10);
}

TEST(Exponentiation, NormRespectsTailBound) {
  for (double r : {0.5, 1.5}) {
    const int n = cutoff_for_tolerance(r, 1e-10) + 4;
    const auto s = squeeze_by_exponentiation(r, 0.2, n, {1e-10, 4, kDefaultMaxCutoff});
    EXPECT_GE(s.squared_norm(), 1.0 - tail_probability(r, n) - 1e-13);
    EXPECT_LE(s.squared_norm(), 1.0 + 1e-12);
  }
}

TEST(Exponentiation, ErrorPaths) {
  EXPECT_THROW(squeeze_by_exponentiation(1.0, 0.0, 10), Error);  // below tail bound
  try {
    squeeze_by_exponentiation(1.0, 0.0, 60, {1e-12, 4, 20});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutoffExceeded);
  }
}

TEST(Evolve, ZeroTimeIsIdentity) {
  const auto s = schmidt_state(0.9, 0.1, 30);
  EXPECT_EQ(max_component_gap(evolve(s, kUnitH, 0.0), s), 0.0);
}

TEST(Evolve, FullPeriodIsCyclic) {
  const auto s = schmidt_state(1.1, 0.4, 60);
  EXPECT_LE(max_component_gap(evolve(s, {1.5, 0.2, 0.0}, 2 * kPi / 1.5), s), 1e-14);
}

TEST(Evolve, ModulationFrequencyCancels) {
  const auto s = schmidt_state(1.0, 0.3, 50);
  const auto a = evolve(s, {1.0, 0.0, 0.0}, 0.77);
  const auto b = evolve(s, {1.0, 0.37, 0.0}, 0.77);
  EXPECT_EQ(max_component_gap(a, b), 0.0);
}

TEST(Evolve, ReparameterizesPhase) {
  for (double r : {0.5, 1.0, 2.0})
    for (double t : {0.3, 1.7, 5.0}) {
      const int n = cutoff_for_tolerance(r, 1e-12);
      const double omega = 1.3;
      EXPECT_LE(max_component_gap(evolve(schmidt_state(r, 0.2, n), {omega, 0.1, 0.0}, t),
                                  schmidt_state(r, 0.2 - omega * t, n)),
                1e-14);
    }
}

TEST(Evolve, PreservesMagnitudes) {
  const auto s = schmidt_state(1.4, 0.6, 80);
  const auto e = evolve(s, {2.0, -0.5, 3.0}, 12.3);
  for (int n = 0; n <= 80; ++n) EXPECT_NEAR(std::abs(e[n]), std::abs(s[n]), 1e-15 * std::abs(s[n]));
}

TEST(OverlapNumeric, SelfOverlapIsSquaredNorm) {
  const int n = cutoff_for_tolerance(1.0, 1e-12);
  const auto s = schmidt_state(1.0, 0.2, n);
  const Complex z = overlap_numeric(s, s);
  EXPECT_EQ(z.imag(), 0.0);
  EXPECT_GE(z.real(), 1.0 - 1e-12);
  EXPECT_LE(z.real(), 1.0 + 1e-15);
}

TEST(OverlapNumeric, HalfPeriodValue) {
  const int n = cutoff_for_tolerance(1.0, 1e-12);
  const auto s = schmidt_state(1.0, 0.0, n);
  const Complex z = overlap_numeric(s, evolve(s, kUnitH, kPi / 2));
  EXPECT_NEAR(z.real(), 0.26580222883407969, 1e-11);
  EXPECT_NEAR(z.imag(), 0.0, 1e-11);
}

TEST(OverlapNumeric, QuarterPeriodPhase) {
  const int n = cutoff_for_tolerance(1.0, 1e-12);
  const auto s = schmidt_state(1.0, 0.0, n);
  EXPECT_NEAR(std::arg(overlap_numeric(s, evolve(s, kUnitH, kPi / 4))), -0.52560299296813795, 1e-10);
}

TEST(OverlapNumeric, AgreesWithSeriesOracle) {
  for (double r : {0.4, 1.6}) {
    const int n = cutoff_for_tolerance(r, 1e-12);
    const auto s = schmidt_state(r, 0.5, n);
    for (double wt : {0.2, 2.5})
      EXPECT_LE(std::abs(overlap_numeric(s, evolve(s, kUnitH, wt)) - oracle::overlap_series(r, wt)), 1e-11);
  }
}

TEST(OverlapNumeric, CutoffMismatch) {
  try {
    overlap_numeric(schmidt_state(0.5, 0.0, 3), schmidt_state(0.5, 0.0, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutoffMismatch);
  }
}

TEST(Energy, VacuumHasZeroEnergy) { EXPECT_EQ(energy_expectation(DiagonalFockState(4), kUnitH), 0.0); }

TEST(Energy, SqueezedVacuumMeanEnergy) {
  const int n = moment_cutoff_for_tolerance(1.0, 1e-12);
  const auto s = schmidt_state(1.0, 0.0, n);
  EXPECT_NEAR(energy_expectation(s, kUnitH), 2.7621956910836315, 1e-11);
  EXPECT_NEAR(energy_expectation(s, kUnitH), 2.0 * oracle::mean_pairs_series(1.0), 1e-11);
}

TEST(Energy, IndependentOfPhaseAndTime) {
  const int n = cutoff_for_tolerance(0.8, 1e-12);
  const double e0 = energy_expectation(schmidt_state(0.8, 0.0, n), kUnitH);
  EXPECT_NEAR(energy_expectation(schmidt_state(0.8, 1.3, n), kUnitH), e0, 1e-14);
  EXPECT_NEAR(energy_expectation(evolve(schmidt_state(0.8, 0.0, n), kUnitH, 4.2), kUnitH), e0, 1e-14);
}

TEST(DynamicalIntegral, Examples) {
  EXPECT_EQ(dynamical_integral(0.0, 0.0, kUnitH, 3.0, 10), 0.0);
  EXPECT_NEAR(dynamical_integral(1.0, 0.0, kUnitH, kPi / 4, 10), 2.1694234227214296, 1e-11);
}

TEST(DynamicalIntegral, StepCountIrrelevant) {
  const double one = dynamical_integral(1.0, 0.2, kUnitH, kPi / 4, 1);
  const double many = dynamical_integral(1.0, 0.2, kUnitH, kPi / 4, 1000);
  EXPECT_NEAR(one, many, 1e-12);
}

TEST(DynamicalIntegral, MatchesSimpsonOfSeriesEnergy) {
  // Simpson over the series-oracle energy, which is constant in time
  const double r = 1.5, t = 2.2;
  const double mean = 2.0 * oracle::mean_pairs_series(r);
  const double ref = oracle::simpson([&](double) { return mean; }, t, 8);
  EXPECT_NEAR(dynamical_integral(r, 0.0, kUnitH, t, 7), ref, 1e-10);
}

TEST(GeometricPhaseNumeric, Examples) {
  EXPECT_NEAR(geometric_phase_numeric(0.0, 0.0, kUnitH, 3.0), 0.0, 1e-15);
  EXPECT_NEAR(geometric_phase_numeric(1.0, 0.0, kUnitH, kPi / 4), 1.6438204297532917, 1e-9);
  EXPECT_LE(circular_distance(geometric_phase_numeric(1.0, 0.0, kUnitH, 2 * kPi), 4.7890167674122641), 1e-9);
}

TEST(GeometricPhaseNumeric, GaugeShiftCancels) {
  for (double c : {-2.0, 0.7, 5.0}) {
    const double base = geometric_phase_numeric(1.2, 0.1, kUnitH, 2.5);
    const double shifted = geometric_phase_numeric(1.2, 0.1, {1.0, 0.0, c}, 2.5);
    EXPECT_LE(circular_distance(base, shifted), 1e-10) << c;
  }
}

TEST(GeometricPhaseNumeric, PropagatesCutoffExceeded) {
  try {
    geometric_phase_numeric(1.0, 0.0, kUnitH, 1.0, {1e-12, 4, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutoffExceeded);
  }
}

TEST(EntropyNumeric, VacuumIsUnentangled) { EXPECT_EQ(entropy_numeric(DiagonalFockState(3)), 0.0); }

TEST(EntropyNumeric, HalfSqueezeValue) {
  const int n = cutoff_for_tolerance(0.5, 1e-12);
  EXPECT_NEAR(entropy_numeric(schmidt_state(0.5, 0.0, n)), 0.65945295916803670, 1e-10);
}

TEST(EntropyNumeric, PhaseIndependent) {
  const int n = cutoff_for_tolerance(0.9, 1e-12);
  EXPECT_NEAR(entropy_numeric(schmidt_state(0.9, 0.0, n)), entropy_numeric(schmidt_state(0.9, 1.1, n)), 1e-14);
}

TEST(NormalOrdered, VacuumColumnIsSchmidtState) {
  const int n = 10;
  const double r = 0.7, phi = 0.25;
  const auto op = squeeze_operator_normal_ordered(r, phi, n);
  const auto s = schmidt_state(r, phi, n);
  const int vac = FullTwoModeOperator::index(n, 0, 0);
  for (int k = 0; k <= n; ++k)
    EXPECT_NEAR(std::abs(op.matrix()(FullTwoModeOperator::index(n, k, k), vac) - s[k]), 0.0, 1e-15);
}

TEST(NormalOrdered, LowBlockMatchesUntruncatedExponential) {
  // exp of the generator converges to the true operator on low rows once the
  // cutoff is far above them; the disentangled form is exact at any cutoff
  const double r = 0.15, phi = 0.4;
  const int big = 18, small = 6, low = 3;
  const auto exact = squeeze_operator_exponential(r, phi, big);
  const auto ordered = squeeze_operator_normal_ordered(r, phi, small);
  double gap = 0.0;
  for (int a = 0; a <= low; ++a)
    for (int b = 0; b <= low; ++b)
      for (int c = 0; c <= low; ++c)
        for (int d = 0; d <= low; ++d)
          gap = std::max(gap, std::abs(exact.matrix()(FullTwoModeOperator::index(big, a, b),
                                                      FullTwoModeOperator::index(big, c, d)) -
                                       ordered.matrix()(FullTwoModeOperator::index(small, a, b),
                                                        FullTwoModeOperator::index(small, c, d))));
  EXPECT_LT(gap, 1e-10);
}

TEST(Bogoliubov, ZeroSqueezeIsExact) { EXPECT_EQ(bogoliubov_residual(0.0, 0.3, 12, 4), 0.0); }

TEST(Bogoliubov, ContractAtCutoffTwelve) {
  for (double r : {0.25, 0.5, 1.0})
    for (double eta : {0.0, 0.3, 2.0}) EXPECT_LE(bogoliubov_residual(r, eta, 12, 4), 1e-6) << r << " " << eta;
}

TEST(Bogoliubov, ResidualGrowsAtTheEdge) {
  EXPECT_GT(bogoliubov_residual(0.5, 0.3, 12, 0), 1e-3);
  EXPECT_LE(bogoliubov_residual(0.5, 0.3, 12, 1), 1e-12);
}

TEST(Bogoliubov, TruncatedExponentialConstructionIsEdgeDominated) {
  // S^dag a S with S = exp(truncated generator) only converges for small r
  EXPECT_LT(bogoliubov_residual(0.1, 0.3, 12, 8, SqueezeConstruction::kExponential), 1e-10);
  EXPECT_GT(bogoliubov_residual(1.0, 0.3, 12, 4, SqueezeConstruction::kExponential), 1e-2);
}

TEST(Bogoliubov, CutoffCap) {
  try {
    bogoliubov_residual(0.5, 0.0, kMaxOperatorCutoff + 1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutoffExceeded);
  }
}

TEST(RotationConjugation, ZeroAnglesAreExact) {
  const auto res = rotation_conjugation_check(0.5, 0.2, 0.0, 0.0, 8);
  EXPECT_EQ(res.rotation, 0.0);
  EXPECT_EQ(res.modulation, 0.0);
}

TEST(RotationConjugation, ContractAtCutoffTwelve) {
  const auto res = rotation_conjugation_check(0.5, 0.2, 0.9, 0.4, 12);
  EXPECT_LE(res.rotation, 1e-6);
  EXPECT_LE(res.modulation, 1e-6);
}

TEST(RotationConjugation, ModulationIndependentOfAngle) {
  for (double et : {0.1, 1.7, -3.0}) EXPECT_LE(rotation_conjugation_check(0.8, 0.1, 0.5, et, 10).modulation, 1e-12);
}

}  // namespace
}  // namespace tmsq
