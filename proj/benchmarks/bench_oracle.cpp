#include <benchmark/benchmark.h>

#include "tmsq/analytic_phases.hpp"
#include "tmsq/fock_oracle.hpp"
#include "tmsq/su11.hpp"

namespace {

void BM_AnalyticGeometricPhase(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmsq::geometric_phase(1.0, 1.0, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_AnalyticGeometricPhase);

void BM_NumericGeometricPhase(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(tmsq::geometric_phase_numeric(r, 0.0, {1.0, 0.0, 0.0}, 1.3));
}
BENCHMARK(BM_NumericGeometricPhase)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_BogoliubovResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tmsq::bogoliubov_residual(0.5, 0.3, n, 4));
}
BENCHMARK(BM_BogoliubovResidual)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_DecomposeProduct(benchmark::State& state) {
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmsq::decompose_product({1.2, phi}, {0.7, 0.4}));
    phi += 1e-3;
  }
}
BENCHMARK(BM_DecomposeProduct);

}  // namespace
