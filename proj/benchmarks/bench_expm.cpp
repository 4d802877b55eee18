#include <benchmark/benchmark.h>

#include "tmsq/expm.hpp"
#include "tmsq/fock_oracle.hpp"

namespace {

void BM_DenseExpmGenerator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gen = tmsq::squeeze_generator(0.8, 0.3, n).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(tmsq::expm(gen));
  state.SetLabel(std::to_string((n + 1) * (n + 1)) + "x" + std::to_string((n + 1) * (n + 1)));
}
BENCHMARK(BM_DenseExpmGenerator)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_NormalOrderedSqueeze(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tmsq::squeeze_operator_normal_ordered(0.8, 0.3, n));
}
BENCHMARK(BM_NormalOrderedSqueeze)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_StateExponentiation(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 2.0;
  const int n = tmsq::cutoff_for_tolerance(r, 1e-12) + 4;
  for (auto _ : state) benchmark::DoNotOptimize(tmsq::squeeze_by_exponentiation(r, 0.2, n));
  state.counters["cutoff"] = n;
}
BENCHMARK(BM_StateExponentiation)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace
