#include <benchmark/benchmark.h>

#include "zetaspan/theorems.hpp"

using namespace zetaspan;

namespace {

void BM_Factorize(benchmark::State& state) {
  std::int64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
    n = n % 999983 + 2;
  }
}
BENCHMARK(BM_Factorize);

void BM_Kronecker(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kronecker(-20, n));
    n = n % 100000 + 1;
  }
}
BENCHMARK(BM_Kronecker);

void BM_ConvolveReduced(benchmark::State& state) {
  const auto zeta = ReducedFn::zeta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(zeta, zeta));
}
BENCHMARK(BM_ConvolveReduced)->Arg(500)->Arg(2000);

void BM_ConvolveFull(benchmark::State& state) {
  const auto zeta = IntervalFn::zeta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(zeta, zeta));
}
BENCHMARK(BM_ConvolveFull)->Arg(200)->Arg(500);

void BM_MobiusReduced(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ReducedFn::mobius(state.range(0)));
}
BENCHMARK(BM_MobiusReduced)->Arg(10000);

void BM_EnumerateIdeals(benchmark::State& state) {
  const QuadField K = QuadField::from_d(-1, 2000);
  for (auto _ : state)
    for (std::int64_t n = 1; n <= 1000; ++n)
      benchmark::DoNotOptimize(enumerate_ideals(K, n));
}
BENCHMARK(BM_EnumerateIdeals);

void BM_GlobalWitness(benchmark::State& state) {
  const QuadField K = QuadField::from_d(-1, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(global_factorization_witness(K, state.range(0)));
}
BENCHMARK(BM_GlobalWitness)->Arg(500)->Arg(2000);

void BM_IntervalIdentity(benchmark::State& state) {
  const QuadField K = QuadField::from_d(-1, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_interval_factorization(K, state.range(0)));
}
BENCHMARK(BM_IntervalIdentity)->Arg(500)->Arg(2000);

void BM_FidelityReport(benchmark::State& state) {
  const QuadField K = QuadField::from_d(-1, 200);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_report(K, 200));
}
BENCHMARK(BM_FidelityReport);

}  // namespace

BENCHMARK_MAIN();
