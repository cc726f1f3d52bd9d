#include <benchmark/benchmark.h>

#include "cocopos/blockops.hpp"
#include "cocopos/inequalities.hpp"
#include "cocopos/randgen.hpp"
#include "cocopos/suite.hpp"

namespace {

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const cocopos::ComplexMatrix a = cocopos::random_psd(dim, dim, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cocopos::hermitian_eigenvalues(a));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(9)->Arg(16)->Arg(32);

void BM_PartialOps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cocopos::BlockMatrix a({n, n}, cocopos::random_psd(n * n, n * n, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cocopos::partial_transpose(a));
    benchmark::DoNotOptimize(cocopos::partial_trace_1(a));
    benchmark::DoNotOptimize(cocopos::partial_trace_2(a));
    benchmark::DoNotOptimize(cocopos::realign(a));
  }
}
BENCHMARK(BM_PartialOps)->Arg(2)->Arg(3)->Arg(5);

void BM_CopositivePartialTrace(benchmark::State& state) {
  const cocopos::BlockMatrix a({3, 3}, cocopos::random_psd(9, 9, 3));
  for (auto _ : state) benchmark::DoNotOptimize(cocopos::check_copositive_partial_trace(a));
}
BENCHMARK(BM_CopositivePartialTrace);

void BM_Theorem2Suite(benchmark::State& state) {
  cocopos::SuiteConfig config;
  config.suites = {"theorem2"};
  config.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cocopos::run_suite(config));
}
BENCHMARK(BM_Theorem2Suite)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
