#include <benchmark/benchmark.h>

#include "tsl/cholesky.hpp"
#include "tsl/distance.hpp"
#include "tsl/experiment.hpp"
#include "tsl/oracle.hpp"
#include "tsl/stt.hpp"

namespace {

using namespace tsl;

void BM_Spectrum(benchmark::State& state) {
  const SttMatrix m(static_cast<int>(state.range(0)), 2.0, -1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_StructuredDistance(benchmark::State& state) {
  const SttMatrix m(static_cast<int>(state.range(0)), 1.8, -1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(structured_distance(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StructuredDistance)
    ->RangeMultiplier(4)
    ->Range(16, 65536)
    ->Complexity();

void BM_CholeskyFactor(benchmark::State& state) {
  const SttMatrix m(static_cast<int>(state.range(0)), 2.0, -1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cholesky_factor(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CholeskyFactor)->RangeMultiplier(4)->Range(16, 65536)->Complexity();

void BM_SturmEigenvalues(benchmark::State& state) {
  const SttMatrix m(static_cast<int>(state.range(0)), 0.4, 1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::dense_eigenvalues(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SturmEigenvalues)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_MismatchExperiment(benchmark::State& state) {
  oracle::ExperimentConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = static_cast<int>(state.range(0));
  cfg.samples_per_n = 1000;
  cfg.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::mismatch_experiment(cfg));
  }
}
BENCHMARK(BM_MismatchExperiment)->Arg(10)->Arg(50)->Arg(250);

}  // namespace

BENCHMARK_MAIN();
