#include <benchmark/benchmark.h>

#include <random>

#include "spread/identities.hpp"
#include "spread/kernels.hpp"

using namespace spread;

namespace {

std::vector<Coeff> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::vector<Coeff> c(n);
  for (auto& v : c) v = Coeff(dist(rng), 7);
  c.back() = 1;
  return c;
}

void BM_ConvolveSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_serial(a, b));
}

void BM_ConvolveParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_parallel(a, b));
}

void run_suite_with(benchmark::State& state, Execution execution) {
  SuiteOptions opts;
  opts.max_n = state.range(0);
  opts.max_m = 6;
  opts.max_k = 4;
  opts.execution = execution;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(opts));
}

void BM_SuiteSerial(benchmark::State& state) { run_suite_with(state, Execution::Serial); }
void BM_SuiteParallel(benchmark::State& state) { run_suite_with(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_SuiteSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
