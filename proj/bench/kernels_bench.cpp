#include <benchmark/benchmark.h>

#include <random>

#include "wst/kernels.hpp"

using wst::kernels::Complex;

static std::vector<Complex> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(n);
  for (auto& x : c) x = Complex(u(rng), u(rng));
  return c;
}

static void BM_circle_max_serial(benchmark::State& state) {
  const auto c = random_coeffs(64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wst::kernels::circle_max_serial(c, 0, 1.5, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

static void BM_circle_max_parallel(benchmark::State& state) {
  const auto c = random_coeffs(64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wst::kernels::circle_max_parallel(c, 0, 1.5, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

static void BM_convolve_serial(benchmark::State& state) {
  const auto a = random_coeffs(state.range(0), 2), b = random_coeffs(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(wst::kernels::convolve_serial(a, b));
}

static void BM_convolve_parallel(benchmark::State& state) {
  const auto a = random_coeffs(state.range(0), 2), b = random_coeffs(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(wst::kernels::convolve_parallel(a, b));
}

BENCHMARK(BM_circle_max_serial)->RangeMultiplier(4)->Range(1024, 65536);
BENCHMARK(BM_circle_max_parallel)->RangeMultiplier(4)->Range(1024, 65536);
BENCHMARK(BM_convolve_serial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_convolve_parallel)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
