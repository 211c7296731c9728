#include <benchmark/benchmark.h>

#include <random>

#include "regulus/regular_partitions.hpp"
#include "regulus/series.hpp"

using namespace regulus;

namespace {

TruncSeries dense(Ring ring, Exponent n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<mpz_class> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = static_cast<unsigned long>(rng() % 1000003);
  return TruncSeries::from_coeffs(ring, c, n);
}

void BM_DenseModularMul(benchmark::State& state) {
  const auto n = state.range(0);
  const Ring ring = Ring::modulo(static_cast<std::uint64_t>(state.range(1)));
  const auto f = dense(ring, n, 1), g = dense(ring, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DenseModularMul)
    ->Args({2000, 3})
    ->Args({8000, 3})
    ->Args({2000, 4294967311})
    ->Unit(benchmark::kMillisecond);

void BM_RegularPartitionsModThree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(b_ell_series(9, state.range(0), Ring::modulo(3)));
}
BENCHMARK(BM_RegularPartitionsModThree)->Arg(20000)->Arg(80000)->Unit(benchmark::kMillisecond);

void BM_RegularPartitionsExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(b_ell_series(9, state.range(0)));
}
BENCHMARK(BM_RegularPartitionsExact)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_PentagonalFactor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pentagonal_factor(1, state.range(0)));
}
BENCHMARK(BM_PentagonalFactor)->Arg(500)->Arg(5000)->Unit(benchmark::kMicrosecond);

void BM_NaiveEulerFactor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(euler_factor(1, 1, state.range(0)));
}
BENCHMARK(BM_NaiveEulerFactor)->Arg(500)->Arg(5000)->Unit(benchmark::kMicrosecond);

void BM_MainDissectionExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_dissection(state.range(0)));
}
BENCHMARK(BM_MainDissectionExact)->Arg(2001)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
