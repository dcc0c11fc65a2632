#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "apmono/kernels.hpp"
#include "apmono/periodic.hpp"
#include "apmono/search.hpp"

namespace {

std::vector<std::uint8_t> random_bits(std::size_t n) {
  std::mt19937_64 rng(n);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = rng() & 1U;
  return bits;
}

void BM_CyclicSerial(benchmark::State& state) {
  auto bits = random_bits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apmono::kernels::cyclic_by_difference_serial(bits, 5));
}

void BM_CyclicParallel(benchmark::State& state) {
  auto bits = random_bits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apmono::kernels::cyclic_by_difference_parallel(bits, 5));
}

void BM_IntervalSerial(benchmark::State& state) {
  auto bits = random_bits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apmono::kernels::interval_by_difference_serial(bits, 5));
}

void BM_IntervalParallel(benchmark::State& state) {
  auto bits = random_bits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apmono::kernels::interval_by_difference_parallel(bits, 5));
}

void BM_GeneralizedSerial(benchmark::State& state) {
  apmono::Coloring block(apmono::GroupKind::Cyclic, random_bits(static_cast<std::size_t>(state.range(0))));
  auto w = apmono::WrapClass::from_index(5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(apmono::generalized_mono_count_serial(block, 5, w, 3));
}

void BM_GeneralizedParallel(benchmark::State& state) {
  apmono::Coloring block(apmono::GroupKind::Cyclic, random_bits(static_cast<std::size_t>(state.range(0))));
  auto w = apmono::WrapClass::from_index(5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(apmono::generalized_mono_count(block, 5, w, 3));
}

void BM_SearchNaive(benchmark::State& state) {
  apmono::CyclicSearchOptions opts;
  opts.mode = apmono::SearchMode::Naive;
  for (auto _ : state) benchmark::DoNotOptimize(apmono::exhaustive_min_cyclic(state.range(0), 4, opts));
}

void BM_SearchPruned(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(apmono::exhaustive_min_cyclic(state.range(0), 4));
}

}  // namespace

BENCHMARK(BM_CyclicSerial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_CyclicParallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_IntervalSerial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_IntervalParallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_GeneralizedSerial)->Arg(74)->Arg(740);
BENCHMARK(BM_GeneralizedParallel)->Arg(74)->Arg(740);
BENCHMARK(BM_SearchNaive)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchPruned)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
