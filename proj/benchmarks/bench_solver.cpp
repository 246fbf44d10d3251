#include <benchmark/benchmark.h>

#include "queens/solver.hpp"

using namespace queens;

static void BM_complete_empty(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = complete(PartialConfig(n));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_complete_empty)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_count_nauck(benchmark::State& state) {
  const PartialConfig nauck(8, {{4, 2}, {5, 4}});
  for (auto _ : state) {
    auto result = count_completions(nauck);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_count_nauck);

static void BM_enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto count = enumerate_all(n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate)->Arg(8)->Arg(9)->Arg(10);

static void BM_unattacked(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PartialConfig cfg(n, {{1, 2}, {2, 4}, {3, 6}});
  for (auto _ : state) {
    auto lambda = unattacked(cfg);
    benchmark::DoNotOptimize(lambda);
  }
}
BENCHMARK(BM_unattacked)->Arg(64)->Arg(256);
