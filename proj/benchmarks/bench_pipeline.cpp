#include <benchmark/benchmark.h>

#include "queens/pipeline.hpp"

#include <numeric>

using namespace queens;

static void BM_board_to_graph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartialConfig cfg(n);
  for (auto _ : state) {
    auto g = board_to_graph(cfg);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_board_to_graph)->Arg(128)->Arg(256);

static void BM_nibble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = board_to_graph(PartialConfig(n));
  std::vector<int> pool(g.edge_count());
  std::iota(pool.begin(), pool.end(), 0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    auto result = nibble_matching(g, pool, 0.95, 1, rng);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_nibble)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_pipeline_complete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PipelineParams params;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    auto outcome = complete_via_pipeline(PartialConfig(n), params, rng);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_pipeline_complete)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
