#include <benchmark/benchmark.h>

#include "queens/constructions.hpp"
#include "queens/lp.hpp"
#include "queens/weighting.hpp"

using namespace queens;

static void BM_lp_packing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartialConfig cfg(n);
  for (auto _ : state) {
    auto outcome = max_fractional_completion(cfg);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_lp_packing)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_lp_cover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartialConfig cfg(n);
  for (auto _ : state) {
    auto outcome = min_cover_value(cfg);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_lp_cover)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_certificate_verify(benchmark::State& state) {
  // the first board size whose central certificate is valid
  const CentralInstance inst = central_embedding(1747);
  for (auto _ : state) {
    bool ok = certify_incompletable(inst.config, inst.certificate);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_certificate_verify)->Unit(benchmark::kMillisecond);

static void BM_central_probe_scan(benchmark::State& state) {
  for (auto _ : state) {
    int n0 = central_threshold(31, 2001);
    benchmark::DoNotOptimize(n0);
  }
}
BENCHMARK(BM_central_probe_scan);
