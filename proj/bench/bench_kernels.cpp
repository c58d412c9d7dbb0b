// Serial vs OpenMP kernels: area sampling and exact search, plus ASGC
// generation throughput.

#include <benchmark/benchmark.h>

#include "sgpc/asgc.hpp"
#include "sgpc/exact.hpp"
#include "sgpc/motion.hpp"

namespace {

using namespace sgpc;

void sweep(benchmark::State& state, Execution exec) {
  const int p = static_cast<int>(state.range(0));
  const Placement pl = realize(asgc(p));
  const auto path = eight_step_path();
  const auto area = AreaSpec::square({1, 1}, p - 1);
  for (auto _ : state) {
    auto r = swept_area_covered(pl, Radius::unit(), path, area, kDefaultResolution, exec);
    benchmark::DoNotOptimize(r.covered);
  }
}

void BM_SweepSerial(benchmark::State& state) { sweep(state, Execution::serial); }
void BM_SweepParallel(benchmark::State& state) { sweep(state, Execution::parallel); }

void BM_SweepReference(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Placement pl = realize(asgc(p));
  const auto path = eight_step_path();
  const auto area = AreaSpec::square({1, 1}, p - 1);
  for (auto _ : state) {
    auto r = swept_area_covered_reference(pl, Radius::unit(), path, area);
    benchmark::DoNotOptimize(r.covered);
  }
}

void search(benchmark::State& state, Execution exec) {
  SearchConfig cfg;
  cfg.width = static_cast<int>(state.range(0));
  cfg.height = static_cast<int>(state.range(1));
  cfg.execution = exec;
  for (auto _ : state) {
    auto r = optimal_connected_cover(cfg);
    benchmark::DoNotOptimize(r.optimal_count);
  }
}

void BM_ExactSerial(benchmark::State& state) { search(state, Execution::serial); }
void BM_ExactParallel(benchmark::State& state) { search(state, Execution::parallel); }

void BM_AsgcRealize(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto pl = realize(asgc(p));
    benchmark::DoNotOptimize(pl.size());
  }
  state.SetComplexityN(state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(9)->Arg(30);
BENCHMARK(BM_SweepParallel)->Arg(9)->Arg(30);
BENCHMARK(BM_SweepReference)->Arg(9)->Arg(30);
BENCHMARK(BM_ExactSerial)->Args({5, 5})->Args({6, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactParallel)->Args({5, 5})->Args({6, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AsgcRealize)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::o1);

BENCHMARK_MAIN();
