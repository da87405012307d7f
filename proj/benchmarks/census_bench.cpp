#include <benchmark/benchmark.h>

#include "trusslab/trusslab.hpp"

using namespace trusslab;

static void heaps_by_order(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_heaps(n));
  }
}
BENCHMARK(heaps_by_order)->DenseRange(2, 8, 2);

static void trusses_by_order(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_trusses(n));
  }
}
BENCHMARK(trusses_by_order)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

// Threads: 1 versus the default cap.
static void truss_census_threads(benchmark::State& state) {
  set_max_threads(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(truss_census(4));
  }
  set_max_threads(0);
}
BENCHMARK(truss_census_threads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void universe(benchmark::State& state) {
  Truss t     = ring_truss(2);
  auto  bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_universe(t, bound));
  }
}
BENCHMARK(universe)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
