#include <benchmark/benchmark.h>

#include "trusslab/trusslab.hpp"

using namespace trusslab;

static void injectivity_scan(benchmark::State& state) {
  Truss    t = ring_truss(2);
  Universe u = build_universe(t, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t injective = 0;
    for (auto const& e : u.modules) {
      injective += is_injective_rel(e, u).holds;
    }
    benchmark::DoNotOptimize(injective);
  }
}
BENCHMARK(injectivity_scan)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void projectivity_scan(benchmark::State& state) {
  Truss    t = ring_truss(2);
  Universe u = build_universe(t, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t projective = 0;
    for (auto const& p : u.modules) {
      projective += is_projective_rel(p, u).holds;
    }
    benchmark::DoNotOptimize(projective);
  }
}
BENCHMARK(projectivity_scan)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// R -> R -> * against R^2 -> R^2 -> * over T(Z2).
static void schanuel_projective_fixture(benchmark::State& state) {
  Truss   t    = ring_truss(2);
  TModule r    = regular_module(t);
  TModule rr   = power_module(r, 2);
  TModule star = terminal_module(t);
  Resolution first{identity_morphism(r), ModuleMorphism(r, star, std::vector<Elem>(r.order(), 0))};
  Resolution second{identity_morphism(rr), ModuleMorphism(rr, star, std::vector<Elem>(rr.order(), 0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(schanuel_projective(first, second));
  }
}
BENCHMARK(schanuel_projective_fixture)->Unit(benchmark::kMicrosecond);

static void divisibility(benchmark::State& state) {
  TModule m = regular_module(ring_truss(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_divisible(m));
  }
}
BENCHMARK(divisibility)->Arg(2)->Arg(3)->Arg(5)->Arg(7);
