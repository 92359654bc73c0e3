#include <benchmark/benchmark.h>

#include "theta/verify.hpp"

using namespace theta;

static void LiftGrid(benchmark::State& state) {
  auto reps = all_ostar4_reps(state.range(0));
  for (auto _ : state) {
    long nonzero = 0;
    for (const auto& rep : reps)
      for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) nonzero += theta_ostar4(rep, p, q).zero() ? 0 : 1;
    benchmark::DoNotOptimize(nonzero);
  }
}
BENCHMARK(LiftGrid)->Arg(3)->Arg(6);

static void LowestKTypes(benchmark::State& state) {
  LiftResult lift = theta_ostar2(0, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    auto kts = lowest_ktypes_sp(*lift.value);
    benchmark::DoNotOptimize(kts);
  }
}
BENCHMARK(LowestKTypes)->Arg(4)->Arg(8);

static void ConservationScan(benchmark::State& state) {
  auto rep = make_ostar4(OStar4Family::D, Scalar(5), Scalar(2));
  for (auto _ : state) {
    auto report = conservation_report(rep, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(ConservationScan)->Arg(8)->Arg(12);

static void CatalogEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    auto entries = enumerate_B_p2(static_cast<int>(state.range(0)), 6);
    benchmark::DoNotOptimize(entries);
  }
}
BENCHMARK(CatalogEnumeration)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
