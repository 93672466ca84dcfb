// Serial reference driver vs. the OpenMP driver on the same fuzz workload.

#include <benchmark/benchmark.h>

#include "twopar/fuzz.hpp"
#include "twopar/invariant.hpp"
#include "twopar/random.hpp"

namespace {

twopar::FuzzConfig workload(twopar::DiagramKind kind) {
  twopar::FuzzConfig c;
  c.trials = 400;
  c.max_chords = 12;
  c.seed = 7;
  c.kind = kind;
  c.c_even = kind == twopar::DiagramKind::Closed;
  c.max_length = 10;
  return c;
}

void BM_FuzzSerial(benchmark::State& state) {
  const auto c = workload(static_cast<twopar::DiagramKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twopar::run_fuzz_serial(c).failures);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

void BM_FuzzParallel(benchmark::State& state) {
  const auto c = workload(static_cast<twopar::DiagramKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twopar::run_fuzz_parallel(c).failures);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

void BM_W(benchmark::State& state) {
  const auto d = twopar::random_diagram(11, static_cast<std::size_t>(state.range(0)), twopar::DiagramKind::Long, false);
  for (auto _ : state) benchmark::DoNotOptimize(twopar::w(d));
}

}  // namespace

// range(0): 0 = long, 1 = closed
BENCHMARK(BM_FuzzSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FuzzParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_W)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
