#include <benchmark/benchmark.h>

#include "hamloc/generators.hpp"
#include "hamloc/hamilton.hpp"
#include "hamloc/suites.hpp"

using namespace hamloc;

static void BM_CyclesSerialK(benchmark::State& st) {
  auto m = MultiGraph::from_simple(complete_graph(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_hamilton_cycles_serial(m));
}
static void BM_CyclesParallelK(benchmark::State& st) {
  auto m = MultiGraph::from_simple(complete_graph(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_hamilton_cycles(m));
}
BENCHMARK(BM_CyclesSerialK)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclesParallelK)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_OuterplanarSweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(suite_outerplanar(static_cast<std::size_t>(st.range(0)), false));
}
static void BM_OuterplanarSweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(suite_outerplanar(static_cast<std::size_t>(st.range(0)), true));
}
BENCHMARK(BM_OuterplanarSweepSerial)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OuterplanarSweepParallel)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
