#include <benchmark/benchmark.h>

#include "connsets/bicyclic.hpp"
#include "connsets/counting.hpp"
#include "connsets/families.hpp"

using namespace connsets;

namespace {

Graph bench_graph(int n) { return build(family::Theta{2, n / 2, n - n / 2}); }

void BM_OracleSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  OracleOptions opt{64, 1};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(g, opt).total);
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << g.order()));
}

void BM_OracleOmp(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  OracleOptions opt{64, 0};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(g, opt).total);
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << g.order()));
}

void BM_SmartCount(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smart_count(g).total);
}

void BM_Enumerate(benchmark::State& state) {
  EnumerationOptions opt{11, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bicyclic(static_cast<int>(state.range(0)), opt).size());
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleOmp)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmartCount)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Enumerate)->Args({9, 1})->Args({9, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
