#include <benchmark/benchmark.h>

#include "chains/billiards.hpp"
#include "chains/constructions.hpp"
#include "chains/search.hpp"
#include "chains/sumgraph.hpp"

namespace {

using namespace chains;

void BM_BuildGraph(benchmark::State& state) {
  TargetSet ts = TargetSet::make(TargetKind::Squares);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(n, ts));
}
BENCHMARK(BM_BuildGraph)->Arg(100)->Arg(1000)->Arg(10000);

void BM_FindChainFibonacci(benchmark::State& state) {
  TargetSet ts = TargetSet::make(TargetKind::Fibonacci);
  SumGraph g = build_graph(static_cast<int>(state.range(0)), ts);
  for (auto _ : state) benchmark::DoNotOptimize(find_chain(g));
}
BENCHMARK(BM_FindChainFibonacci)->Arg(233)->Arg(987);

void BM_FindNecklaceSquares(benchmark::State& state) {
  TargetSet ts = TargetSet::make(TargetKind::Squares);
  SumGraph g = build_graph(static_cast<int>(state.range(0)), ts);
  for (auto _ : state) benchmark::DoNotOptimize(find_necklace(g));
}
BENCHMARK(BM_FindNecklaceSquares)->Arg(32)->Arg(40);

void BM_SpectrumTriangular(benchmark::State& state) {
  TargetSet ts = TargetSet::make(TargetKind::Triangular);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        spectrum(ts, 2, static_cast<int>(state.range(0)), SpectrumMode::Chain));
}
BENCHMARK(BM_SpectrumTriangular)->Arg(30);

void BM_Decompose(benchmark::State& state) {
  BilliardTable t = rect_table(121, 14641, 1771561, 1786081);
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose_stats(t.fold_a(), t.fold_b()));
}
BENCHMARK(BM_Decompose);

void BM_CubicChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cubic_chain());
}
BENCHMARK(BM_CubicChain);

}  // namespace

BENCHMARK_MAIN();
