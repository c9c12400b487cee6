#include <catgraph/build.hpp>
#include <catgraph/graph.hpp>

#include <benchmark/benchmark.h>

using namespace catgraph;

static void BM_BuildClassic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_classic(n));
  }
}
BENCHMARK(BM_BuildClassic)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

static void BM_BuildSuper(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_super(n));
  }
}
BENCHMARK(BM_BuildSuper)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

static void BM_BuildFuss3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fuss(n, 3));
  }
}
BENCHMARK(BM_BuildFuss3)->Arg(8)->Arg(10);

static void BM_ExpandClassic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GraphFamily fam = build_classic(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(fam.at(n)));
  }
}
BENCHMARK(BM_ExpandClassic)->Arg(6)->Arg(8)->Arg(10);

static void BM_CondenseClassic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExpandedGraph exp = expand(build_classic(n).at(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(condense(exp));
  }
}
BENCHMARK(BM_CondenseClassic)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
