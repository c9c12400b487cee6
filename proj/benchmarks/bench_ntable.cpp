#include <catgraph/infer.hpp>
#include <catgraph/ntable.hpp>

#include <benchmark/benchmark.h>

using namespace catgraph;

static void BM_ComputeNTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GraphFamily fam = build_super(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_ntable(fam, n));
  }
}
BENCHMARK(BM_ComputeNTable)->Arg(8)->Arg(10)->Arg(12);

static void BM_PredictNTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NTable t = compute_ntable(build_super(n), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(predict_ntable(t));
  }
}
BENCHMARK(BM_PredictNTable)->Arg(8)->Arg(10)->Arg(12);

static void BM_VerifyConjectures(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_conjectures(n));
  }
}
BENCHMARK(BM_VerifyConjectures)->Arg(7)->Arg(10)->Arg(12);

static void BM_InferSuperRules(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(infer_rules(SequenceSpec::super_catalan_row(0), n));
  }
}
BENCHMARK(BM_InferSuperRules)->Arg(8)->Arg(11);

BENCHMARK_MAIN();
