#include <benchmark/benchmark.h>

#include "innerforms/sweeps.hpp"

using namespace innerforms;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_ClosureOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_closure_oracle(4, exec_of(state)));
}

void BM_InductionOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_induction_oracle(4, 10, exec_of(state)));
}

void BM_LocalGlobal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_local_global(200, exec_of(state)));
}

void BM_ArthurIdentities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_arthur_identities(4, 100, exec_of(state)));
}

void BM_Enumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_enumeration(6, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_ClosureOracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InductionOracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalGlobal)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArthurIdentities)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumeration)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
