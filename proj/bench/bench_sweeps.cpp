// Serial reference vs OpenMP sweep for the exhaustive checks.

#include <benchmark/benchmark.h>

#include "cnpkit/verify.hpp"

using namespace cnpkit;

namespace {

CheckConfig config(const benchmark::State& state) {
    CheckConfig c;
    c.execution = state.range(0) ? Execution::parallel : Execution::serial;
    return c;
}

void BM_Cnpc(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_cnpc(5, config(state)).cases);
}

void BM_Extraction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_extraction(1, config(state)).cases);
}

void BM_W1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_w1_reduction(5, config(state)).cases);
}

void BM_Propositions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_propositions(20, 1, config(state)).cases);
}

}  // namespace

// Argument 0 is the serial path, 1 the parallel one.
BENCHMARK(BM_Cnpc)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Extraction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_W1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Propositions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
