// Serial reference versus OpenMP kernels for the two parallel loops.

#include <benchmark/benchmark.h>

#include "naqc/experiment.hpp"

namespace {

using namespace naqc;

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_ResampleStatistics(benchmark::State& state)
{
    const DensityMatrix goal = bds_from_pq({0.95, 0.3});
    const DensityMatrix rho = depolarize(goal, 0.994);
    const TomoScheme scheme = TomoScheme::overcomplete36();
    for (auto _ : state) {
        const ResampleSummary s = resample_statistics(rho, goal, scheme, 10000, 64, 1, mode(state));
        benchmark::DoNotOptimize(s.bars[0].mean);
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_ResampleStatistics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TomographySweep(benchmark::State& state)
{
    SweepConfig config;
    config.tomo = TomoConfig{SchemeKind::Overcomplete36, 10000, 8};
    for (auto _ : state) {
        const std::vector<ResultRow> rows = run_sweep(config, mode(state));
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_TomographySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TheorySweep(benchmark::State& state)
{
    SweepConfig config;
    config.p_values.clear();
    config.q_values.clear();
    for (int k = 0; k <= 40; ++k) {
        config.p_values.push_back(k / 40.0);
        config.q_values.push_back(k / 40.0);
    }
    for (auto _ : state) {
        const std::vector<ResultRow> rows = run_sweep(config, mode(state));
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_TheorySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
