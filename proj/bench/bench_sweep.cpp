// Serial reference vs OpenMP sweep, and closed-form vs brute-force overlap.

#include <benchmark/benchmark.h>

#include "valleysplit/oracles.hpp"
#include "valleysplit/subbands.hpp"
#include "valleysplit/sweep.hpp"
#include "valleysplit/valley_coupling.hpp"

namespace vs = valleysplit;

namespace {

vs::SweepConfig bench_config() {
    auto c = vs::figure_config(vs::Figure::fig2);
    c.widths_nm = vs::expand_range(3.0, 8.0, 0.1);
    return c;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto cfg = bench_config();
    const auto points = vs::width_sweep_points(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(vs::run_points_serial(cfg, points));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(points.size()));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
    const auto cfg = bench_config();
    const auto points = vs::width_sweep_points(cfg);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(vs::run_points_parallel(cfg, points, threads));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(points.size()));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OverlapClosedForm(benchmark::State& state) {
    vs::WellProblem p;
    p.geometry = {8.0, 6.0};
    p.field_V_per_m = 1e8;
    const auto s = vs::solve_well(p);
    const auto c = vs::valley_pair_constants(p.material);
    for (auto _ : state)
        benchmark::DoNotOptimize(vs::oscillatory_overlap(s.solution, 0, s.profile, c));
}
BENCHMARK(BM_OverlapClosedForm);

void BM_OverlapBruteForce(benchmark::State& state) {
    vs::WellProblem p;
    p.geometry = {8.0, 6.0};
    p.field_V_per_m = 1e8;
    const auto s = vs::solve_well(p);
    const auto c = vs::valley_pair_constants(p.material);
    for (auto _ : state)
        benchmark::DoNotOptimize(vs::oracles::brute_force_overlap(s.solution, 0, s.profile, c));
}
BENCHMARK(BM_OverlapBruteForce)->Unit(benchmark::kMillisecond);

void BM_SolveWell(benchmark::State& state) {
    vs::WellProblem p;
    p.geometry = {8.0, 6.0};
    p.field_V_per_m = 1e8;
    for (auto _ : state)
        benchmark::DoNotOptimize(vs::solve_well(p));
}
BENCHMARK(BM_SolveWell)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
