// Serial reference against OpenMP for the lattice kernels and one suite.

#include "kstab/bank.hpp"
#include "kstab/suites.hpp"

#include <benchmark/benchmark.h>

using namespace kstab;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_LatticePoints(benchmark::State& state) {
    const auto p = bank::p3().polytope();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::lattice_points(p, 12, exec_of(state)));
    label(state);
}

void BM_Count(benchmark::State& state) {
    const auto p = bank::p3().polytope();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::count_lattice_points(p, 30, exec_of(state)));
    label(state);
}

void BM_RoofWeight(benchmark::State& state) {
    const auto p = bank::p2().polytope();
    kernels::RoofData roof;
    roof.slopes = {IntVec{0, 0}, IntVec{1, 1}};
    roof.offsets = {0, 0};
    roof.ceiling = 4;
    roof.denom = 1;
    for (auto _ : state) benchmark::DoNotOptimize(kernels::roof_weight(p, 200, roof, exec_of(state)));
    label(state);
}

void BM_Suite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(suites::run_suite("jna", 7, 24, exec_of(state)).passed);
    label(state);
}

}  // namespace

BENCHMARK(BM_LatticePoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Count)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoofWeight)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
