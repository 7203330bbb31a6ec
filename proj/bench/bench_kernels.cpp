// Serial reference vs OpenMP kernels.
//
//   ./bench_kernels --benchmark_filter=Sum
//
// Set OMP_NUM_THREADS (or MML_THREADS) to vary the parallel width.

#include <benchmark/benchmark.h>

#include <map>

#include "mml/kernels.hpp"
#include "mml/series.hpp"

namespace {

struct Fixture {
    mml::CurveFamily family;
    mml::TermContext ctx;
};

const Fixture& fixture(int n_max) {
    static std::map<int, Fixture> cache;
    auto it = cache.find(n_max);
    if (it == cache.end()) {
        const mml::HoledTorusRep base = mml::build_rep({4, 4, 4});
        const mml::HoledTorusRep rep = mml::attach_deformation(base, mml::random_tangent(base, 1));
        mml::CurveFamily fam = mml::enumerate_bins(rep, n_max);
        const mml::TermContext ctx{fam.boundary.length, fam.boundary.alpha, false};
        it = cache.emplace(n_max, Fixture{std::move(fam), ctx}).first;
    }
    return it->second;
}

void BM_SumBinsSerial(benchmark::State& state) {
    const Fixture& f = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mml::sum_bins_serial(f.family.bins, f.ctx));
    state.counters["curves"] = static_cast<double>(f.family.farey_order.size());
}

void BM_SumBinsParallel(benchmark::State& state) {
    const Fixture& f = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mml::sum_bins_parallel(f.family.bins, f.ctx));
    state.counters["curves"] = static_cast<double>(f.family.farey_order.size());
}

void BM_CheckBoundsSerial(benchmark::State& state) {
    const auto grid = mml::random_positive_grid(static_cast<std::size_t>(state.range(0)), 6006);
    for (auto _ : state) benchmark::DoNotOptimize(mml::check_bounds_serial(grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CheckBoundsParallel(benchmark::State& state) {
    const auto grid = mml::random_positive_grid(static_cast<std::size_t>(state.range(0)), 6006);
    for (auto _ : state) benchmark::DoNotOptimize(mml::check_bounds_parallel(grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EnumerateBins(benchmark::State& state) {
    const mml::HoledTorusRep rep = mml::build_rep({4, 4, 4});
    const auto exec = state.range(1) ? mml::Exec::parallel : mml::Exec::serial;
    for (auto _ : state) benchmark::DoNotOptimize(mml::enumerate_bins(rep, static_cast<int>(state.range(0)), exec));
}

} // namespace

BENCHMARK(BM_SumBinsSerial)->Arg(60)->Arg(100)->Arg(140);
BENCHMARK(BM_SumBinsParallel)->Arg(60)->Arg(100)->Arg(140);
BENCHMARK(BM_CheckBoundsSerial)->Arg(100000);
BENCHMARK(BM_CheckBoundsParallel)->Arg(100000);
BENCHMARK(BM_EnumerateBins)->Args({60, 0})->Args({60, 1})->Args({100, 0})->Args({100, 1});

BENCHMARK_MAIN();
