#include <benchmark/benchmark.h>

#include "rotlab/census.hpp"
#include "rotlab/fit.hpp"
#include "rotlab/generators.hpp"
#include "rotlab/surface.hpp"

using namespace rotlab;

static void BM_CensusGrid(benchmark::State& state) {
    const PointSet s = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    CensusOptions opts;
    opts.workers = 1;
    opts.verify_multiplicities = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotation_census(s, opts));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CensusGrid)->DenseRange(2, 6)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_CensusRandom(benchmark::State& state) {
    const PointSet s = random_points(static_cast<int>(state.range(0)), 11, 16, 8);
    CensusOptions opts;
    opts.workers = 1;
    opts.verify_multiplicities = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotation_census(s, opts));
    }
}
BENCHMARK(BM_CensusRandom)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CensusWorkers(benchmark::State& state) {
    const PointSet s = grid(6, 6);
    CensusOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    opts.verify_multiplicities = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotation_census(s, opts));
    }
}
BENCHMARK(BM_CensusWorkers)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ParabolaIntersection(benchmark::State& state) {
    const HParabola h1({Rational(0), Rational(0)}, {Rational(1), Rational(0)});
    const HParabola h2({Rational(1), Rational(0)}, {Rational(1), Rational(1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(parabola_intersection(h1, h2));
    }
}
BENCHMARK(BM_ParabolaIntersection);

static void BM_FitVanishing(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<XYZPoint> pts;
    for (int i = 0; i < m; ++i)
        pts.push_back({Rational(i), Rational(i * i % 17), Rational(2 * i + 1, 3)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_vanishing(pts));
    }
}
BENCHMARK(BM_FitVanishing)->Arg(10)->Arg(27)->Arg(56)->Unit(benchmark::kMillisecond);

static void BM_Crossings(benchmark::State& state) {
    const Rotation quarter({Rational(0), Rational(1)}, {Rational(2), Rational(3)});
    const SpecialSurface sigma =
        surface_from_rotation_line(quarter, {Rational(1), Rational(1)}, {Rational(2), Rational(1)});
    const HParabola h({Rational(3), Rational(0)}, {Rational(0), Rational(4)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(crossings(sigma, h));
    }
}
BENCHMARK(BM_Crossings);

BENCHMARK_MAIN();
