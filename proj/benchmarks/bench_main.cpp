#include <adsvol/boundary.hpp>
#include <adsvol/samples.hpp>
#include <adsvol/volume.hpp>
#include <benchmark/benchmark.h>

using namespace adsvol;

static void BM_CylinderVolume(benchmark::State& state) {
    const auto P = cylinder(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(volume(P));
}
BENCHMARK(BM_CylinderVolume)->Unit(benchmark::kMicrosecond);

static void BM_RandomPolytopeVolume(benchmark::State& state) {
    const auto P = random_good_polytope(static_cast<std::uint64_t>(state.range(1)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(volume(P));
}
BENCHMARK(BM_RandomPolytopeVolume)->Args({2, 1})->Args({3, 1})->Args({3, 7})->Unit(benchmark::kMillisecond);

static void BM_Breakpoints(benchmark::State& state) {
    const auto P = random_good_polytope(7, 3);
    VolumeOptions o;
    o.samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(breakpoints(P, o));
}
BENCHMARK(BM_Breakpoints)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_EpsilonOracle(benchmark::State& state) {
    const auto P = cylinder(2.0);
    OracleOptions o;
    o.budget = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(epsilon_oracle(P, 0.05, o));
}
BENCHMARK(BM_EpsilonOracle)->Arg(1 << 12)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_EpsilonExtrapolate(benchmark::State& state) {
    const auto P = random_good_polytope(200, 3);
    for (auto _ : state) benchmark::DoNotOptimize(epsilon_extrapolate(P, EpsilonSchedule{}));
}
BENCHMARK(BM_EpsilonExtrapolate)->Unit(benchmark::kMillisecond);

static void BM_PolygonFormula(benchmark::State& state) {
    const auto G = random_conic_polygon(3);
    for (auto _ : state) benchmark::DoNotOptimize(polygon_volume(G));
}
BENCHMARK(BM_PolygonFormula)->Unit(benchmark::kMicrosecond);

static void BM_PolygonLift(benchmark::State& state) {
    const auto G = random_conic_polygon(3);
    for (auto _ : state) benchmark::DoNotOptimize(boundary_volume_via_3d(G));
}
BENCHMARK(BM_PolygonLift)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
