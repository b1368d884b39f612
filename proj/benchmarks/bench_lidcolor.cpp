#include <benchmark/benchmark.h>

#include "lidcolor/construct.hpp"
#include "lidcolor/exact.hpp"
#include "lidcolor/gen.hpp"
#include "lidcolor/structure.hpp"

using namespace lidcolor;

namespace {

void BM_ExactPathPower(benchmark::State& state) {
    const Graph g = gen::gen_path_power(static_cast<Vertex>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(exact::lid_chromatic(g, 2 * g.size()));
}
BENCHMARK(BM_ExactPathPower)->DenseRange(6, 12, 2);

void BM_ExactRandomBipartite(benchmark::State& state) {
    gen::Rng rng(1);
    const auto side = static_cast<Vertex>(state.range(0));
    const Graph g = gen::random_bipartite(side, side, 250, rng);
    for (auto _ : state) benchmark::DoNotOptimize(exact::k_lid_colorable(g, 4));
}
BENCHMARK(BM_ExactRandomBipartite)->DenseRange(4, 10, 2);

void BM_ThreeLidDecide(benchmark::State& state) {
    gen::Rng rng(2);
    const auto side = static_cast<Vertex>(state.range(0));
    const Graph g = gen::random_bipartite(side, side, 150, rng);
    for (auto _ : state) benchmark::DoNotOptimize(exact::three_lid_decide(g));
}
BENCHMARK(BM_ThreeLidDecide)->RangeMultiplier(2)->Range(8, 64);

void BM_ColorBipartite(benchmark::State& state) {
    gen::Rng rng(3);
    const auto side = static_cast<Vertex>(state.range(0));
    const Graph g = gen::random_bipartite(side, side, 50, rng);
    for (auto _ : state) benchmark::DoNotOptimize(construct::color_bipartite(g));
}
BENCHMARK(BM_ColorBipartite)->RangeMultiplier(4)->Range(64, 4096);

void BM_ColorKTree(benchmark::State& state) {
    gen::Rng rng(4);
    const auto [g, ord] = gen::random_ktree(static_cast<Vertex>(state.range(0)), 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(construct::color_ktree(g, ord));
}
BENCHMARK(BM_ColorKTree)->RangeMultiplier(4)->Range(64, 4096);

void BM_ColorInterval(benchmark::State& state) {
    gen::Rng rng(5);
    const auto iv = gen::random_intervals(static_cast<Vertex>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(construct::color_interval(iv));
}
BENCHMARK(BM_ColorInterval)->RangeMultiplier(4)->Range(64, 4096);

void BM_ColorOuterplanar(benchmark::State& state) {
    gen::Rng rng(6);
    const auto [g, oo] = gen::random_maximal_outerplanar(static_cast<Vertex>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(construct::color_outerplanar(g, oo));
}
BENCHMARK(BM_ColorOuterplanar)->RangeMultiplier(4)->Range(64, 1024);

void BM_ColorPlanarGirth36(benchmark::State& state) {
    gen::Rng rng(7);
    const Graph g = gen::random_subdivided_planar(static_cast<Vertex>(state.range(0)), 36, rng);
    for (auto _ : state) benchmark::DoNotOptimize(construct::color_planar_girth36(g));
}
BENCHMARK(BM_ColorPlanarGirth36)->RangeMultiplier(2)->Range(8, 64);

void BM_VerifyLid(benchmark::State& state) {
    gen::Rng rng(8);
    const auto side = static_cast<Vertex>(state.range(0));
    const Graph g = gen::random_bipartite(side, side, 50, rng);
    const Coloring c = construct::color_bipartite(g);
    for (auto _ : state) benchmark::DoNotOptimize(is_lid_coloring(g, c));
}
BENCHMARK(BM_VerifyLid)->RangeMultiplier(4)->Range(64, 4096);

void BM_NpReduce(benchmark::State& state) {
    const int girth = static_cast<int>(state.range(0));
    const Hypergraph fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    for (auto _ : state) benchmark::DoNotOptimize(gen::np_reduce(fano, girth));
}
BENCHMARK(BM_NpReduce)->Arg(4)->Arg(36)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
