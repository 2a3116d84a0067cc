#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "oforge/pipeline.hpp"

using namespace oforge;

static void BM_PipelineCube(benchmark::State& state) {
    auto g = fixtures::cube();
    for (auto _ : state) {
        auto cert = realize_with_overlap(g);
        benchmark::DoNotOptimize(cert.overlap.overlapping);
    }
}
BENCHMARK(BM_PipelineCube)->Unit(benchmark::kMillisecond);

static void BM_PipelineIcosahedron(benchmark::State& state) {
    auto g = fixtures::icosahedron();
    for (auto _ : state) {
        auto cert = realize_with_overlap(g);
        benchmark::DoNotOptimize(cert.overlap.overlapping);
    }
}
BENCHMARK(BM_PipelineIcosahedron)->Unit(benchmark::kMillisecond);

static void BM_SpanningTreeCount(benchmark::State& state) {
    auto g = fixtures::dodecahedron();
    for (auto _ : state) benchmark::DoNotOptimize(count_spanning_trees(g));
}
BENCHMARK(BM_SpanningTreeCount);

static void BM_CubeTreeEnumeration(benchmark::State& state) {
    auto g = fixtures::cube();
    for (auto _ : state) {
        long long n = 0;
        for_each_spanning_tree(g, [&](const CutTree&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_CubeTreeEnumeration);

static void BM_CubeCensus(benchmark::State& state) {
    auto p = fixtures::unit_cube();
    for (auto _ : state)
        benchmark::DoNotOptimize(count_incongruent_unfoldings(p));
}
BENCHMARK(BM_CubeCensus)->Unit(benchmark::kMillisecond);

static void BM_DetectOverlap(benchmark::State& state) {
    auto p = fixtures::diamond_cube();
    auto t = build_cut_tree(p.graph, {0, 2, 1, 5});
    auto u = unfold(p, t, p.base_face);
    for (auto _ : state) benchmark::DoNotOptimize(detect_overlap(u).overlapping);
}
BENCHMARK(BM_DetectOverlap);

BENCHMARK_MAIN();
