#include <benchmark/benchmark.h>

#include "rainbow/analysis.hpp"
#include "rainbow/constructive.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

// Verifier on instances whose verdict is true, so every pair is searched.
void bm_verify_edge_cycle(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = cycle_graph(n);
    const EdgeColoring c = color_cycle(n).coloring;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_rainbow_connected(g, c).connected);
}
BENCHMARK(bm_verify_edge_cycle)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

void bm_verify_vertex_wheel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = wheel_graph(n);
    const VertexColoring c = VertexColoring::uniform(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_rainbow_vertex_connected(g, c).connected);
}
BENCHMARK(bm_verify_vertex_wheel)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

// Exact solver on fans, whose rc switches from 2 to 3 at n = 8.
void bm_rc_exact_fan(benchmark::State& state)
{
    const Graph g = fan_graph(static_cast<std::size_t>(state.range(0)));
    SolverOptions options;
    options.max_edges = 24;
    for (auto _ : state)
        benchmark::DoNotOptimize(rc_exact(g, 5, options).value);
}
BENCHMARK(bm_rc_exact_fan)->DenseRange(5, 10)->Unit(benchmark::kMicrosecond);

void bm_rc_exact_cycle(benchmark::State& state)
{
    const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rc_exact(g, 8).value);
}
BENCHMARK(bm_rc_exact_cycle)->DenseRange(5, 10)->Unit(benchmark::kMicrosecond);

void bm_is_outerplanar(benchmark::State& state)
{
    const Graph g = random_outerplanar(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_outerplanar(g));
}
BENCHMARK(bm_is_outerplanar)->Arg(8)->Arg(12)->Arg(16);

void bm_color_outerplanar_diam2_fan(benchmark::State& state)
{
    const Graph g = fan_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(color_outerplanar_diam2(g).coloring.palette_size());
}
BENCHMARK(bm_color_outerplanar_diam2_fan)->Arg(6)->Arg(12)->Arg(16);

void bm_planarize_convex_complete(benchmark::State& state)
{
    const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
    const EdgeColoring c = random_edge_coloring(g, 4, 3);
    const Drawing d = convex_drawing(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(planarize_drawing(g, c, d).graph.vertex_count());
}
BENCHMARK(bm_planarize_convex_complete)->Arg(5)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
