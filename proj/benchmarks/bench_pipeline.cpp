#include "formation/distributed.hpp"
#include "formation/generators.hpp"
#include "formation/ordering.hpp"
#include "formation/scheduler.hpp"

#include <benchmark/benchmark.h>

using namespace formation;

namespace {

// n agents marching across an empty side x side grid, left column to right column.
Instance column_instance(int side, int agents) {
    Graph g = grid_with_holes(side, side);
    std::vector<VertexId> starts, goals;
    for (int y = 0; y < agents; ++y) {
        starts.push_back(y * side);
        goals.push_back(y * side + side - 1);
    }
    return make_instance(std::move(g), starts, goals);
}

} // namespace

static void BM_Plan(benchmark::State& state) {
    const Instance inst = column_instance(static_cast<int>(state.range(0)), 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(plan_shortest_path_set(inst));
    state.SetComplexityN(inst.graph.vertex_count());
}
BENCHMARK(BM_Plan)->RangeMultiplier(2)->Range(10, 40)->Complexity();

static void BM_Schedule(benchmark::State& state) {
    const Instance inst = column_instance(static_cast<int>(state.range(0)), 10);
    const PathSet q = plan_shortest_path_set(inst);
    const auto clusters = find_clusters(q);
    const auto dvals = build_distance_values(inst.graph, q, clusters);
    for (auto _ : state)
        benchmark::DoNotOptimize(schedule_paths(inst.graph, q, dvals));
    state.SetComplexityN(inst.graph.vertex_count());
}
BENCHMARK(BM_Schedule)->RangeMultiplier(2)->Range(10, 40)->Complexity();

static void BM_Simulate(benchmark::State& state) {
    const Instance inst = column_instance(static_cast<int>(state.range(0)), 10);
    const PathSet q = plan_shortest_path_set(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(inst.graph, q));
    state.SetComplexityN(inst.graph.vertex_count());
}
BENCHMARK(BM_Simulate)->RangeMultiplier(2)->Range(10, 40)->Complexity();
