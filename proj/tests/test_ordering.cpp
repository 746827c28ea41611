#include "formation/generators.hpp"
#include "formation/ordering.hpp"
#include "formation/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace formation;

namespace {

PathSet set_of(std::vector<std::vector<VertexId>> walks) {
    PathSet q;
    for (std::size_t i = 0; i < walks.size(); ++i)
        q.paths.push_back({static_cast<int>(i), std::move(walks[i])});
    q.total_length = 0;
    return q;
}

} // namespace

TEST_CASE("path_distance_value walks the path metric") {
    const Graph g(4, {{0, 1, 2, 1}, {1, 2, 3, 1}, {2, 3, 1, 1}});
    const UnscheduledPath p{0, {0, 1, 2, 3}};
    CHECK(path_distance_value(g, p, 0) == 0);
    CHECK(path_distance_value(g, p, 1) == 2);
    CHECK(path_distance_value(g, p, 2) == 5);
    CHECK(path_distance_value(g, p, 3) == 6);
    CHECK_THROWS_AS(path_distance_value(g, p, 99), std::invalid_argument);
}

TEST_CASE("clusters are the transitive closure of vertex sharing") {
    const PathSet q = set_of({{0, 1}, {1, 2}, {5, 6}, {6, 7}, {10, 11}});
    const auto clusters = find_clusters(q);
    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0].paths == std::vector<int>{0, 1});
    CHECK(clusters[1].paths == std::vector<int>{2, 3});
    CHECK(clusters[2].paths == std::vector<int>{4});
    CHECK(clusters[0].vertices == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("distance values on a single path") {
    const Graph g(3, {{0, 1}, {1, 2}});
    const PathSet q = set_of({{0, 1, 2}});
    const auto dv = build_distance_values(g, q, find_clusters(q));
    CHECK(dv.value_for_path(0, 0) == 0);
    CHECK(dv.value_for_path(0, 1) == 1);
    CHECK(dv.value_for_path(0, 2) == 2);
}

TEST_CASE("values propagate across a shared vertex") {
    // q0 = [0,1,2,3] and q1 = [4,2,5] meet at 2 with offsets 2 vs 1
    const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {4, 2}, {2, 5}});
    const PathSet q = set_of({{0, 1, 2, 3}, {4, 2, 5}});
    const auto clusters = find_clusters(q);
    REQUIRE(clusters.size() == 1);
    const auto dv = build_distance_values(g, q, clusters);
    CHECK(dv.value(0, 0) == 0);  // anchor head stays at zero after normalize
    CHECK(dv.value(0, 2) == 2);
    CHECK(dv.value(0, 4) == 1);  // head of q1 sits one unit behind the shared vertex
    CHECK(dv.value(0, 5) == 3);

    // per-path restriction differs from the cluster value by a constant
    for (int p : {0, 1}) {
        const auto& verts = q.paths[p].vertices;
        const long long delta =
            dv.value_for_path(p, verts.front()) - path_distance_value(g, q.paths[p], verts.front());
        for (VertexId v : verts)
            CHECK(dv.value_for_path(p, v) - path_distance_value(g, q.paths[p], v) == delta);
    }
}

TEST_CASE("values increase strictly along every path") {
    Rng rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        const Instance inst = random_grid_instance(rng, 5, 5, 4, 4);
        const PathSet q = plan_shortest_path_set(inst);
        const auto dv = build_distance_values(inst.graph, q, find_clusters(q));
        for (const auto& p : q.paths)
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
                CHECK(dv.value_for_path(p.agent, p.vertices[i]) <
                      dv.value_for_path(p.agent, p.vertices[i + 1]));
    }
}

TEST_CASE("normalization and anchor order") {
    Rng rng(13);
    const Instance inst = random_grid_instance(rng, 6, 6, 5, 5);
    const PathSet q = plan_shortest_path_set(inst);
    const auto clusters = find_clusters(q);

    const auto norm = build_distance_values(inst.graph, q, clusters);
    for (const auto& values : norm.cluster_values) {
        long long lo = values.begin()->second;
        for (const auto& [v, val] : values) lo = std::min(lo, val);
        CHECK(lo == 0);
    }

    BuildOptions up, down;
    up.normalize = down.normalize = false;
    down.order = BuildOptions::Order::descending;
    const auto a = build_distance_values(inst.graph, q, clusters, up);
    const auto d = build_distance_values(inst.graph, q, clusters, down);
    for (std::size_t c = 0; c < clusters.size(); ++c)
        CHECK(respects(a.cluster_values[c], d.cluster_values[c], clusters[c].vertices));
}

TEST_CASE("respects demands a constant difference over the full domain") {
    std::map<VertexId, long long> da{{0, 0}, {1, 1}, {2, 2}};
    std::map<VertexId, long long> db{{0, 7}, {1, 8}, {2, 9}};
    CHECK(respects(da, db, {0, 1, 2}));
    CHECK(respects(da, da, {0, 1, 2}));
    db[2] = 11;
    CHECK_FALSE(respects(da, db, {0, 1, 2}));
    CHECK_THROWS_AS(respects(da, db, {0, 3}), std::invalid_argument);
}

TEST_CASE("a cyclic path set is rejected with a certificate") {
    // three chords of a six-cycle, each shortest, jointly non-optimal
    const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const PathSet q = set_of({{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 0, 1}});
    const auto clusters = find_clusters(q);
    REQUIRE(clusters.size() == 1);

    CHECK_THROWS_AS(build_distance_values(c6, q, clusters), ConsistencyError);
    try {
        build_distance_values(c6, q, clusters);
    } catch (const ConsistencyError& e) {
        CHECK(e.vertex == 0);
        CHECK(e.path_a == 0);
        CHECK(e.path_b == 2);
    }

    const DagCheck dag = check_dag(q);
    REQUIRE_FALSE(dag.ok);
    REQUIRE_FALSE(dag.cycle.empty());
    CHECK(dag.cycle.front() == dag.cycle.back());
    CHECK(dag.cycle.size() == 7);   // all six ring edges, consistently oriented
}

TEST_CASE("an opposite-direction edge fails the dag check with the edge") {
    const PathSet q = set_of({{0, 1, 2}, {3, 2, 1}});
    const DagCheck dag = check_dag(q);
    REQUIRE_FALSE(dag.ok);
    REQUIRE(dag.conflict.has_value());
    CHECK(dag.conflict->u == 1);
    CHECK(dag.conflict->v == 2);
}

TEST_CASE("planned sets build cleanly and order as a dag") {
    Rng rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        const Instance inst = random_grid_instance(rng, 6, 6, 6, 5);
        const PathSet q = plan_shortest_path_set(inst);
        CHECK_NOTHROW(build_distance_values(inst.graph, q, find_clusters(q)));
        CHECK(check_dag(q).ok);
    }
}
