#include "formation/assignment.hpp"
#include "formation/generators.hpp"
#include "formation/hungarian.hpp"
#include "formation/rng.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>
#include <utility>

using namespace formation;

TEST_CASE("hungarian on tiny matrices") {
    CHECK(min_cost_assignment({{5}}).cost == 5);
    const auto r = min_cost_assignment({{1, 2}, {2, 1}});
    CHECK(r.cost == 2);
    CHECK(r.assignment == std::vector<int>{0, 1});
    // forced off-diagonal
    const auto s = min_cost_assignment({{10, 1}, {1, 10}});
    CHECK(s.cost == 2);
    CHECK(s.assignment == std::vector<int>{1, 0});
}

TEST_CASE("hungarian equals exhaustive matching on random matrices") {
    Rng rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(6));
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng.below(20));
        CHECK(min_cost_assignment(m).cost == brute_force_assignment(m).cost);
    }
}

TEST_CASE("planning a path graph ties break toward the identity pairing") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    const Instance inst = make_instance(std::move(g), {0, 1}, {2, 3});
    const PathSet q = plan_shortest_path_set(inst);
    CHECK(q.total_length == 4);
    CHECK(q.paths[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(q.paths[1].vertices == std::vector<VertexId>{1, 2, 3});
    CHECK(q.paths[0].head() == 0);
    CHECK(q.paths[1].tail() == 3);
    CHECK(brute_force_min_matching(inst).cost == 4);
}

TEST_CASE("column crossing on the 7x6 grid") {
    Graph g = grid_with_holes(7, 6);
    std::vector<VertexId> starts, goals;
    for (int y = 0; y < 6; ++y) {
        starts.push_back(y * 7);
        goals.push_back(y * 7 + 6);
    }
    const Instance inst = make_instance(std::move(g), starts, goals);
    const PathSet q = plan_shortest_path_set(inst);
    CHECK(q.total_length == 36);
    CHECK(brute_force_min_matching(inst).cost == 36);
    CHECK(verify_properties(inst.graph, q, inst).ok());
}

TEST_CASE("plans match the exhaustive oracle on random instances") {
    Rng rng(4242);
    for (int iter = 0; iter < 25; ++iter) {
        const Instance inst = random_grid_instance(rng, 5, 5, 4, 4);
        const PathSet q = plan_shortest_path_set(inst);
        CHECK(q.total_length == brute_force_min_matching(inst).cost);
        CHECK(verify_properties(inst.graph, q, inst).ok());
        CHECK(plan_shortest_path_set(inst).paths == q.paths);   // deterministic
    }
}

TEST_CASE("verify_properties reports violations") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    const Instance inst = make_instance(std::move(g), {0, 1}, {2, 3});

    PathSet bad;
    bad.paths = {{0, {0, 1, 2}}, {1, {1, 0, 1, 2, 3}}};   // not a shortest path
    bad.total_length = 6;
    const PathSetReport rep = verify_properties(inst.graph, bad, inst);
    CHECK_FALSE(rep.ok());
    bool saw_shortest = false;
    for (const auto& issue : rep.issues) saw_shortest |= issue.check == "shortest";
    CHECK(saw_shortest);

    PathSet tails;
    tails.paths = {{0, {0, 1, 2}}, {1, {1, 2}}};          // both end on goal 2
    tails.total_length = 3;
    CHECK_FALSE(verify_properties(inst.graph, tails, inst).ok());
}

TEST_CASE("orientation conflicts are caught") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    const Instance inst = make_instance(std::move(g), {0, 3}, {2, 1});
    PathSet q;
    q.paths = {{0, {0, 1, 2}}, {1, {3, 2, 1}}};           // edge 1-2 used both ways
    q.total_length = 4;
    std::map<std::pair<VertexId, VertexId>, EdgeOrientation> dirs;
    const auto conflict = orient_edges(q, dirs);
    REQUIRE(conflict.has_value());
    CHECK(conflict->u == 1);
    CHECK(conflict->v == 2);
    CHECK_FALSE(verify_properties(inst.graph, q, inst).ok());
}

TEST_CASE("oracle guards") {
    Graph g = grid_with_holes(5, 5);
    std::vector<VertexId> starts, goals;
    for (int i = 0; i < 9; ++i) {
        starts.push_back(i);
        goals.push_back(24 - i);
    }
    // 9 agents with disjoint start/goal sets
    const Instance inst = make_instance(std::move(g), starts, goals);
    CHECK_THROWS_AS(brute_force_min_matching(inst), std::invalid_argument);
}
