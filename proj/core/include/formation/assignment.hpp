#pragma once

#include "formation/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace formation {

// One agent's planned (unscheduled) route; vertices[0] is its start.
struct UnscheduledPath {
    int agent = 0;
    std::vector<VertexId> vertices;

    VertexId head() const { return vertices.front(); }
    VertexId tail() const { return vertices.back(); }
    friend bool operator==(const UnscheduledPath&, const UnscheduledPath&) = default;
};

struct PathSet {
    std::vector<UnscheduledPath> paths; // indexed by agent id
    long long total_length = 0;
    friend bool operator==(const PathSet&, const PathSet&) = default;
};

// Distance-optimal goal assignment plus one shortest path per agent:
// per-goal shortest-path distances feed a minimum-cost assignment, ties
// among optimal assignments broken toward the lexicographically smallest
// goal-index vector, and each matched pair gets the lexicographically
// smallest shortest path. The result has distinct heads and tails, every
// path shortest, total length minimal, and no edge used in both directions.
PathSet plan_shortest_path_set(const Instance& inst);

// Exhaustive matching oracle for n <= 8: tries every bijection and returns
// the minimal total distance plus the lexicographically smallest argmin
// (as goal indices per agent). Throws on larger n.
struct BruteForceMatching {
    long long cost = 0;
    std::vector<int> assignment; // agent -> goal index
};
BruteForceMatching brute_force_min_matching(const Instance& inst);

// Exhaustive assignment on a raw matrix (the oracle behind
// brute_force_min_matching, exposed for testing solvers against it).
BruteForceMatching brute_force_assignment(const std::vector<std::vector<long long>>& cost);

// Structural checks on a path set. "total" is checked against the brute
// force oracle only when n <= 8 (noted as skipped otherwise).
struct PathSetReport {
    struct Issue {
        std::string check; // endpoints | shortest | orientation | total
        std::string detail;
    };
    std::vector<Issue> issues;
    bool total_checked = false;
    bool ok() const { return issues.empty(); }
};
PathSetReport verify_properties(const Graph& g, const PathSet& q, const Instance& inst);

// Orients every edge used by the path set in its direction of travel.
// Key is the normalized (min,max) endpoint pair; value records the actual
// direction and the first path that used it. Returns the first edge seen in
// both directions, if any.
struct EdgeOrientation {
    VertexId from = 0;
    VertexId to = 0;
    int path = 0;
};
struct OrientationConflict {
    VertexId u = 0;
    VertexId v = 0;
    int path_a = 0;
    int path_b = 0;
};
std::optional<OrientationConflict>
orient_edges(const PathSet& q,
             std::map<std::pair<VertexId, VertexId>, EdgeOrientation>& out);

} // namespace formation
