#pragma once

#include "formation/extensions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace formation {

// One reproducible defect, reconstructible from (schedule, instance) alone.
struct Violation {
    enum class Kind {
        wrong_start,
        wrong_goal_set,
        non_adjacent_move,
        meet,
        head_on,
        capacity_exceeded,
        bound_exceeded,
        wait_profile,
    };
    Kind kind{};
    long long t = -1; // -1 when not tied to one time step
    std::vector<int> agents;
    std::vector<VertexId> vertices;
    std::string detail;
};
const char* to_string(Violation::Kind kind);

// Feasibility: agents start at their starts, every transition is a stay or a
// move across an existing edge, and the final column is exactly the goal set.
// Malformed shapes (no rows, ragged rows, unknown vertex ids) throw instead.
std::vector<Violation> check_feasible(const Schedule& s, const Instance& inst);

// Meets (two agents on one vertex at one step) and head-ons (two agents
// swapping across one edge between consecutive steps).
std::vector<Violation> check_collisions(const Schedule& s);

// Makespan against n + ell - 1, ell being the largest start-goal shortest
// distance, plus distance optimality against the exhaustive matching oracle
// when n <= 8.
struct BoundsReport {
    long long makespan = 0;
    long long ell = 0;
    long long bound = 0;
    long long total_moves = 0;
    std::optional<long long> oracle_cost; // filled when n <= 8
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};
BoundsReport check_bounds(const Schedule& s, const Instance& inst);

// Per cluster, the sorted per-agent wait counts w_(1) <= ... <= w_(m) must
// satisfy w_(i) <= i - 1. A wait is a stay strictly before the agent's last
// move; resting at the goal afterwards does not count.
std::vector<Violation> check_wait_profile(const Schedule& s,
                                          const std::vector<Cluster>& clusters);

// check_feasible + check_collisions + check_bounds violations in one list.
std::vector<Violation> check_all(const Schedule& s, const Instance& inst);

// Reference 6-agent run on the hole-free 7x6 grid (starts fill column 0,
// goals fill column 6, t = 0..8), hard-coded as coordinates and mapped to
// vertex ids; regression fixture for the checkers.
struct FixtureRun {
    Instance instance;
    Schedule schedule;
};
FixtureRun six_agent_grid_fixture();

// Timed-schedule checks: crossing chains must follow existing edges, take
// exactly d(e) on exclusive edges and at least d(e) elsewhere, dwell
// intervals may not overlap on a vertex, per-edge occupancy stays within
// c(e), opposite-direction crossings may not overlap in time, the final
// formation is the goal set, and the makespan honors the advertised bound.
std::vector<Violation> check_timed(const TimedSchedule& ts, const Instance& inst);

} // namespace formation
