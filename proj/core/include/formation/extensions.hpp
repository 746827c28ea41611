#pragma once

#include "formation/scheduler.hpp"

#include <optional>
#include <vector>

namespace formation {

// Schedule over real (integer) time for graphs with non-unit edge lengths
// and capacities: agents dwell at vertices between crossings; a crossing of
// edge e spans [enter, exit] with exit - enter >= d(e) (equality unless the
// execution allows mid-edge queueing).
struct VertexArrival {
    VertexId vertex = 0;
    long long t = 0;
    friend bool operator==(const VertexArrival&, const VertexArrival&) = default;
};
struct EdgeCrossing {
    VertexId from = 0;
    VertexId to = 0;
    long long enter = 0;
    long long exit = 0;
    friend bool operator==(const EdgeCrossing&, const EdgeCrossing&) = default;
};
struct TimedAgent {
    std::vector<VertexArrival> arrivals; // first entry is the start at t=0
    std::vector<EdgeCrossing> crossings; // arrivals.size() - 1 of them
    long long completion = 0;            // true arrival instant at the goal
    friend bool operator==(const TimedAgent&, const TimedAgent&) = default;
};

// Guarantee bookkeeping in the metric the execution ran in; original_* are
// filled when the run happened on a transformed (subdivided or capacity
// chained) graph.
struct BoundReport {
    long long ell = 0;     // max start-goal distance in the executed metric
    long long d_max = 1;   // slot length of the execution
    long long ell_hat = 0; // max assigned path hops * d_max
    long long bound = 0;   // ell_hat + (n - 1) * d_max
    std::optional<long long> original_ell;
    std::optional<long long> original_d_max;
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct TimedSchedule {
    std::vector<TimedAgent> agents;
    std::vector<GoalSwitch> switches; // t is the macro slot index
    long long makespan = 0;           // max completion
    BoundReport bounds;
    friend bool operator==(const TimedSchedule&, const TimedSchedule&) = default;
};

// Full capacity case, c(e) = d(e) everywhere: agents queue bumper-to-bumper
// inside edges. Runs the unit pipeline on the subdivided graph and maps the
// result back.
TimedSchedule schedule_full_capacity(const Instance& inst);

// Unit capacity case, c(e) = 1 everywhere: every edge is exclusive while
// crossed. Plans on true lengths, then executes in macro slots of the
// longest edge length; agents arrive mid-slot at their true instants.
TimedSchedule schedule_unit_capacity(const Instance& inst);

// General case, 1 <= c(e) <= d(e): reduces each edge to a chain of c(e)
// unit-capacity edges of length ceil(d(e)/c(e)) and runs the unit-capacity
// scheduler on the chain graph, mapping crossings back to original edges.
TimedSchedule schedule_mixed(const Instance& inst);

// Rebuilds per-step occupancy rows from a timed schedule whose crossings all
// take exactly one step (i.e. an execution of a unit-length graph); throws
// otherwise.
std::vector<std::vector<VertexId>> unit_occupancy(const TimedSchedule& ts);

// Exhaustive search over all collision-free unit-capacity executions that
// keep every agent on some shortest start-to-goal path (waits allowed
// anywhere). Returns the earliest instant at which the agents cover the goal
// set, or -1 when none exists within the horizon. Throws when the search
// exceeds `state_cap` explored states.
struct SearchResult {
    long long min_completion = -1;
    long long states = 0;
};
SearchResult min_completion_exhaustive(const Instance& inst, long long horizon,
                                       long long state_cap = 20'000'000);

// Certifies the completion-time lower bound on the two-star family: searches
// every unit-capacity schedule along shortest paths up to the advertised
// bound (path_edges + 2 + n - 1 slots of edge_len) and checks the true
// optimum equals it exactly. Guarded to n <= 3 and at most 12 vertices.
long long lower_bound_certificate(int n, int path_edges, int edge_len);

} // namespace formation
