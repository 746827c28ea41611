#pragma once

#include "formation/ordering.hpp"

#include <vector>

namespace formation {

// Goal exchange between two agents: `a` adopts the onward goal and keeps
// moving, `b` now stops at the shared vertex.
struct GoalSwitch {
    int t = 0;
    int a = 0;
    int b = 0;
    friend bool operator==(const GoalSwitch&, const GoalSwitch&) = default;
};

// Synchronous schedule: occupancy[i][t] is agent i's vertex at step t,
// t = 0..makespan.
struct Schedule {
    std::vector<std::vector<VertexId>> occupancy;
    std::vector<GoalSwitch> switches;
    friend bool operator==(const Schedule&, const Schedule&) = default;
};

int makespan(const Schedule& s);        // last step with any movement, 0 if none
long long total_moves(const Schedule& s);

// Priority scheduler over a planned path set: each step, agents advance in
// decreasing order of their target's distance value (ties to the lower agent
// id), moving unless the target vertex is already taken this step, with goal
// switches whenever a finishing agent's goal lies on a still-pending path.
// Unit-length edges only; one move per agent per step.
Schedule schedule_paths(const Graph& g, const PathSet& q, const DistanceValues& dvals);

namespace detail {

// Shared core of the centralized schedulers: one synchronous round of
// claim-based advancement plus goal switching. The unit scheduler runs it
// per time step; the capacity extensions run it per macro slot.
class FrontierEngine {
public:
    FrontierEngine(const Graph& g, const PathSet& q, const DistanceValues& dvals);

    struct Move {
        int agent = 0;
        VertexId from = 0;
        VertexId to = 0;
        int edge = 0; // edge index in the graph
    };
    struct Round {
        std::vector<Move> moves;
        std::vector<GoalSwitch> switches; // t filled with the engine's round counter
    };

    bool done() const;
    Round step(); // throws std::logic_error if no agent can move

    VertexId position(int agent) const { return paths_[agent][index_[agent]]; }
    const std::vector<VertexId>& path(int agent) const { return paths_[agent]; }
    int rounds() const { return round_; }

private:
    bool finished(int agent) const;
    void try_switch(int agent, std::vector<GoalSwitch>& out);

    const Graph& g_;
    const DistanceValues& dvals_;
    std::vector<std::vector<VertexId>> paths_;
    std::vector<size_t> index_;
    std::vector<char> resting_;
    int round_ = 0;
};

} // namespace detail

} // namespace formation
