#pragma once

#include "formation/scheduler.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace formation {

// Synchronous message-passing execution of the planned paths: agents know
// only their own remaining route and talk to agents at most two hops away.
// Each round has a forward phase (movement intents; goal switches when a
// mover knocks on an agent resting at its goal) and a backward phase
// (grants and denials flowing back along request chains).

struct SimConfig {
    enum class TieBreak { vertex_id, seeded_random };
    TieBreak tie_break = TieBreak::vertex_id;
    std::uint64_t seed = 0; // used only by seeded_random
};

struct Message {
    enum class Phase { forward, backward };
    enum class Kind { intent, goal_switch, grant, deny, relay_deny };
    int t = 0;
    Phase phase = Phase::forward;
    Kind kind = Kind::intent;
    int from = 0;
    int to = 0;
    VertexId vertex = 0; // the vertex under negotiation
    friend bool operator==(const Message&, const Message&) = default;
};

struct SimMove {
    int agent = 0;
    VertexId from = 0;
    VertexId to = 0;
    friend bool operator==(const SimMove&, const SimMove&) = default;
};

struct RoundRecord {
    int t = 0;
    std::vector<Message> messages;
    std::vector<SimMove> moves;
    std::vector<GoalSwitch> switches;
    friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct SimTrace {
    std::vector<RoundRecord> rounds;
    Schedule schedule;
    friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

// Raised when the protocol stops making progress (only reachable on inputs
// violating the planner's guarantees, e.g. two paths sharing a tail).
class SimulationStall : public std::runtime_error {
public:
    explicit SimulationStall(int round)
        : std::runtime_error("simulation stalled at round " + std::to_string(round)),
          round(round) {}
    int round;
};

SimTrace simulate(const Graph& g, const PathSet& q, const SimConfig& cfg = {});

// Per-round message accounting plus protocol locality checks.
struct MessageStats {
    std::vector<int> per_round;
    int max_per_round = 0;
    int max_payload_bits = 0; // vertex id payload + kind tag
    long long total = 0;
};
// Verifies every message travels between agents within graph distance two of
// each other at send time and that each round stays within 4n messages;
// throws std::logic_error otherwise.
MessageStats message_stats(const SimTrace& trace, const Graph& g);

// Runs both schedulers on the same inputs and compares the advertised
// guarantees.
struct CrossCheck {
    int centralized_makespan = 0;
    int distributed_makespan = 0;
    long long centralized_moves = 0;
    long long distributed_moves = 0;
    long long bound = 0; // n + max start-goal distance - 1
    bool ok = false;     // equal move totals, both makespans within bound
};
CrossCheck cross_check(const Graph& g, const PathSet& q, const DistanceValues& dvals);

} // namespace formation
