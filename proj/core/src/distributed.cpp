#include "formation/distributed.hpp"

#include "formation/rng.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace formation {

namespace {

long long max_pairwise_distance(const Graph& g, const PathSet& q) {
    long long best = 0;
    for (const UnscheduledPath& pj : q.paths) {
        std::vector<long long> dist = distances_from(g, pj.tail());
        for (const UnscheduledPath& pi : q.paths)
            best = std::max(best, dist[pi.head()]);
    }
    return best;
}

struct Sim {
    const Graph& g;
    const SimConfig& cfg;
    Rng rng;
    int n;
    std::vector<std::vector<VertexId>> path; // full assigned route per agent
    std::vector<size_t> index;               // current position on the route

    Sim(const Graph& graph, const PathSet& q, const SimConfig& config)
        : g(graph), cfg(config), rng(config.seed), n(static_cast<int>(q.paths.size())) {
        for (const UnscheduledPath& p : q.paths)
            path.push_back(p.vertices);
        index.assign(n, 0);
    }

    VertexId pos(int i) const { return path[i][index[i]]; }
    bool at_goal(int i) const { return index[i] + 1 == path[i].size(); }
    VertexId target(int i) const { return path[i][index[i] + 1]; }
};

} // namespace

SimTrace simulate(const Graph& g, const PathSet& q, const SimConfig& cfg) {
    Sim sim(g, q, cfg);
    const int n = sim.n;
    const long long round_limit = n + max_pairwise_distance(g, q);

    SimTrace trace;
    trace.schedule.occupancy.resize(n);
    for (int i = 0; i < n; ++i) {
        if (q.paths[i].vertices.empty())
            throw std::invalid_argument("simulate: agent " + std::to_string(i) +
                                        " has an empty path");
        trace.schedule.occupancy[i].push_back(sim.pos(i));
    }

    int t = 0;
    while (true) {
        bool all_done = true;
        for (int i = 0; i < n; ++i)
            all_done = all_done && sim.at_goal(i);
        if (all_done)
            break;
        ++t;
        if (t > round_limit)
            throw SimulationStall(t);

        RoundRecord rec;
        rec.t = t;

        std::map<VertexId, int> occupant;
        for (int i = 0; i < n; ++i)
            occupant[sim.pos(i)] = i;

        // ---- forward phase: intents toward occupied targets; an occupant
        // resting at its goal swaps goals with the first knocker and redoes
        // its own forward step (it is no longer at a goal, so once per round)
        std::vector<char> announced(n, 0);
        auto forward = [&](auto&& self, int i) -> void {
            if (sim.at_goal(i) || announced[i])
                return;
            announced[i] = 1;
            VertexId w = sim.target(i);
            auto occ = occupant.find(w);
            if (occ == occupant.end())
                return; // contention for free vertices is resolved backward
            int j = occ->second;
            rec.messages.push_back({t, Message::Phase::forward, Message::Kind::intent,
                                    i, j, w});
            if (sim.at_goal(j)) {
                rec.messages.push_back({t, Message::Phase::forward,
                                        Message::Kind::goal_switch, j, i, w});
                rec.switches.push_back({t, j, i});
                // j adopts i's remainder beyond w; i's route now ends at w
                size_t wi = sim.index[i] + 1; // w's slot on i's route
                std::vector<VertexId> adopted(sim.path[i].begin() + wi + 1,
                                              sim.path[i].end());
                sim.path[i].resize(wi + 1);
                sim.path[j].insert(sim.path[j].end(), adopted.begin(), adopted.end());
                self(self, j);
            }
        };
        for (int i = 0; i < n; ++i)
            forward(forward, i);

        // ---- backward phase: resolve who moves, messages flowing back from
        // the head of each request chain
        std::map<VertexId, std::vector<int>> contenders;
        for (int i = 0; i < n; ++i)
            if (!sim.at_goal(i))
                contenders[sim.target(i)].push_back(i);

        std::map<VertexId, int> election; // contested vertex -> winner
        auto winner_for = [&](VertexId w) -> int {
            auto it = election.find(w);
            if (it != election.end())
                return it->second;
            const std::vector<int>& group = contenders.at(w);
            int win;
            if (group.size() == 1) {
                win = group[0];
            } else if (cfg.tie_break == SimConfig::TieBreak::vertex_id) {
                win = group[0];
                for (int i : group)
                    if (sim.pos(i) < sim.pos(win))
                        win = i;
            } else {
                win = group[sim.rng.below(group.size())];
            }
            election[w] = win;
            return win;
        };

        enum class Res { pending, moving, blocked };
        std::vector<Res> res(n, Res::pending);
        std::vector<char> visiting(n, 0);
        auto resolve = [&](auto&& self, int i) -> bool {
            if (res[i] != Res::pending)
                return res[i] == Res::moving;
            if (sim.at_goal(i)) {
                res[i] = Res::blocked;
                return false;
            }
            if (visiting[i]) // request cycle: only possible on invalid input
                return false;
            visiting[i] = 1;
            VertexId w = sim.target(i);
            auto occ = occupant.find(w);
            bool moves;
            if (occ != occupant.end()) {
                int j = occ->second;
                if (sim.at_goal(j) || !self(self, j)) {
                    // occupant is stuck; it relays the denial back
                    rec.messages.push_back({t, Message::Phase::backward,
                                            Message::Kind::relay_deny, j, i, w});
                    moves = false;
                } else {
                    int win = winner_for(w);
                    moves = (win == i);
                    rec.messages.push_back({t, Message::Phase::backward,
                                            moves ? Message::Kind::grant
                                                  : Message::Kind::deny,
                                            j, i, w});
                }
            } else {
                int win = winner_for(w);
                moves = (win == i);
                if (!moves)
                    rec.messages.push_back({t, Message::Phase::backward,
                                            Message::Kind::deny, win, i, w});
            }
            visiting[i] = 0;
            res[i] = moves ? Res::moving : Res::blocked;
            return moves;
        };
        for (int i = 0; i < n; ++i)
            if (!sim.at_goal(i))
                resolve(resolve, i);

        for (int i = 0; i < n; ++i) {
            if (res[i] == Res::moving) {
                rec.moves.push_back({i, sim.pos(i), sim.target(i)});
                ++sim.index[i];
            }
            trace.schedule.occupancy[i].push_back(sim.pos(i));
        }
        trace.schedule.switches.insert(trace.schedule.switches.end(),
                                       rec.switches.begin(), rec.switches.end());
        trace.rounds.push_back(std::move(rec));
    }
    return trace;
}

MessageStats message_stats(const SimTrace& trace, const Graph& g) {
    MessageStats stats;
    const int n = static_cast<int>(trace.schedule.occupancy.size());

    // breadth-first balls of radius 2 are enough for the locality check, but
    // with the schedule in hand exact distances per round are just as simple
    std::vector<std::vector<long long>> dist;
    for (int v = 0; v < g.vertex_count(); ++v)
        dist.push_back(distances_from(g, v));

    int vertex_bits = std::bit_width(static_cast<unsigned>(g.vertex_count()));
    for (const RoundRecord& round : trace.rounds) {
        int count = static_cast<int>(round.messages.size());
        stats.per_round.push_back(count);
        stats.max_per_round = std::max(stats.max_per_round, count);
        stats.total += count;
        if (count > 4 * n)
            throw std::logic_error("message_stats: round " + std::to_string(round.t) +
                                   " used " + std::to_string(count) + " messages (> 4n)");
        for (const Message& m : round.messages) {
            VertexId a = trace.schedule.occupancy[m.from][round.t - 1];
            VertexId b = trace.schedule.occupancy[m.to][round.t - 1];
            if (dist[a][b] > 2)
                throw std::logic_error("message_stats: round " + std::to_string(round.t) +
                                       " message between agents " + std::to_string(m.from) +
                                       " and " + std::to_string(m.to) +
                                       " spans distance " + std::to_string(dist[a][b]));
            stats.max_payload_bits = std::max(stats.max_payload_bits, vertex_bits + 3);
        }
    }
    return stats;
}

CrossCheck cross_check(const Graph& g, const PathSet& q, const DistanceValues& dvals) {
    CrossCheck out;
    Schedule central = schedule_paths(g, q, dvals);
    SimTrace dist = simulate(g, q);
    out.centralized_makespan = makespan(central);
    out.distributed_makespan = makespan(dist.schedule);
    out.centralized_moves = total_moves(central);
    out.distributed_moves = total_moves(dist.schedule);
    out.bound = static_cast<long long>(q.paths.size()) + max_pairwise_distance(g, q) - 1;
    out.ok = out.centralized_moves == out.distributed_moves &&
             out.centralized_makespan <= out.bound && out.distributed_makespan <= out.bound;
    return out;
}

} // namespace formation
