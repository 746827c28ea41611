#include "formation/validator.hpp"

#include "formation/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace formation {

namespace {

std::string agent_str(int a) { return "agent " + std::to_string(a); }

void require_rectangular(const Schedule& s, int n) {
    if (static_cast<int>(s.occupancy.size()) != n)
        throw std::invalid_argument("schedule: " + std::to_string(s.occupancy.size()) +
                                    " occupancy rows for " + std::to_string(n) +
                                    " agents");
    if (s.occupancy.empty()) return;
    const size_t len = s.occupancy.front().size();
    if (len == 0) throw std::invalid_argument("schedule: empty occupancy row");
    for (const auto& row : s.occupancy)
        if (row.size() != len)
            throw std::invalid_argument("schedule: ragged occupancy rows");
}

// last step with movement; 0 for a stationary agent
size_t last_move(const std::vector<VertexId>& row) {
    for (size_t t = row.size() - 1; t > 0; --t)
        if (row[t] != row[t - 1]) return t;
    return 0;
}

} // namespace

const char* to_string(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::wrong_start: return "wrong-start";
    case Violation::Kind::wrong_goal_set: return "wrong-goal-set";
    case Violation::Kind::non_adjacent_move: return "non-adjacent-move";
    case Violation::Kind::meet: return "meet";
    case Violation::Kind::head_on: return "head-on";
    case Violation::Kind::capacity_exceeded: return "capacity-exceeded";
    case Violation::Kind::bound_exceeded: return "bound-exceeded";
    case Violation::Kind::wait_profile: return "wait-profile";
    }
    return "unknown";
}

std::vector<Violation> check_feasible(const Schedule& s, const Instance& inst) {
    const int n = inst.agent_count();
    require_rectangular(s, n);
    const Graph& g = inst.graph;
    std::vector<Violation> out;

    for (int i = 0; i < n; ++i) {
        const auto& row = s.occupancy[i];
        if (row[0] != inst.starts[i])
            out.push_back({Violation::Kind::wrong_start, 0, {i},
                           {row[0]}, agent_str(i) + " starts at " +
                           std::to_string(row[0]) + ", expected " +
                           std::to_string(inst.starts[i])});
        for (size_t t = 0; t + 1 < row.size(); ++t) {
            if (row[t] == row[t + 1]) continue;
            if (g.edge_between(row[t], row[t + 1]) < 0)
                out.push_back({Violation::Kind::non_adjacent_move,
                               static_cast<long long>(t), {i},
                               {row[t], row[t + 1]},
                               agent_str(i) + " jumps " + std::to_string(row[t]) +
                               " -> " + std::to_string(row[t + 1])});
        }
    }

    std::vector<VertexId> finals, goals = inst.goals;
    for (const auto& row : s.occupancy) finals.push_back(row.back());
    std::sort(finals.begin(), finals.end());
    std::sort(goals.begin(), goals.end());
    if (finals != goals)
        out.push_back({Violation::Kind::wrong_goal_set,
                       static_cast<long long>(s.occupancy.front().size()) - 1,
                       {}, finals, "final vertices are not the goal set"});
    return out;
}

std::vector<Violation> check_collisions(const Schedule& s) {
    std::vector<Violation> out;
    if (s.occupancy.empty()) return out;
    const int n = static_cast<int>(s.occupancy.size());
    const size_t len = s.occupancy.front().size();

    for (size_t t = 0; t < len; ++t) {
        std::map<VertexId, int> seen;
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = seen.emplace(s.occupancy[i][t], i);
            if (!fresh)
                out.push_back({Violation::Kind::meet, static_cast<long long>(t),
                               {it->second, i}, {s.occupancy[i][t]},
                               "both at vertex " + std::to_string(s.occupancy[i][t])});
        }
    }
    for (size_t t = 0; t + 1 < len; ++t) {
        std::map<std::pair<VertexId, VertexId>, int> moves;
        for (int i = 0; i < n; ++i) {
            const VertexId a = s.occupancy[i][t], b = s.occupancy[i][t + 1];
            if (a != b) moves.emplace(std::make_pair(a, b), i);
        }
        for (const auto& [mv, i] : moves) {
            auto rev = moves.find({mv.second, mv.first});
            if (rev != moves.end() && rev->second > i)
                out.push_back({Violation::Kind::head_on, static_cast<long long>(t),
                               {i, rev->second}, {mv.first, mv.second},
                               "swap across edge " + std::to_string(mv.first) + "-" +
                               std::to_string(mv.second)});
        }
    }
    return out;
}

BoundsReport check_bounds(const Schedule& s, const Instance& inst) {
    require_rectangular(s, inst.agent_count());
    BoundsReport rep;
    rep.makespan = makespan(s);
    rep.ell = max_start_goal_distance(inst);
    rep.bound = inst.agent_count() + rep.ell - 1;
    rep.total_moves = total_moves(s);
    if (rep.makespan > rep.bound)
        rep.violations.push_back({Violation::Kind::bound_exceeded, rep.makespan,
                                  {}, {}, "makespan " + std::to_string(rep.makespan) +
                                  " > n + ell - 1 = " + std::to_string(rep.bound)});
    if (inst.agent_count() <= 8) {
        rep.oracle_cost = brute_force_min_matching(inst).cost;
        if (rep.total_moves != *rep.oracle_cost)
            rep.violations.push_back({Violation::Kind::bound_exceeded, -1, {}, {},
                                      "total moves " + std::to_string(rep.total_moves) +
                                      " != optimal matching cost " +
                                      std::to_string(*rep.oracle_cost)});
    }
    return rep;
}

std::vector<Violation> check_wait_profile(const Schedule& s,
                                          const std::vector<Cluster>& clusters) {
    std::vector<Violation> out;
    std::vector<std::pair<long long, int>> waits; // (wait count, agent)
    for (const Cluster& c : clusters) {
        waits.clear();
        for (int i : c.paths) {
            const auto& row = s.occupancy.at(i);
            const size_t arrive = last_move(row);
            long long w = 0;
            for (size_t t = 0; t < arrive; ++t)
                if (row[t] == row[t + 1]) ++w;
            waits.emplace_back(w, i);
        }
        std::sort(waits.begin(), waits.end());
        for (size_t i = 0; i < waits.size(); ++i)
            if (waits[i].first > static_cast<long long>(i))
                out.push_back({Violation::Kind::wait_profile, -1, {waits[i].second},
                               {}, agent_str(waits[i].second) + " waited " +
                               std::to_string(waits[i].first) + " steps, rank " +
                               std::to_string(i + 1) + " allows " + std::to_string(i)});
    }
    return out;
}

std::vector<Violation> check_all(const Schedule& s, const Instance& inst) {
    std::vector<Violation> out = check_feasible(s, inst);
    auto coll = check_collisions(s);
    out.insert(out.end(), coll.begin(), coll.end());
    auto bounds = check_bounds(s, inst);
    out.insert(out.end(), bounds.violations.begin(), bounds.violations.end());
    return out;
}

FixtureRun six_agent_grid_fixture() {
    // coordinates (x, y) per agent for t = 0..8 on the 7-wide, 6-tall grid
    static constexpr int table[6][9][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {6, 1}, {6, 1}},
        {{0, 1}, {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {6, 0}},
        {{0, 2}, {1, 2}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {6, 2}},
        {{0, 3}, {1, 3}, {1, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 4}, {5, 4}, {6, 4}},
        {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 4}, {5, 4}, {6, 4}, {6, 5}, {6, 5}},
        {{0, 5}, {1, 5}, {2, 5}, {2, 4}, {3, 4}, {4, 4}, {5, 4}, {6, 4}, {6, 3}},
    };
    auto id = [](int x, int y) { return y * 7 + x; };

    Graph g = grid_with_holes(7, 6);
    std::vector<VertexId> starts, goals;
    for (int y = 0; y < 6; ++y) {
        starts.push_back(id(0, y));
        goals.push_back(id(6, y));
    }
    FixtureRun run{make_instance(std::move(g), starts, goals), {}};
    for (const auto& agent : table) {
        std::vector<VertexId> row;
        for (const auto& cell : agent) row.push_back(id(cell[0], cell[1]));
        run.schedule.occupancy.push_back(std::move(row));
    }
    return run;
}

std::vector<Violation> check_timed(const TimedSchedule& ts, const Instance& inst) {
    const Graph& g = inst.graph;
    const int n = inst.agent_count();
    if (static_cast<int>(ts.agents.size()) != n)
        throw std::invalid_argument("timed schedule: " +
                                    std::to_string(ts.agents.size()) +
                                    " agents, instance has " + std::to_string(n));
    std::vector<Violation> out;

    struct Dwell {
        VertexId v;
        long long from, to;
        int agent;
    };
    std::vector<Dwell> dwells;
    std::map<int, std::vector<std::pair<const EdgeCrossing*, int>>> by_edge;
    constexpr long long kForever = std::numeric_limits<long long>::max() / 2;

    for (int i = 0; i < n; ++i) {
        const TimedAgent& a = ts.agents[i];
        if (a.arrivals.empty() || a.crossings.size() + 1 != a.arrivals.size())
            throw std::invalid_argument("timed schedule: agent " + std::to_string(i) +
                                        " has inconsistent arrival/crossing lists");
        if (a.arrivals.front().t != 0 || a.completion != a.arrivals.back().t)
            throw std::invalid_argument("timed schedule: agent " + std::to_string(i) +
                                        " has inconsistent time stamps");
        if (a.arrivals.front().vertex != inst.starts[i])
            out.push_back({Violation::Kind::wrong_start, 0, {i},
                           {a.arrivals.front().vertex},
                           agent_str(i) + " starts at " +
                           std::to_string(a.arrivals.front().vertex) + ", expected " +
                           std::to_string(inst.starts[i])});
        for (size_t k = 0; k < a.crossings.size(); ++k) {
            const EdgeCrossing& c = a.crossings[k];
            if (c.from != a.arrivals[k].vertex || c.to != a.arrivals[k + 1].vertex ||
                c.exit != a.arrivals[k + 1].t || c.enter < a.arrivals[k].t)
                throw std::invalid_argument("timed schedule: agent " +
                                            std::to_string(i) + " crossing " +
                                            std::to_string(k) +
                                            " does not chain with its arrivals");
            const int e = g.edge_between(c.from, c.to);
            if (e < 0) {
                out.push_back({Violation::Kind::non_adjacent_move, c.enter, {i},
                               {c.from, c.to},
                               agent_str(i) + " crosses missing edge " +
                               std::to_string(c.from) + "-" + std::to_string(c.to)});
                continue;
            }
            const Edge& edge = g.edges()[e];
            const long long dur = c.exit - c.enter;
            if (dur < edge.length || (edge.capacity == 1 && dur != edge.length))
                out.push_back({Violation::Kind::non_adjacent_move, c.enter, {i},
                               {c.from, c.to},
                               agent_str(i) + " crosses length-" +
                               std::to_string(edge.length) + " edge in " +
                               std::to_string(dur) + " steps"});
            by_edge[e].emplace_back(&c, i);
            dwells.push_back({a.arrivals[k].vertex, a.arrivals[k].t, c.enter, i});
        }
        dwells.push_back({a.arrivals.back().vertex, a.arrivals.back().t, kForever, i});
    }

    // vertex meets: closed dwell intervals at one vertex may not intersect
    std::sort(dwells.begin(), dwells.end(), [](const Dwell& a, const Dwell& b) {
        return std::tie(a.v, a.from, a.agent) < std::tie(b.v, b.from, b.agent);
    });
    for (size_t i = 0; i < dwells.size(); ++i)
        for (size_t j = i + 1; j < dwells.size() && dwells[j].v == dwells[i].v; ++j) {
            if (dwells[i].agent == dwells[j].agent) continue;
            const long long from = std::max(dwells[i].from, dwells[j].from);
            if (from <= std::min(dwells[i].to, dwells[j].to))
                out.push_back({Violation::Kind::meet, from,
                               {std::min(dwells[i].agent, dwells[j].agent),
                                std::max(dwells[i].agent, dwells[j].agent)},
                               {dwells[i].v},
                               "both at vertex " + std::to_string(dwells[i].v)});
        }

    // per-edge occupancy over open (enter, exit) intervals, plus head-ons
    for (auto& [e, list] : by_edge) {
        const Edge& edge = g.edges()[e];
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                const EdgeCrossing& a = *list[i].first;
                const EdgeCrossing& b = *list[j].first;
                if (a.from != b.from &&
                    std::max(a.enter, b.enter) < std::min(a.exit, b.exit))
                    out.push_back({Violation::Kind::head_on,
                                   std::max(a.enter, b.enter),
                                   {list[i].second, list[j].second},
                                   {edge.u, edge.v},
                                   "opposite crossings of edge " +
                                   std::to_string(edge.u) + "-" +
                                   std::to_string(edge.v) + " overlap"});
            }
        std::vector<std::pair<long long, int>> events; // (time, +1/-1)
        for (const auto& [c, agent] : list) {
            events.emplace_back(c->enter, 1);
            events.emplace_back(c->exit, -1);
        }
        std::sort(events.begin(), events.end()); // exits (-1) before enters at ties
        int load = 0;
        for (const auto& [t, delta] : events) {
            load += delta;
            if (load > edge.capacity) {
                out.push_back({Violation::Kind::capacity_exceeded, t, {},
                               {edge.u, edge.v},
                               std::to_string(load) + " agents on capacity-" +
                               std::to_string(edge.capacity) + " edge " +
                               std::to_string(edge.u) + "-" + std::to_string(edge.v)});
                break;
            }
        }
    }

    std::vector<VertexId> finals, goals = inst.goals;
    for (const TimedAgent& a : ts.agents) finals.push_back(a.arrivals.back().vertex);
    std::sort(finals.begin(), finals.end());
    std::sort(goals.begin(), goals.end());
    if (finals != goals)
        out.push_back({Violation::Kind::wrong_goal_set, ts.makespan, {}, finals,
                       "final vertices are not the goal set"});

    if (ts.makespan > ts.bounds.bound)
        out.push_back({Violation::Kind::bound_exceeded, ts.makespan, {}, {},
                       "makespan " + std::to_string(ts.makespan) + " > bound " +
                       std::to_string(ts.bounds.bound)});
    return out;
}

} // namespace formation
