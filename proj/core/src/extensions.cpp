#include "formation/extensions.hpp"

#include "formation/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace formation {

namespace {

// Plan -> order -> macro rounds on the given instance. Every round lasts one
// slot of the longest edge length; movers arrive mid-slot at their true
// instants and everyone else holds position until the next slot boundary.
TimedSchedule run_macro(const Instance& inst) {
    const Graph& g = inst.graph;
    const int n = inst.agent_count();

    PathSet q = plan_shortest_path_set(inst);
    auto clusters = find_clusters(q);
    auto dvals = build_distance_values(g, q, clusters);

    const long long d_max = g.max_edge_length();

    TimedSchedule ts;
    ts.agents.resize(n);
    long long max_hops = 0;
    for (int i = 0; i < n; ++i) {
        ts.agents[i].arrivals.push_back({q.paths[i].head(), 0});
        max_hops = std::max(max_hops,
                            static_cast<long long>(q.paths[i].vertices.size()) - 1);
    }

    detail::FrontierEngine engine(g, q, dvals);
    while (!engine.done()) {
        auto round = engine.step();
        const long long enter = static_cast<long long>(engine.rounds() - 1) * d_max;
        for (const auto& mv : round.moves) {
            const long long exit = enter + g.edges()[mv.edge].length;
            ts.agents[mv.agent].crossings.push_back({mv.from, mv.to, enter, exit});
            ts.agents[mv.agent].arrivals.push_back({mv.to, exit});
        }
        ts.switches.insert(ts.switches.end(), round.switches.begin(),
                           round.switches.end());
    }
    for (auto& a : ts.agents) {
        a.completion = a.arrivals.back().t;
        ts.makespan = std::max(ts.makespan, a.completion);
    }
    ts.bounds.ell = max_start_goal_distance(inst);
    ts.bounds.d_max = d_max;
    ts.bounds.ell_hat = max_hops * d_max;
    ts.bounds.bound = ts.bounds.ell_hat + static_cast<long long>(n - 1) * d_max;
    return ts;
}

// Collapses a run on a chain-expanded graph back onto the original one:
// fresh intermediate vertices vanish, and each maximal run of segment
// crossings merges into a single crossing of the original edge (junction
// dwells are absorbed into the crossing interval).
TimedSchedule remap_to_original(TimedSchedule inner, int original_count) {
    TimedSchedule out;
    out.switches = std::move(inner.switches);
    out.bounds = inner.bounds;
    out.agents.resize(inner.agents.size());
    for (size_t i = 0; i < inner.agents.size(); ++i) {
        const auto& src = inner.agents[i];
        auto& dst = out.agents[i];
        dst.arrivals.push_back(src.arrivals.front());
        VertexId open_from = -1;
        long long open_enter = 0;
        for (const auto& c : src.crossings) {
            if (c.from < original_count) {
                open_from = c.from;
                open_enter = c.enter;
            }
            if (c.to < original_count) {
                dst.crossings.push_back({open_from, c.to, open_enter, c.exit});
                dst.arrivals.push_back({c.to, c.exit});
            }
        }
        dst.completion = dst.arrivals.back().t;
        out.makespan = std::max(out.makespan, dst.completion);
    }
    return out;
}

} // namespace

TimedSchedule schedule_full_capacity(const Instance& inst) {
    if (!inst.graph.full_capacities())
        throw std::invalid_argument(
            "schedule_full_capacity: needs c(e) == d(e) on every edge");
    SubdividedGraph sub = subdivide(inst.graph);
    TimedSchedule ts = remap_to_original(
        run_macro({sub.graph, inst.starts, inst.goals}), sub.original_vertex_count);
    if (!sub.fresh.empty()) {
        ts.bounds.original_ell = ts.bounds.ell; // subdivision preserves distances
        ts.bounds.original_d_max = inst.graph.max_edge_length();
    }
    return ts;
}

TimedSchedule schedule_unit_capacity(const Instance& inst) {
    if (!inst.graph.unit_capacities())
        throw std::invalid_argument(
            "schedule_unit_capacity: needs c(e) == 1 on every edge");
    return run_macro(inst);
}

TimedSchedule schedule_mixed(const Instance& inst) {
    CapacityChainGraph cc = capacity_chain(inst.graph);
    TimedSchedule ts = remap_to_original(
        run_macro({cc.graph, inst.starts, inst.goals}), cc.original_vertex_count);
    if (!cc.fresh.empty()) {
        // the guarantee lives in the chain metric; report original numbers too
        ts.bounds.original_ell = max_start_goal_distance(inst);
        ts.bounds.original_d_max = inst.graph.max_edge_length();
    }
    return ts;
}

std::vector<std::vector<VertexId>> unit_occupancy(const TimedSchedule& ts) {
    std::vector<std::vector<VertexId>> rows;
    rows.reserve(ts.agents.size());
    for (const auto& a : ts.agents) {
        for (const auto& c : a.crossings)
            if (c.exit != c.enter + 1)
                throw std::invalid_argument(
                    "unit_occupancy: crossing takes " +
                    std::to_string(c.exit - c.enter) + " steps, expected 1");
        std::vector<VertexId> row(static_cast<size_t>(ts.makespan) + 1, -1);
        for (size_t k = 0; k < a.arrivals.size(); ++k) {
            const long long from = a.arrivals[k].t;
            const long long to =
                k + 1 < a.arrivals.size() ? a.crossings[k].enter : ts.makespan;
            for (long long t = from; t <= to; ++t)
                row[static_cast<size_t>(t)] = a.arrivals[k].vertex;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SearchResult min_completion_exhaustive(const Instance& inst, long long horizon,
                                       long long state_cap) {
    const Graph& g = inst.graph;
    if (!g.unit_capacities())
        throw std::invalid_argument("min_completion_exhaustive: needs unit capacities");
    const int n = inst.agent_count();
    const int V = g.vertex_count();
    const int E = static_cast<int>(g.edges().size());
    if (V > 64 || E > 64)
        throw std::invalid_argument("min_completion_exhaustive: graph too large");

    // agent state codes: at a vertex, or (edge, direction, remaining) mid-edge
    std::vector<int> base(E);
    int S = V;
    for (int e = 0; e < E; ++e) {
        base[e] = S;
        S += 2 * (g.edges()[e].length - 1);
    }
    std::vector<int> code_edge(S, -1);
    std::vector<int> code_next(S, -1); // successor code of a mid-edge state
    for (int e = 0; e < E; ++e) {
        const int d = g.edges()[e].length;
        for (int dir = 0; dir < 2; ++dir) {
            const VertexId head = dir == 0 ? g.edges()[e].v : g.edges()[e].u;
            for (int r = 1; r < d; ++r) {
                const int code = base[e] + dir * (d - 1) + (r - 1);
                code_edge[code] = e;
                code_next[code] = r == 1 ? head : code - 1;
            }
        }
    }

    uint64_t radix = 1;
    for (int i = 0; i < n; ++i) {
        if (radix > UINT64_MAX / static_cast<uint64_t>(S))
            throw std::invalid_argument("min_completion_exhaustive: too many agents");
        radix *= static_cast<uint64_t>(S);
    }

    // shortest-path discipline: an agent may step from v to w only when that
    // keeps it on some shortest path from its start to one of the goals
    std::vector<std::vector<long long>> ds(n);
    std::vector<std::vector<long long>> dgoal(n);
    for (int a = 0; a < n; ++a) ds[a] = distances_from(g, inst.starts[a]);
    for (int j = 0; j < n; ++j) dgoal[j] = distances_from(g, inst.goals[j]);

    struct Option {
        int next;   // agent state code at t+1
        int enters; // edge whose crossing starts this step, -1 if none
    };
    std::vector<std::vector<std::vector<Option>>> options(
        n, std::vector<std::vector<Option>>(S));
    for (int a = 0; a < n; ++a) {
        for (VertexId v = 0; v < V; ++v) {
            auto& opts = options[a][v];
            opts.push_back({v, -1}); // wait
            for (auto [w, e] : g.neighbors(v)) {
                const int len = g.edges()[e].length;
                if (ds[a][v] + len != ds[a][w]) continue;
                bool on_some = false;
                for (int j = 0; j < n && !on_some; ++j)
                    on_some = ds[a][w] + dgoal[j][w] == ds[a][inst.goals[j]];
                if (!on_some) continue;
                const int dir = g.edges()[e].u == v ? 0 : 1;
                const int next = len == 1 ? w : base[e] + dir * (len - 1) + (len - 2);
                opts.push_back({next, e});
            }
        }
        for (int code = V; code < S; ++code)
            options[a][code].push_back({code_next[code], -1}); // keep crossing
    }

    auto encode = [&](const std::vector<int>& codes) {
        uint64_t key = 0;
        for (int i = n - 1; i >= 0; --i)
            key = key * static_cast<uint64_t>(S) + static_cast<uint64_t>(codes[i]);
        return key;
    };
    auto decode = [&](uint64_t key, std::vector<int>& codes) {
        for (int i = 0; i < n; ++i) {
            codes[i] = static_cast<int>(key % static_cast<uint64_t>(S));
            key /= static_cast<uint64_t>(S);
        }
    };

    uint64_t goal_mask = 0;
    for (VertexId v : inst.goals) goal_mask |= uint64_t{1} << v;

    std::vector<int> codes(n), next_codes(n);
    std::unordered_set<uint64_t> visited;
    std::vector<uint64_t> frontier;
    for (int a = 0; a < n; ++a) codes[a] = inst.starts[a];
    frontier.push_back(encode(codes));
    visited.insert(frontier.back());
    long long states = 1;

    for (long long t = 0;; ++t) {
        for (uint64_t key : frontier) {
            decode(key, codes);
            uint64_t vmask = 0;
            bool all_at_vertices = true;
            for (int a = 0; a < n; ++a) {
                if (codes[a] < V)
                    vmask |= uint64_t{1} << codes[a];
                else
                    all_at_vertices = false;
            }
            if (all_at_vertices && vmask == goal_mask) return {t, states};
        }
        if (t == horizon) break;

        std::vector<uint64_t> next_frontier;
        for (uint64_t key : frontier) {
            decode(key, codes);
            uint64_t busy_now = 0; // edges being crossed at time t
            for (int a = 0; a < n; ++a)
                if (codes[a] >= V) busy_now |= uint64_t{1} << code_edge[codes[a]];

            // enumerate joint moves agent by agent with incremental conflicts
            auto dfs = [&](auto&& self, int a, uint64_t vmask, uint64_t emask,
                           uint64_t entered) -> void {
                if (a == n) {
                    const uint64_t nk = encode(next_codes);
                    if (visited.insert(nk).second) {
                        if (++states > state_cap)
                            throw std::runtime_error(
                                "min_completion_exhaustive: state cap of " +
                                std::to_string(state_cap) + " states exceeded");
                        next_frontier.push_back(nk);
                    }
                    return;
                }
                for (const Option& o : options[a][codes[a]]) {
                    if (o.enters >= 0) {
                        const uint64_t bit = uint64_t{1} << o.enters;
                        if ((busy_now | entered) & bit) continue;
                    }
                    uint64_t nv = vmask, ne = emask;
                    if (o.next < V) {
                        const uint64_t bit = uint64_t{1} << o.next;
                        if (nv & bit) continue;
                        nv |= bit;
                    } else {
                        const uint64_t bit = uint64_t{1} << code_edge[o.next];
                        if (ne & bit) continue;
                        ne |= bit;
                    }
                    next_codes[a] = o.next;
                    self(self, a + 1, nv, ne,
                         entered | (o.enters >= 0 ? uint64_t{1} << o.enters : 0));
                }
            };
            dfs(dfs, 0, 0, 0, 0);
        }
        frontier = std::move(next_frontier);
        if (frontier.empty()) break;
    }
    return {-1, states};
}

long long lower_bound_certificate(int n, int path_edges, int edge_len) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("lower_bound_certificate: n must be 1..3");
    const int vertices = 2 * n + path_edges + 1;
    if (vertices > 12)
        throw std::invalid_argument("lower_bound_certificate: " +
                                    std::to_string(vertices) +
                                    " vertices, limit is 12");
    Instance inst = star_path_star(n, path_edges, edge_len);
    const long long ell = static_cast<long long>(path_edges + 2) * edge_len;
    const long long bound = ell + static_cast<long long>(n - 1) * edge_len;
    SearchResult res = min_completion_exhaustive(inst, bound);
    if (res.min_completion != bound)
        throw std::logic_error("lower_bound_certificate: expected optimum " +
                               std::to_string(bound) + ", search found " +
                               std::to_string(res.min_completion));
    return res.min_completion;
}

} // namespace formation
