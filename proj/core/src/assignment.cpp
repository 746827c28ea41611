#include "formation/assignment.hpp"

#include "formation/hungarian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace formation {

namespace {

// Per-goal distance maps: dist[j][v] = shortest distance from v to goals[j].
std::vector<std::vector<long long>> goal_distances(const Instance& inst) {
    std::vector<std::vector<long long>> dist;
    dist.reserve(inst.goals.size());
    for (VertexId g : inst.goals)
        dist.push_back(distances_from(inst.graph, g));
    return dist;
}

std::vector<std::vector<long long>> cost_matrix(const Instance& inst,
                                                const std::vector<std::vector<long long>>& gd) {
    const int n = inst.agent_count();
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cost[i][j] = gd[j][inst.starts[i]];
    return cost;
}

// Lexicographically smallest optimal assignment: fix agents in order, taking
// the smallest goal index whose forced completion still reaches the optimum.
std::vector<int> lexicographic_min_assignment(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    long long remaining = min_cost_assignment(cost).cost;
    std::vector<int> chosen(n, -1);
    std::vector<int> free_goals(n);
    std::iota(free_goals.begin(), free_goals.end(), 0);
    std::vector<int> free_agents(n);
    std::iota(free_agents.begin(), free_agents.end(), 0);

    for (int i = 0; i < n; ++i) {
        free_agents.erase(free_agents.begin());
        for (size_t gi = 0; gi < free_goals.size(); ++gi) {
            int j = free_goals[gi];
            long long rest = 0;
            if (!free_agents.empty()) {
                std::vector<std::vector<long long>> sub;
                sub.reserve(free_agents.size());
                for (int a : free_agents) {
                    std::vector<long long> row;
                    row.reserve(free_goals.size() - 1);
                    for (int b : free_goals)
                        if (b != j)
                            row.push_back(cost[a][b]);
                    sub.push_back(std::move(row));
                }
                rest = min_cost_assignment(sub).cost;
            }
            if (cost[i][j] + rest == remaining) {
                chosen[i] = j;
                remaining -= cost[i][j];
                free_goals.erase(free_goals.begin() + gi);
                break;
            }
        }
    }
    return chosen;
}

} // namespace

PathSet plan_shortest_path_set(const Instance& inst) {
    const int n = inst.agent_count();
    auto gd = goal_distances(inst);
    std::vector<int> assign = lexicographic_min_assignment(cost_matrix(inst, gd));

    PathSet out;
    out.paths.reserve(n);
    for (int i = 0; i < n; ++i) {
        UnscheduledPath p;
        p.agent = i;
        p.vertices = shortest_path(inst.graph, inst.starts[i], inst.goals[assign[i]]);
        out.total_length += gd[assign[i]][inst.starts[i]];
        out.paths.push_back(std::move(p));
    }
    return out;
}

BruteForceMatching brute_force_assignment(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n > 8)
        throw std::invalid_argument("brute_force_assignment: n > 8");
    if (n == 0)
        throw std::invalid_argument("brute_force_assignment: empty matrix");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BruteForceMatching best;
    best.cost = -1;
    do {
        long long total = 0;
        for (int i = 0; i < n; ++i)
            total += cost[i][perm[i]];
        // next_permutation enumerates lexicographically, so strict improvement
        // keeps the lexicographically smallest argmin
        if (best.cost < 0 || total < best.cost) {
            best.cost = total;
            best.assignment = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

BruteForceMatching brute_force_min_matching(const Instance& inst) {
    return brute_force_assignment(cost_matrix(inst, goal_distances(inst)));
}

std::optional<OrientationConflict>
orient_edges(const PathSet& q,
             std::map<std::pair<VertexId, VertexId>, EdgeOrientation>& out) {
    for (const UnscheduledPath& p : q.paths) {
        for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
            VertexId a = p.vertices[k], b = p.vertices[k + 1];
            auto key = std::minmax(a, b);
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(key, EdgeOrientation{a, b, p.agent});
            } else if (it->second.from != a) {
                return OrientationConflict{key.first, key.second, it->second.path, p.agent};
            }
        }
    }
    return std::nullopt;
}

PathSetReport verify_properties(const Graph& g, const PathSet& q, const Instance& inst) {
    PathSetReport rep;
    auto note = [&rep](std::string check, std::string detail) {
        rep.issues.push_back({std::move(check), std::move(detail)});
    };

    const int n = static_cast<int>(q.paths.size());
    if (n != inst.agent_count()) {
        note("endpoints", "path count " + std::to_string(n) + " != agent count " +
                              std::to_string(inst.agent_count()));
        return rep;
    }

    std::set<VertexId> heads, tails;
    std::set<VertexId> starts(inst.starts.begin(), inst.starts.end());
    std::set<VertexId> goals(inst.goals.begin(), inst.goals.end());
    for (const UnscheduledPath& p : q.paths) {
        if (p.vertices.empty()) {
            note("endpoints", "agent " + std::to_string(p.agent) + ": empty path");
            return rep;
        }
        if (!heads.insert(p.head()).second)
            note("endpoints", "duplicate head " + std::to_string(p.head()));
        if (!tails.insert(p.tail()).second)
            note("endpoints", "duplicate tail " + std::to_string(p.tail()));
        if (!starts.count(p.head()))
            note("endpoints", "agent " + std::to_string(p.agent) + ": head " +
                                  std::to_string(p.head()) + " is not a start");
        if (!goals.count(p.tail()))
            note("endpoints", "agent " + std::to_string(p.agent) + ": tail " +
                                  std::to_string(p.tail()) + " is not a goal");
    }

    long long total = 0;
    for (const UnscheduledPath& p : q.paths) {
        long long len;
        try {
            len = path_length(g, p.vertices);
        } catch (const std::invalid_argument& e) {
            note("shortest", "agent " + std::to_string(p.agent) + ": " + e.what());
            continue;
        }
        total += len;
        long long best = shortest_dist(g, p.head(), p.tail());
        if (len != best)
            note("shortest", "agent " + std::to_string(p.agent) + ": length " +
                                 std::to_string(len) + " exceeds distance " +
                                 std::to_string(best));
    }
    if (total != q.total_length)
        note("total", "stored total_length " + std::to_string(q.total_length) +
                          " != recomputed " + std::to_string(total));

    std::map<std::pair<VertexId, VertexId>, EdgeOrientation> orient;
    if (auto conflict = orient_edges(q, orient))
        note("orientation", "edge {" + std::to_string(conflict->u) + "," +
                                std::to_string(conflict->v) + "} used in both directions by agents " +
                                std::to_string(conflict->path_a) + " and " +
                                std::to_string(conflict->path_b));

    if (n <= 8) {
        rep.total_checked = true;
        long long best = brute_force_min_matching(inst).cost;
        if (total != best)
            note("total", "total length " + std::to_string(total) +
                              " is not minimal (oracle: " + std::to_string(best) + ")");
    }
    return rep;
}

} // namespace formation
