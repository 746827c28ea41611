#include "formation/scheduler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace formation {

int makespan(const Schedule& s) {
    int last = 0;
    for (const auto& row : s.occupancy)
        for (size_t t = 1; t < row.size(); ++t)
            if (row[t] != row[t - 1])
                last = std::max(last, static_cast<int>(t));
    return last;
}

long long total_moves(const Schedule& s) {
    long long moves = 0;
    for (const auto& row : s.occupancy)
        for (size_t t = 1; t < row.size(); ++t)
            if (row[t] != row[t - 1])
                ++moves;
    return moves;
}

namespace detail {

FrontierEngine::FrontierEngine(const Graph& g, const PathSet& q,
                               const DistanceValues& dvals)
    : g_(g), dvals_(dvals) {
    for (const UnscheduledPath& p : q.paths) {
        if (p.vertices.size() < 2)
            throw std::invalid_argument("schedule: agent " + std::to_string(p.agent) +
                                        " has a trivial path");
        paths_.push_back(p.vertices);
    }
    index_.assign(paths_.size(), 0);
    resting_.assign(paths_.size(), 0);
}

bool FrontierEngine::finished(int agent) const {
    return index_[agent] + 1 == paths_[agent].size();
}

bool FrontierEngine::done() const {
    for (size_t i = 0; i < paths_.size(); ++i)
        if (!resting_[i])
            return false;
    return true;
}

// After `agent` is one step from (or just arrived at) its goal vertex w,
// hand its onward journey to... or rather take over the journey of a pending
// path through w: the agent adopts that path's remainder beyond w and the
// other agent's path is cut to end at w. Among several pending paths the one
// with the smallest value gap to w wins, ties to the lower id.
void FrontierEngine::try_switch(int agent, std::vector<GoalSwitch>& out) {
    const VertexId w = paths_[agent].back();
    int best = -1;
    long long best_gap = 0;
    size_t best_at = 0;
    for (size_t j = 0; j < paths_.size(); ++j) {
        if (static_cast<int>(j) == agent || resting_[j])
            continue;
        auto it = std::find(paths_[j].begin() + index_[j] + 1, paths_[j].end(), w);
        if (it == paths_[j].end())
            continue;
        size_t at = it - paths_[j].begin();
        long long gap = dvals_.value_for_path(static_cast<int>(j), w) -
                        dvals_.value_for_path(static_cast<int>(j), position(static_cast<int>(j)));
        if (best < 0 || gap < best_gap) {
            best = static_cast<int>(j);
            best_gap = gap;
            best_at = at;
        }
    }
    if (best < 0)
        return;
    // splice: `agent` continues along j's remainder, j now ends at w
    paths_[agent].insert(paths_[agent].end(), paths_[best].begin() + best_at + 1,
                         paths_[best].end());
    paths_[best].resize(best_at + 1);
    out.push_back({round_, agent, best});
}

FrontierEngine::Round FrontierEngine::step() {
    ++round_;
    Round rec;

    // resting agents hold their goals for the whole round
    std::map<VertexId, int> taken;
    for (size_t i = 0; i < paths_.size(); ++i)
        if (resting_[i])
            taken[position(static_cast<int>(i))] = static_cast<int>(i);

    // active agents in decreasing target value, ties to the lower id;
    // clusters are vertex-disjoint so grouping them first only fixes a
    // deterministic interleaving
    struct Entry {
        int cluster;
        long long value;
        int agent;
    };
    std::vector<Entry> order;
    for (size_t i = 0; i < paths_.size(); ++i) {
        if (resting_[i])
            continue;
        int agent = static_cast<int>(i);
        VertexId target = paths_[i][index_[i] + 1];
        order.push_back({dvals_.cluster_of_path[agent],
                         dvals_.value_for_path(agent, target), agent});
    }
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        if (a.cluster != b.cluster)
            return a.cluster < b.cluster;
        if (a.value != b.value)
            return a.value > b.value;
        return a.agent < b.agent;
    });

    for (const Entry& entry : order) {
        int agent = entry.agent;
        VertexId from = position(agent);
        VertexId target = paths_[agent][index_[agent] + 1];
        if (taken.count(target)) {
            taken[from] = agent; // stays put
            continue;
        }
        taken[target] = agent;
        ++index_[agent];
        rec.moves.push_back({agent, from, target, g_.edge_between(from, target)});
        if (finished(agent)) {
            // arrived at the goal; adopt a pending path through it if any,
            // otherwise come to rest
            size_t before = paths_[agent].size();
            try_switch(agent, rec.switches);
            if (paths_[agent].size() == before)
                resting_[agent] = 1;
        } else if (index_[agent] + 2 == paths_[agent].size()) {
            // frontier reached the goal vertex one step early
            try_switch(agent, rec.switches);
        }
    }

    if (rec.moves.empty())
        throw std::logic_error("scheduler: no agent can advance");
    return rec;
}

} // namespace detail

Schedule schedule_paths(const Graph& g, const PathSet& q, const DistanceValues& dvals) {
    if (!g.unit_lengths())
        throw std::invalid_argument("schedule_paths: graph must have unit edge lengths");
    detail::FrontierEngine engine(g, q, dvals);

    Schedule s;
    s.occupancy.resize(q.paths.size());
    for (size_t i = 0; i < q.paths.size(); ++i)
        s.occupancy[i].push_back(q.paths[i].head());

    while (!engine.done()) {
        detail::FrontierEngine::Round rec = engine.step();
        for (size_t i = 0; i < s.occupancy.size(); ++i)
            s.occupancy[i].push_back(engine.position(static_cast<int>(i)));
        s.switches.insert(s.switches.end(), rec.switches.begin(), rec.switches.end());
    }
    return s;
}

} // namespace formation
