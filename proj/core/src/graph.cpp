#include "formation/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace formation {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

} // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<Coord> coords)
    : vertex_count_(vertex_count), edges_(std::move(edges)), coords_(std::move(coords)) {
    if (vertex_count_ <= 0)
        fail("graph: vertex count must be positive, got " + std::to_string(vertex_count_));
    if (!coords_.empty() && static_cast<int>(coords_.size()) != vertex_count_)
        fail("graph: coords must be absent or given for every vertex");

    std::set<std::pair<VertexId, VertexId>> seen;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            fail(where + ": endpoint out of range");
        if (e.u == e.v)
            fail(where + ": self loop at vertex " + std::to_string(e.u));
        if (e.length < 1)
            fail(where + ": length must be >= 1, got " + std::to_string(e.length));
        if (e.capacity < 1 || e.capacity > e.length)
            fail(where + ": capacity " + std::to_string(e.capacity) +
                 " outside [1, length=" + std::to_string(e.length) + "]");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            fail(where + ": duplicate edge {" + std::to_string(e.u) + "," +
                 std::to_string(e.v) + "}");
        unit_lengths_ = unit_lengths_ && e.length == 1;
        unit_capacities_ = unit_capacities_ && e.capacity == 1;
        full_capacities_ = full_capacities_ && e.capacity == e.length;
        max_edge_length_ = std::max(max_edge_length_, e.length);
    }

    if (!coords_.empty()) {
        std::set<std::pair<int, int>> uniq;
        for (int v = 0; v < vertex_count_; ++v)
            if (!uniq.insert({coords_[v].x, coords_[v].y}).second)
                fail("vertices[" + std::to_string(v) + "]: duplicate coordinates (" +
                     std::to_string(coords_[v].x) + "," + std::to_string(coords_[v].y) + ")");
    }

    // CSR adjacency, neighbor lists sorted by id for deterministic traversal
    std::vector<int> degree(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    adj_offsets_.assign(vertex_count_ + 1, 0);
    for (int v = 0; v < vertex_count_; ++v)
        adj_offsets_[v + 1] = adj_offsets_[v] + degree[v];
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_[cursor[e.u]++] = {e.v, static_cast<int>(i)};
        adj_[cursor[e.v]++] = {e.u, static_cast<int>(i)};
    }
    for (int v = 0; v < vertex_count_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);

    // connectivity
    std::vector<char> reached(vertex_count_, 0);
    std::deque<VertexId> queue{0};
    reached[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (auto [w, ei] : neighbors(v)) {
            (void)ei;
            if (!reached[w]) {
                reached[w] = 1;
                ++count;
                queue.push_back(w);
            }
        }
    }
    if (count != vertex_count_)
        fail("graph: not connected (" + std::to_string(count) + " of " +
             std::to_string(vertex_count_) + " vertices reachable from 0)");
}

void Graph::check_vertex(VertexId v, const char* who) const {
    if (v < 0 || v >= vertex_count_)
        fail(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
}

std::span<const std::pair<VertexId, int>> Graph::neighbors(VertexId v) const {
    check_vertex(v, "neighbors");
    return {adj_.data() + adj_offsets_[v],
            static_cast<size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

Coord Graph::coord(VertexId v) const {
    check_vertex(v, "coord");
    if (coords_.empty())
        fail("coord: graph has no coordinates");
    return coords_[v];
}

int Graph::edge_between(VertexId u, VertexId v) const {
    check_vertex(u, "edge_between");
    check_vertex(v, "edge_between");
    for (auto [w, ei] : neighbors(u))
        if (w == v)
            return ei;
    return -1;
}

Instance make_instance(Graph graph, std::vector<VertexId> starts,
                       std::vector<VertexId> goals) {
    if (starts.empty())
        fail("starts: must contain at least one agent");
    if (starts.size() != goals.size())
        fail("goals: count " + std::to_string(goals.size()) +
             " does not match starts count " + std::to_string(starts.size()));
    std::set<VertexId> sset, gset;
    for (size_t i = 0; i < starts.size(); ++i) {
        if (starts[i] < 0 || starts[i] >= graph.vertex_count())
            fail("starts[" + std::to_string(i) + "]: vertex out of range");
        if (!sset.insert(starts[i]).second)
            fail("starts[" + std::to_string(i) + "]: duplicate vertex " +
                 std::to_string(starts[i]));
    }
    for (size_t i = 0; i < goals.size(); ++i) {
        if (goals[i] < 0 || goals[i] >= graph.vertex_count())
            fail("goals[" + std::to_string(i) + "]: vertex out of range");
        if (!gset.insert(goals[i]).second)
            fail("goals[" + std::to_string(i) + "]: duplicate vertex " +
                 std::to_string(goals[i]));
        if (sset.count(goals[i]))
            fail("goals[" + std::to_string(i) + "]: vertex " + std::to_string(goals[i]) +
                 " is also a start");
    }
    return Instance{std::move(graph), std::move(starts), std::move(goals)};
}

std::vector<long long> distances_from(const Graph& g, VertexId source) {
    if (source < 0 || source >= g.vertex_count())
        fail("distances_from: vertex " + std::to_string(source) + " out of range");
    constexpr long long kInf = std::numeric_limits<long long>::max();
    std::vector<long long> dist(g.vertex_count(), kInf);
    dist[source] = 0;
    if (g.unit_lengths()) {
        std::deque<VertexId> queue{source};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (auto [w, ei] : g.neighbors(v)) {
                (void)ei;
                if (dist[w] == kInf) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    } else {
        using Item = std::pair<long long, VertexId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        heap.push({0, source});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[v])
                continue;
            for (auto [w, ei] : g.neighbors(v)) {
                long long nd = d + g.edges()[ei].length;
                if (nd < dist[w]) {
                    dist[w] = nd;
                    heap.push({nd, w});
                }
            }
        }
    }
    return dist; // connected, so no kInf survives
}

long long shortest_dist(const Graph& g, VertexId u, VertexId v) {
    return distances_from(g, u)[v];
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId u, VertexId v) {
    std::vector<long long> to_target = distances_from(g, v);
    if (u < 0 || u >= g.vertex_count())
        fail("shortest_path: vertex " + std::to_string(u) + " out of range");
    std::vector<VertexId> path{u};
    VertexId at = u;
    // greedy smallest-id step that stays on a shortest path; neighbor lists
    // are id-sorted, so the first qualifying neighbor is the right one
    while (at != v) {
        for (auto [w, ei] : g.neighbors(at)) {
            if (to_target[at] == g.edges()[ei].length + to_target[w]) {
                path.push_back(w);
                at = w;
                break;
            }
        }
    }
    return path;
}

long long path_length(const Graph& g, const std::vector<VertexId>& path) {
    long long total = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int ei = g.edge_between(path[i], path[i + 1]);
        if (ei < 0)
            fail("path_length: vertices " + std::to_string(path[i]) + " and " +
                 std::to_string(path[i + 1]) + " are not adjacent");
        total += g.edges()[ei].length;
    }
    return total;
}

long long max_start_goal_distance(const Instance& inst) {
    long long best = 0;
    for (VertexId goal : inst.goals) {
        std::vector<long long> dist = distances_from(inst.graph, goal);
        for (VertexId start : inst.starts)
            best = std::max(best, dist[start]);
    }
    return best;
}

} // namespace formation
