#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace formation {

using VertexId = int;

struct Coord {
    int x = 0; // column, grows rightward
    int y = 0; // row, grows downward; (0,0) is top-left in grid fixtures

    friend bool operator==(const Coord&, const Coord&) = default;
};

// Undirected edge with integer length and capacity, 1 <= capacity <= length.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    int length = 1;
    int capacity = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Connected undirected simple graph over dense vertex ids 0..V-1.
// Immutable after construction; construction validates all invariants and
// throws std::invalid_argument with a field-level message on the first hit.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges,
          std::vector<Coord> coords = {});

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbor, edge index) pairs sorted by neighbor id
    std::span<const std::pair<VertexId, int>> neighbors(VertexId v) const;

    bool has_coords() const { return !coords_.empty(); }
    Coord coord(VertexId v) const;
    const std::vector<Coord>& coords() const { return coords_; }

    bool unit_lengths() const { return unit_lengths_; }
    bool unit_capacities() const { return unit_capacities_; }
    bool full_capacities() const { return full_capacities_; } // c(e) == d(e) everywhere
    int max_edge_length() const { return max_edge_length_; }

    // index into edges() or -1 when u and v are not adjacent
    int edge_between(VertexId u, VertexId v) const;

private:
    void check_vertex(VertexId v, const char* who) const;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Coord> coords_; // empty or one per vertex
    std::vector<int> adj_offsets_;
    std::vector<std::pair<VertexId, int>> adj_;
    bool unit_lengths_ = true;
    bool unit_capacities_ = true;
    bool full_capacities_ = true;
    int max_edge_length_ = 1;
};

// A formation problem: n agents, agent i starts at starts[i]; goals are an
// unordered target set (kept in file order for reproducible tie-breaking).
// starts and goals are disjoint and individually duplicate-free.
struct Instance {
    Graph graph;
    std::vector<VertexId> starts;
    std::vector<VertexId> goals;

    int agent_count() const { return static_cast<int>(starts.size()); }
};

// Validates the start/goal invariants, throwing std::invalid_argument.
Instance make_instance(Graph graph, std::vector<VertexId> starts,
                       std::vector<VertexId> goals);

// Shortest path distance; breadth-first search on unit-length graphs,
// label-setting (binary-heap Dijkstra) otherwise.
std::vector<long long> distances_from(const Graph& g, VertexId source);
long long shortest_dist(const Graph& g, VertexId u, VertexId v);

// Deterministic representative: the lexicographically smallest vertex-id
// sequence among all shortest u-v paths.
std::vector<VertexId> shortest_path(const Graph& g, VertexId u, VertexId v);

// Sum of edge lengths along a vertex sequence; throws if consecutive
// vertices are not adjacent.
long long path_length(const Graph& g, const std::vector<VertexId>& path);

// Largest start-to-goal shortest distance over all start/goal pairs; the
// makespan guarantee for n agents is n + this - 1.
long long max_start_goal_distance(const Instance& inst);

} // namespace formation
