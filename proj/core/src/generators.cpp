#include "formation/generators.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace formation {

Graph grid_with_holes(int width, int height, const std::vector<Coord>& holes) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("grid: width and height must be >= 1");
    std::set<std::pair<int, int>> hole_set;
    for (size_t i = 0; i < holes.size(); ++i) {
        const Coord& h = holes[i];
        if (h.x < 0 || h.x >= width || h.y < 0 || h.y >= height)
            throw std::invalid_argument("holes[" + std::to_string(i) + "]: (" +
                                        std::to_string(h.x) + "," + std::to_string(h.y) +
                                        ") outside the grid");
        if (!hole_set.insert({h.x, h.y}).second)
            throw std::invalid_argument("holes[" + std::to_string(i) + "]: duplicate cell");
    }

    std::vector<std::vector<int>> id(height, std::vector<int>(width, -1));
    std::vector<Coord> coords;
    int next = 0;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (!hole_set.count({x, y})) {
                id[y][x] = next++;
                coords.push_back({x, y});
            }
    if (next == 0)
        throw std::invalid_argument("grid: all cells are holes");

    std::vector<Edge> edges;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            if (id[y][x] < 0)
                continue;
            if (x + 1 < width && id[y][x + 1] >= 0)
                edges.push_back({id[y][x], id[y][x + 1], 1, 1});
            if (y + 1 < height && id[y + 1][x] >= 0)
                edges.push_back({id[y][x], id[y + 1][x], 1, 1});
        }
    return Graph(next, std::move(edges), std::move(coords)); // checks connectivity
}

Instance star_path_star(int n, int path_edges, int edge_len) {
    if (n < 1)
        throw std::invalid_argument("star_path_star: n must be >= 1");
    if (path_edges < 1)
        throw std::invalid_argument("star_path_star: path_edges must be >= 1");
    if (edge_len < 1)
        throw std::invalid_argument("star_path_star: edge_len must be >= 1");

    const int center_a = n;
    const int center_b = n + path_edges;     // path interiors sit between the centers
    const int total = 2 * n + path_edges + 1;

    std::vector<Coord> coords;
    std::vector<Edge> edges;
    std::vector<VertexId> starts, goals;
    for (int i = 0; i < n; ++i) {
        coords.push_back({0, i});
        edges.push_back({i, center_a, edge_len, 1});
        starts.push_back(i);
    }
    for (int j = 0; j <= path_edges; ++j)
        coords.push_back({1 + j, 0}); // center_a, interiors, center_b
    for (int j = 0; j < path_edges; ++j)
        edges.push_back({center_a + j, center_a + j + 1, edge_len, 1});
    for (int i = 0; i < n; ++i) {
        int leaf = center_b + 1 + i;
        coords.push_back({2 + path_edges, i});
        edges.push_back({center_b, leaf, edge_len, 1});
        goals.push_back(leaf);
    }
    // leaves share x with nothing else; shift their y to avoid colliding with
    // the spine row only when n == 1 would clash (leaf y=0 vs spine y=0)
    for (int i = 0; i < n; ++i) {
        coords[i].y = i + 1;
        coords[center_b + 1 + i].y = i + 1;
    }

    return make_instance(Graph(total, std::move(edges), std::move(coords)),
                         std::move(starts), std::move(goals));
}

SubdividedGraph subdivide(const Graph& g) {
    SubdividedGraph out{Graph(1, {}), g.vertex_count(), {}};
    std::vector<Edge> edges;
    std::vector<SubdividedGraph::FreshVertex> fresh;
    int next = g.vertex_count();
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        VertexId prev = e.u;
        for (int k = 1; k < e.length; ++k) {
            fresh.push_back({static_cast<int>(i), k});
            edges.push_back({prev, next, 1, 1});
            prev = next++;
        }
        edges.push_back({prev, e.v, 1, 1});
    }
    out.graph = Graph(next, std::move(edges));
    out.fresh = std::move(fresh);
    return out;
}

CapacityChainGraph capacity_chain(const Graph& g) {
    CapacityChainGraph out{Graph(1, {}), g.vertex_count(), {}};
    std::vector<Edge> edges;
    std::vector<CapacityChainGraph::ChainVertex> fresh;
    int next = g.vertex_count();
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        int seg_len = (e.length + e.capacity - 1) / e.capacity;
        VertexId prev = e.u;
        for (int k = 1; k < e.capacity; ++k) {
            fresh.push_back({static_cast<int>(i), k});
            edges.push_back({prev, next, seg_len, 1});
            prev = next++;
        }
        edges.push_back({prev, e.v, seg_len, 1});
    }
    out.graph = Graph(next, std::move(edges));
    out.fresh = std::move(fresh);
    return out;
}

Instance random_grid_instance(Rng& rng, int width, int height, int max_holes,
                              int agents) {
    if (agents < 1)
        throw std::invalid_argument("random_grid_instance: agents must be >= 1");
    const int cells = width * height;
    for (int attempt = 0; attempt < 100; ++attempt) {
        int hole_count = static_cast<int>(rng.below(max_holes + 1));
        if (cells - hole_count < 2 * agents)
            continue;
        std::vector<Coord> holes;
        for (int c : rng.sample(cells, hole_count))
            holes.push_back({c % width, c / width});
        Graph g = [&]() -> Graph {
            try {
                return grid_with_holes(width, height, holes);
            } catch (const std::invalid_argument&) {
                return Graph(1, {}); // disconnected draw, resample
            }
        }();
        if (g.vertex_count() != cells - hole_count)
            continue;
        std::vector<int> picks = rng.sample(g.vertex_count(), 2 * agents);
        std::vector<VertexId> starts(picks.begin(), picks.begin() + agents);
        std::vector<VertexId> goals(picks.begin() + agents, picks.end());
        return make_instance(std::move(g), std::move(starts), std::move(goals));
    }
    throw std::runtime_error("random_grid_instance: no connected draw in 100 attempts");
}

} // namespace formation
