#pragma once

#include "formation/graph.hpp"
#include "formation/rng.hpp"

#include <vector>

namespace formation {

// 4-neighbor grid, `width` columns by `height` rows, with the given cells
// removed. Vertex ids are row-major over the remaining cells; coordinates are
// (x=column, y=row) with (0,0) top-left. All edges unit length and capacity.
// Throws if a hole is out of range or duplicated, or the result is empty or
// disconnected.
Graph grid_with_holes(int width, int height, const std::vector<Coord>& holes = {});

// Two n-leaf stars joined by a path of `path_edges` edges between their
// centers; every edge has length `edge_len` and capacity 1. Star-A leaves are
// the starts, star-B leaves the goals. Every start-goal distance equals
// (path_edges + 2) * edge_len, which makes the family the worst case for the
// makespan bound. Ids: A leaves 0..n-1, A center, path interiors, B center,
// B leaves.
Instance star_path_star(int n, int path_edges, int edge_len);

// Edge subdivision: every edge of length d becomes a chain of d unit-length,
// unit-capacity edges through d-1 fresh vertices. Original vertices keep
// their ids; an all-unit graph round-trips unchanged.
struct SubdividedGraph {
    Graph graph;
    int original_vertex_count = 0;
    struct FreshVertex {
        int edge_index = 0; // into the original edge list
        int offset = 0;     // 1..d-1, measured from the original edge's u
    };
    std::vector<FreshVertex> fresh; // indexed by id - original_vertex_count
};
SubdividedGraph subdivide(const Graph& g);

// Capacity-aware reduction: every edge becomes a chain of c(e) unit-capacity
// edges of length ceil(d(e)/c(e)). With c(e)=1 everywhere this is the
// identity; with c(e)=d(e) it coincides with subdivide().
struct CapacityChainGraph {
    Graph graph;
    int original_vertex_count = 0;
    struct ChainVertex {
        int edge_index = 0; // into the original edge list
        int junction = 0;   // 1..c-1, segment boundary counted from u
    };
    std::vector<ChainVertex> fresh;
};
CapacityChainGraph capacity_chain(const Graph& g);

// Seeded random instance on a grid with holes: draws hole placement and
// disjoint start/goal sets, resampling (up to 100 attempts) when the grid
// comes out disconnected or too small for the agents. Deterministic for a
// fixed generator state.
Instance random_grid_instance(Rng& rng, int width, int height, int max_holes,
                              int agents);

} // namespace formation
