#pragma once

#include "formation/assignment.hpp"
#include "formation/graph.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace formation {

// Distance from the path's head to u along the path (sum of edge lengths);
// throws if u does not lie on the path.
long long path_distance_value(const Graph& g, const UnscheduledPath& p, VertexId u);

// Maximal groups of paths connected by shared vertices (the transitive
// closure of "intersects"). Clusters are vertex-disjoint; both the cluster
// list and each member list are sorted by id.
struct Cluster {
    std::vector<int> paths;
    std::vector<VertexId> vertices; // union of member path vertices, sorted
};
std::vector<Cluster> find_clusters(const PathSet& q);

// One integer value per vertex of each cluster that restricts, on every
// member path, to that path's own distance-to-head function up to an
// additive constant. Built by anchoring one member and propagating across
// shared vertices; every propagation and the final full-domain sweep are
// verified, so an inconsistent path set is rejected rather than mis-ordered.
class ConsistencyError : public std::runtime_error {
public:
    ConsistencyError(int path_a, int path_b, VertexId vertex);
    int path_a; // path whose propagated value was already in place
    int path_b; // path whose own distances disagree
    VertexId vertex;
};

struct BuildOptions {
    enum class Order { ascending, descending };
    Order order = Order::ascending; // anchor/propagation preference by path id
    bool normalize = true;          // shift each cluster so its minimum is 0
};

struct DistanceValues {
    std::vector<std::map<VertexId, long long>> cluster_values; // one map per cluster
    std::vector<int> cluster_of_path;                          // path id -> cluster index

    long long value(int cluster, VertexId v) const;
    long long value_for_path(int path, VertexId v) const;
};

DistanceValues build_distance_values(const Graph& g, const PathSet& q,
                                     const std::vector<Cluster>& clusters,
                                     const BuildOptions& options = {});

// True when da and db differ by one constant across the whole domain.
// Both functions must cover the domain; a missing vertex is an error, not
// a false.
bool respects(const std::map<VertexId, long long>& da,
              const std::map<VertexId, long long>& db,
              const std::vector<VertexId>& domain);

// Orients the path set's edges in travel direction and checks the result is
// a DAG: no edge used in both directions and no directed cycle. The failing
// certificate is the offending edge or one directed cycle.
struct DagCheck {
    bool ok = false;
    std::optional<OrientationConflict> conflict;
    std::vector<VertexId> cycle; // closed walk, first == last, when cyclic
};
DagCheck check_dag(const PathSet& q);

} // namespace formation
