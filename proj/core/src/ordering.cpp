#include "formation/ordering.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace formation {

long long path_distance_value(const Graph& g, const UnscheduledPath& p, VertexId u) {
    long long d = 0;
    for (size_t k = 0; k < p.vertices.size(); ++k) {
        if (p.vertices[k] == u)
            return d;
        if (k + 1 < p.vertices.size()) {
            int ei = g.edge_between(p.vertices[k], p.vertices[k + 1]);
            if (ei < 0)
                throw std::invalid_argument("path_distance_value: path is not connected in graph");
            d += g.edges()[ei].length;
        }
    }
    throw std::invalid_argument("path_distance_value: vertex " + std::to_string(u) +
                                " not on path of agent " + std::to_string(p.agent));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i)
            parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<Cluster> find_clusters(const PathSet& q) {
    const int n = static_cast<int>(q.paths.size());
    UnionFind uf(n);
    std::map<VertexId, int> first_seen;
    for (int i = 0; i < n; ++i)
        for (VertexId v : q.paths[i].vertices) {
            auto [it, fresh] = first_seen.emplace(v, i);
            if (!fresh)
                uf.unite(i, it->second);
        }

    std::map<int, Cluster> by_root;
    for (int i = 0; i < n; ++i) {
        Cluster& c = by_root[uf.find(i)];
        c.paths.push_back(i);
        c.vertices.insert(c.vertices.end(), q.paths[i].vertices.begin(),
                          q.paths[i].vertices.end());
    }
    std::vector<Cluster> out;
    for (auto& [root, c] : by_root) {
        (void)root;
        std::sort(c.vertices.begin(), c.vertices.end());
        c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()),
                         c.vertices.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const Cluster& a, const Cluster& b) { return a.paths[0] < b.paths[0]; });
    return out;
}

ConsistencyError::ConsistencyError(int a, int b, VertexId v)
    : std::runtime_error("inconsistent distance values: paths " + std::to_string(a) +
                         " and " + std::to_string(b) + " disagree at vertex " +
                         std::to_string(v)),
      path_a(a), path_b(b), vertex(v) {}

long long DistanceValues::value(int cluster, VertexId v) const {
    const auto& values = cluster_values.at(cluster);
    auto it = values.find(v);
    if (it == values.end())
        throw std::invalid_argument("DistanceValues: vertex " + std::to_string(v) +
                                    " not in cluster " + std::to_string(cluster));
    return it->second;
}

long long DistanceValues::value_for_path(int path, VertexId v) const {
    return value(cluster_of_path.at(path), v);
}

DistanceValues build_distance_values(const Graph& g, const PathSet& q,
                                     const std::vector<Cluster>& clusters,
                                     const BuildOptions& options) {
    DistanceValues out;
    out.cluster_of_path.assign(q.paths.size(), -1);
    for (size_t c = 0; c < clusters.size(); ++c)
        for (int p : clusters[c].paths)
            out.cluster_of_path[p] = static_cast<int>(c);

    for (const Cluster& cluster : clusters) {
        std::vector<int> order = cluster.paths;
        if (options.order == BuildOptions::Order::descending)
            std::reverse(order.begin(), order.end());

        std::map<VertexId, long long> value;
        std::map<VertexId, int> setter; // which path first labeled the vertex

        auto extend = [&](int pid, VertexId anchor, long long anchor_value) {
            const UnscheduledPath& p = q.paths[pid];
            long long base = anchor_value - path_distance_value(g, p, anchor);
            long long d = 0;
            for (size_t k = 0; k < p.vertices.size(); ++k) {
                VertexId u = p.vertices[k];
                auto it = value.find(u);
                if (it == value.end()) {
                    value[u] = base + d;
                    setter[u] = pid;
                } else if (it->second != base + d) {
                    throw ConsistencyError(setter[u], pid, u);
                }
                if (k + 1 < p.vertices.size())
                    d += g.edges()[g.edge_between(u, p.vertices[k + 1])].length;
            }
        };

        // anchor the first path at its own distances, then repeatedly extend
        // the first pending path (in preference order) that touches a labeled
        // vertex, anchoring at its earliest labeled vertex
        std::vector<int> pending = order;
        extend(pending.front(), q.paths[pending.front()].head(), 0);
        pending.erase(pending.begin());
        while (!pending.empty()) {
            bool advanced = false;
            for (size_t i = 0; i < pending.size(); ++i) {
                int pid = pending[i];
                const UnscheduledPath& p = q.paths[pid];
                auto hit = std::find_if(p.vertices.begin(), p.vertices.end(),
                                        [&](VertexId v) { return value.count(v); });
                if (hit == p.vertices.end())
                    continue;
                extend(pid, *hit, value[*hit]);
                pending.erase(pending.begin() + i);
                advanced = true;
                break;
            }
            if (!advanced)
                throw std::logic_error("build_distance_values: cluster is not connected");
        }

        // full-domain verification: each path's own distances must match up
        // to one constant
        for (int pid : cluster.paths) {
            const UnscheduledPath& p = q.paths[pid];
            long long offset = value.at(p.head());
            long long d = 0;
            for (size_t k = 0; k < p.vertices.size(); ++k) {
                VertexId u = p.vertices[k];
                if (value.at(u) != offset + d)
                    throw ConsistencyError(setter.at(u), pid, u);
                if (k + 1 < p.vertices.size())
                    d += g.edges()[g.edge_between(u, p.vertices[k + 1])].length;
            }
        }

        if (options.normalize) {
            long long lo = std::numeric_limits<long long>::max();
            for (const auto& [v, d] : value)
                lo = std::min(lo, d);
            for (auto& [v, d] : value)
                d -= lo;
        }
        out.cluster_values.push_back(std::move(value));
    }
    return out;
}

bool respects(const std::map<VertexId, long long>& da,
              const std::map<VertexId, long long>& db,
              const std::vector<VertexId>& domain) {
    if (domain.empty())
        throw std::invalid_argument("respects: empty domain");
    bool first = true;
    long long diff = 0;
    for (VertexId v : domain) {
        auto ia = da.find(v), ib = db.find(v);
        if (ia == da.end() || ib == db.end())
            throw std::invalid_argument("respects: vertex " + std::to_string(v) +
                                        " missing from a function's domain");
        long long d = ia->second - ib->second;
        if (first) {
            diff = d;
            first = false;
        } else if (d != diff) {
            return false;
        }
    }
    return true;
}

DagCheck check_dag(const PathSet& q) {
    DagCheck out;
    std::map<std::pair<VertexId, VertexId>, EdgeOrientation> orient;
    out.conflict = orient_edges(q, orient);
    if (out.conflict)
        return out;

    // Kahn over the oriented edges
    std::map<VertexId, std::vector<VertexId>> succ;
    std::map<VertexId, int> indeg;
    for (const auto& [key, eo] : orient) {
        (void)key;
        succ[eo.from].push_back(eo.to);
        indeg[eo.to] += 1;
        indeg.try_emplace(eo.from, 0);
        succ.try_emplace(eo.to);
    }
    for (auto& [v, list] : succ) {
        (void)v;
        std::sort(list.begin(), list.end());
    }

    std::vector<VertexId> ready;
    for (const auto& [v, d] : indeg)
        if (d == 0)
            ready.push_back(v);
    size_t done = 0;
    std::map<VertexId, int> left = indeg;
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        ++done;
        for (VertexId w : succ[v])
            if (--left[w] == 0)
                ready.push_back(w);
    }
    if (done == indeg.size()) {
        out.ok = true;
        return out;
    }

    // extract one directed cycle: every unconsumed vertex keeps at least one
    // unconsumed predecessor, so walking predecessors must revisit
    std::set<VertexId> remaining;
    for (const auto& [v, d] : left)
        if (d > 0)
            remaining.insert(v);
    std::map<VertexId, std::vector<VertexId>> pred;
    for (const auto& [key, eo] : orient) {
        (void)key;
        if (remaining.count(eo.from) && remaining.count(eo.to))
            pred[eo.to].push_back(eo.from);
    }
    VertexId at = *remaining.begin();
    std::vector<VertexId> walk;
    std::map<VertexId, int> pos;
    while (!pos.count(at)) {
        pos[at] = static_cast<int>(walk.size());
        walk.push_back(at);
        at = *std::min_element(pred.at(at).begin(), pred.at(at).end());
    }
    out.cycle.assign(walk.begin() + pos[at], walk.end());
    out.cycle.push_back(walk[pos[at]]);
    std::reverse(out.cycle.begin(), out.cycle.end());
    return out;
}

} // namespace formation
