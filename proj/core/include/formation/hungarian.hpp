#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

namespace formation {

// O(n^3) minimum-cost perfect assignment on a square integer matrix
// (Kuhn-Munkres with potentials). Returns the optimal cost and one optimal
// row -> column assignment.
struct AssignmentResult {
    long long cost = 0;
    std::vector<int> assignment; // assignment[row] = column
};

inline AssignmentResult min_cost_assignment(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0)
        throw std::invalid_argument("min_cost_assignment: empty matrix");
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("min_cost_assignment: matrix not square");

    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    // 1-indexed potentials; p[j] = row matched to column j
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    AssignmentResult out;
    out.assignment.assign(n, -1);
    for (int j = 1; j <= n; ++j)
        out.assignment[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i)
        out.cost += cost[i][out.assignment[i]];
    return out;
}

} // namespace formation
