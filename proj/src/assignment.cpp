#include "ricci/assignment.hpp"

#include <algorithm>
#include <limits>

namespace ricci {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

void validate_matrix(const std::vector<std::vector<std::int64_t>>& cost) {
    for (const auto& row : cost) {
        if (row.size() != cost.size())
            throw PreconditionError("assignment: cost matrix is not square");
        for (auto c : row)
            if (c < 0 || c >= kInf)
                throw PreconditionError("assignment: cost entry out of range");
    }
}

// Kuhn–Munkres with potentials, 1-based internal indexing. Row order and
// column scan order are fixed, so the result is deterministic.
std::int64_t hungarian(const std::vector<std::vector<std::int64_t>>& cost,
                       std::vector<int>* matching_out) {
    int n = static_cast<int>(cost.size());
    if (n == 0) {
        if (matching_out) matching_out->clear();
        return 0;
    }
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            std::int64_t delta = kInf;
            for (int j = 1; j <= n; ++j)
                if (!used[j]) {
                    std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
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
    std::int64_t total = 0;
    std::vector<int> matching(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j]) {
            matching[p[j] - 1] = j - 1;
            total += cost[p[j] - 1][j - 1];
        }
    if (matching_out) *matching_out = std::move(matching);
    return total;
}

std::vector<std::vector<std::int64_t>> minor_without(
    const std::vector<std::vector<std::int64_t>>& cost, int row, int col) {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(cost.size() - 1);
    for (int i = 0; i < static_cast<int>(cost.size()); ++i) {
        if (i == row) continue;
        std::vector<std::int64_t> r;
        r.reserve(cost.size() - 1);
        for (int j = 0; j < static_cast<int>(cost.size()); ++j)
            if (j != col) r.push_back(cost[i][j]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::int64_t assignment_cost(const std::vector<std::vector<std::int64_t>>& cost) {
    validate_matrix(cost);
    return hungarian(cost, nullptr);
}

std::int64_t assignment_cost_forced(const std::vector<std::vector<std::int64_t>>& cost, int u,
                                    int v) {
    validate_matrix(cost);
    return cost[u][v] + hungarian(minor_without(cost, u, v), nullptr);
}

AssignmentResult solve_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
    validate_matrix(cost);
    int n = static_cast<int>(cost.size());
    AssignmentResult result;
    result.cost = hungarian(cost, nullptr);
    // Lexicographic tie-breaking: fix rows in order, taking the first
    // column that keeps the remaining subproblem at the optimum.
    std::vector<char> col_used(n, 0);
    std::vector<std::vector<std::int64_t>> remaining = cost;
    std::vector<int> remaining_cols(n);
    for (int j = 0; j < n; ++j) remaining_cols[j] = j;
    std::int64_t target = result.cost;
    result.matching.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int m = static_cast<int>(remaining.size());
        bool placed = false;
        for (int j = 0; j < m && !placed; ++j) {
            std::int64_t forced = remaining[0][j] + hungarian(minor_without(remaining, 0, j), nullptr);
            if (forced == target) {
                result.matching[i] = remaining_cols[j];
                target -= remaining[0][j];
                remaining = minor_without(remaining, 0, j);
                remaining_cols.erase(remaining_cols.begin() + j);
                placed = true;
            }
        }
        if (!placed) throw CrossCheckError("assignment: lexicographic refinement failed");
    }
    return result;
}

std::vector<std::vector<std::int64_t>> r_set_cost_matrix(const Graph& g,
                                                         const EdgeNeighborhood& nb) {
    std::vector<std::vector<std::int64_t>> cost(nb.r_x.size());
    for (std::size_t i = 0; i < nb.r_x.size(); ++i) {
        auto dist = bfs_distance(g, nb.r_x[i]);
        cost[i].reserve(nb.r_y.size());
        for (int z : nb.r_y) {
            if (!dist[z])
                throw PreconditionError("assignment: '" + g.label(nb.r_x[i]) + "' cannot reach '" +
                                        g.label(z) + "'");
            cost[i].push_back(*dist[z]);
        }
    }
    return cost;
}

namespace {

EdgeNeighborhood equal_degree_neighborhood(const Graph& g, int x, int y) {
    auto nb = edge_neighborhood(g, x, y);
    if (g.degree(x) != g.degree(y))
        throw PreconditionError("'" + g.label(x) + "' and '" + g.label(y) +
                                "' have unequal degrees");
    return nb;
}

}  // namespace

int opt_value(const Graph& g, int x, int y) {
    auto nb = equal_degree_neighborhood(g, x, y);
    return static_cast<int>(assignment_cost(r_set_cost_matrix(g, nb)));
}

int max_over_optimal(const Graph& g, int x, int y) {
    auto nb = equal_degree_neighborhood(g, x, y);
    if (nb.r_x.empty())
        throw PreconditionError("max_over_optimal: R_x is empty for edge '" + g.label(x) + "','" +
                                g.label(y) + "'");
    auto cost = r_set_cost_matrix(g, nb);
    std::int64_t opt = assignment_cost(cost);
    int n = static_cast<int>(cost.size());
    std::int64_t best = -1;
    // A pair is usable by some optimal assignment iff forcing it keeps
    // the total at OPT.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cost[i][j] > best && assignment_cost_forced(cost, i, j) == opt)
                best = cost[i][j];
    return static_cast<int>(best);
}

}  // namespace ricci
