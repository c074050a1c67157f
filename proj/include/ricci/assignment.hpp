#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/graph.hpp"

namespace ricci {

struct AssignmentResult {
    // matching[i] = column assigned to row i.
    std::vector<int> matching;
    std::int64_t cost = 0;
};

// Minimum-cost perfect matching on a square cost matrix (Kuhn–Munkres).
// Among optimal matchings, returns the lexicographically smallest one by
// (row, column) index order. Empty input yields cost 0.
AssignmentResult solve_assignment(const std::vector<std::vector<std::int64_t>>& cost);

// Minimum matching cost only; skips the lexicographic refinement.
std::int64_t assignment_cost(const std::vector<std::vector<std::int64_t>>& cost);

// Minimum matching cost with row u forced onto column v.
std::int64_t assignment_cost_forced(const std::vector<std::vector<std::int64_t>>& cost,
                                    int u, int v);

// OPT(x, y): minimum assignment cost between R_x(x,y) and R_y(x,y) under
// the graph metric. Requires xy ∈ E and deg(x) = deg(y); 0 when R_x = ∅.
int opt_value(const Graph& g, int x, int y);

// MAX(x, y): the largest single-pair distance achievable by any optimal
// assignment. A pair (u, v) is usable iff forcing u→v keeps the total at
// OPT; each pair is tested by a forced re-solve. Requires R_x ≠ ∅.
int max_over_optimal(const Graph& g, int x, int y);

// The R_x × R_y distance matrix for an edge, in sorted-set order.
// PreconditionError if some pair is unreachable.
std::vector<std::vector<std::int64_t>> r_set_cost_matrix(const Graph& g,
                                                         const EdgeNeighborhood& nb);

}  // namespace ricci
