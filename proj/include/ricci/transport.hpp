#pragma once

#include <cstdint>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// Balanced transportation instance. Sites are opaque indices into the cost
// matrix; masses are exact rationals summing to the same total on both sides.
struct TransportProblem {
    std::vector<Rational> supply;
    std::vector<Rational> demand;
    // cost[i][j]: distance from supply site i to demand site j.
    std::vector<std::vector<int>> cost;
};

struct TransportArc {
    int supply_site;
    int demand_site;
    Rational mass;
};

// Optimal plan plus the dual potentials that certify it: u_i + v_j <= c_ij
// everywhere, with equality on every arc carrying mass.
struct TransportPlan {
    std::vector<TransportArc> flows;
    Rational total_cost;
    std::vector<std::int64_t> u;  // per supply site
    std::vector<std::int64_t> v;  // per demand site
};

// Exact min-cost transportation. Masses are scaled by the LCM of their
// denominators to an integral problem, which is solved by successive
// shortest augmenting paths on the residual network. No floating point.
TransportPlan solve_transport(const TransportProblem& p);

// Re-derives optimality of a plan from marginals, dual feasibility, and
// complementary slackness alone. Used as an independent oracle in tests.
bool validate_transport_plan(const TransportProblem& p, const TransportPlan& plan);

}  // namespace ricci
