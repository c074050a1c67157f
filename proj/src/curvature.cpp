#include "ricci/curvature.hpp"

#include <algorithm>

#include "ricci/assignment.hpp"

namespace ricci {

Rational Measure::mass_at(int v) const {
    for (const auto& [vertex, mass] : atoms)
        if (vertex == v) return mass;
    return Rational(0);
}

Measure walk_measure(const Graph& g, int x, const Rational& alpha) {
    if (alpha < 0 || alpha > 1)
        throw PreconditionError("walk_measure: idleness must lie in [0, 1]");
    if (x < 0 || x >= g.vertex_count()) throw PreconditionError("walk_measure: vertex out of range");
    int d = g.degree(x);
    if (d == 0) throw PreconditionError("walk_measure: isolated vertex '" + g.label(x) + "'");
    Rational neighbor_mass = (1 - alpha) / d;
    Measure m;
    bool placed_x = false;
    auto place_x = [&]() {
        if (alpha > 0) m.atoms.emplace_back(x, alpha);
        placed_x = true;
    };
    for (int v : g.neighbors(x)) {
        if (!placed_x && v > x) place_x();
        if (neighbor_mass > 0) m.atoms.emplace_back(v, neighbor_mass);
    }
    if (!placed_x) place_x();
    return m;
}

std::pair<Rational, TransportPlan> wasserstein_with_plan(const Graph& g, const Measure& m1,
                                                         const Measure& m2,
                                                         TransportProblem* problem_out) {
    TransportProblem p;
    p.supply.reserve(m1.atoms.size());
    p.demand.reserve(m2.atoms.size());
    for (const auto& [v, mass] : m1.atoms) p.supply.push_back(mass);
    for (const auto& [v, mass] : m2.atoms) p.demand.push_back(mass);
    p.cost.resize(m1.atoms.size());
    for (std::size_t i = 0; i < m1.atoms.size(); ++i) {
        auto dist = bfs_distance(g, m1.atoms[i].first);
        p.cost[i].reserve(m2.atoms.size());
        for (const auto& [v, mass] : m2.atoms) {
            if (!dist[v])
                throw PreconditionError("wasserstein: supports span different components");
            p.cost[i].push_back(*dist[v]);
        }
    }
    auto plan = solve_transport(p);
    Rational cost = plan.total_cost;
    if (problem_out) *problem_out = std::move(p);
    return {std::move(cost), std::move(plan)};
}

Rational wasserstein(const Graph& g, const Measure& m1, const Measure& m2) {
    return wasserstein_with_plan(g, m1, m2).first;
}

Rational kappa_alpha(const Graph& g, int x, int y, const Rational& alpha) {
    if (x == y) throw PreconditionError("kappa_alpha: vertices must be distinct");
    int d = graph_distance(g, x, y);
    Rational w = wasserstein(g, walk_measure(g, x, alpha), walk_measure(g, y, alpha));
    return 1 - w / d;
}

namespace {

int equal_degree(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y))
        throw PreconditionError("'" + g.label(x) + "' and '" + g.label(y) + "' are not adjacent");
    if (g.degree(x) != g.degree(y))
        throw PreconditionError("'" + g.label(x) + "' and '" + g.label(y) +
                                "' have unequal degrees");
    return g.degree(x);
}

}  // namespace

Rational kappa_lly_assignment(const Graph& g, int x, int y) {
    int d = equal_degree(g, x, y);
    return make_rational(d + 1 - opt_value(g, x, y), d);
}

Rational kappa_lly_limit(const Graph& g, int x, int y) {
    int d = equal_degree(g, x, y);
    // On [1/(d+1), 1] the idleness function is (1 - alpha) * kappa_LLY,
    // so one evaluation at the breakpoint recovers the limit.
    Rational alpha = make_rational(1, d + 1);
    return kappa_alpha(g, x, y, alpha) / (1 - alpha);
}

Rational kappa_zero(const Graph& g, int x, int y) {
    int d = equal_degree(g, x, y);
    auto nb = edge_neighborhood(g, x, y);
    Rational lly = kappa_lly_assignment(g, x, y);
    if (static_cast<int>(nb.triangle.size()) == d - 1) return lly - make_rational(2, d);
    return lly - make_rational(3 - max_over_optimal(g, x, y), d);
}

Rational IdlenessFunction::evaluate(const Rational& alpha) const {
    if (alpha < 0 || alpha > 1)
        throw PreconditionError("idleness function: alpha must lie in [0, 1]");
    if (alpha <= breakpoint)
        return (d * kappa_lly - (d + 1) * kappa_zero) * alpha + kappa_zero;
    return (1 - alpha) * kappa_lly;
}

IdlenessFunction idleness_function(const Graph& g, int x, int y) {
    IdlenessFunction f;
    f.d = equal_degree(g, x, y);
    f.kappa_lly = kappa_lly_assignment(g, x, y);
    f.kappa_zero = ricci::kappa_zero(g, x, y);
    f.breakpoint = make_rational(1, f.d + 1);
    return f;
}

EdgeCurvatureReport edge_report(const Graph& g, int x, int y) {
    EdgeCurvatureReport r;
    r.x = x;
    r.y = y;
    r.degree = equal_degree(g, x, y);
    auto nb = edge_neighborhood(g, x, y);
    r.triangle_size = static_cast<int>(nb.triangle.size());
    r.opt = opt_value(g, x, y);
    if (!nb.r_x.empty()) r.max = max_over_optimal(g, x, y);
    r.kappa_lly = kappa_lly_assignment(g, x, y);
    r.kappa_zero = kappa_zero(g, x, y);
    r.route = "assignment";
    Rational lly_transport = kappa_lly_limit(g, x, y);
    Rational zero_transport = 1 - wasserstein(g, walk_measure(g, x, Rational(0)),
                                              walk_measure(g, y, Rational(0)));
    r.cross_check = (lly_transport == r.kappa_lly) && (zero_transport == r.kappa_zero);
    return r;
}

}  // namespace ricci
