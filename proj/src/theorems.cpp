#include "ricci/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ricci/assignment.hpp"

namespace ricci {

namespace {

void require_regular(const Graph& g, const char* which) {
    if (!g.is_regular())
        throw PreconditionError(std::string("theorem check: ") + which + " factor is not regular");
}

int common_degree(const Graph& g) { return g.vertex_count() > 0 ? g.degree(0) : 0; }

// kappa_0 on the product via the transport route (the assignment route
// would need MAX of the product edge, which is far more expensive).
Rational product_kappa_zero(const Graph& pg, int u, int v) {
    return 1 - wasserstein(pg, walk_measure(pg, u, Rational(0)), walk_measure(pg, v, Rational(0)));
}

std::string edge_instance(const Graph& pg, int u, int v) {
    return pg.label(u) + "-" + pg.label(v);
}

TheoremCheckReport make_report(std::string id, std::string instance, Rational lhs, Rational rhs,
                               Relation rel) {
    TheoremCheckReport r;
    r.theorem_id = std::move(id);
    r.instance = std::move(instance);
    r.slack = lhs - rhs;
    r.holds = (rel == Relation::Equal) ? (r.slack == 0) : (r.slack >= 0);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.relation = rel;
    return r;
}

// Orientation-independent core of the twin formulas (Theorem 2 and, with
// x1 = x2, the horizontal case): `idle` is the factor whose pair is a
// closed twin, `moving` the factor contributing the edge y1y2.
std::vector<TheoremCheckReport> theorem2_core(const Graph& pg, int u, int v, const Graph& moving,
                                              int y1, int y2, int d_idle, const char* suffix) {
    int d_moving = common_degree(moving);
    int d_prod = d_idle + d_moving + d_idle * d_moving;
    Rational lly_h = kappa_lly_assignment(moving, y1, y2);
    Rational k0_h = kappa_zero(moving, y1, y2);
    std::string inst = edge_instance(pg, u, v);
    std::vector<TheoremCheckReport> out;
    out.push_back(make_report(std::string("T2-LLY") + suffix, inst, kappa_lly_assignment(pg, u, v),
                              make_rational(d_moving * (d_idle + 1), d_prod) * lly_h,
                              Relation::Equal));
    out.push_back(make_report(std::string("T2-K0") + suffix, inst, product_kappa_zero(pg, u, v),
                              make_rational(d_idle * d_moving, d_prod) * lly_h +
                                  make_rational(d_moving, d_prod) * k0_h,
                              Relation::Equal));
    return out;
}

std::vector<TheoremCheckReport> theorem1_core(const Graph& pg, int u, int v, const Graph& moving,
                                              int y1, int y2, int d_idle, const char* suffix) {
    int d_moving = common_degree(moving);
    int d_prod = d_idle + d_moving + d_idle * d_moving;
    Rational factor(d_moving * (d_idle + 1), d_prod);
    std::string inst = edge_instance(pg, u, v);
    std::vector<TheoremCheckReport> out;
    out.push_back(make_report(std::string("T1-LLY") + suffix, inst, kappa_lly_assignment(pg, u, v),
                              factor * kappa_lly_assignment(moving, y1, y2),
                              Relation::GreaterEqual));
    out.push_back(make_report(std::string("T1-K0") + suffix, inst, product_kappa_zero(pg, u, v),
                              factor * kappa_zero(moving, y1, y2), Relation::GreaterEqual));
    return out;
}

std::vector<TheoremCheckReport> theorem4_core(const Graph& pg, int u, int v, const Graph& moving,
                                              int y1, int y2, int d_idle, const char* suffix) {
    int d_moving = common_degree(moving);
    int d_prod = d_idle + d_moving;
    Rational factor(d_moving, d_prod);
    std::string inst = edge_instance(pg, u, v);
    std::vector<TheoremCheckReport> out;
    out.push_back(make_report(std::string("T4-LLY") + suffix, inst, kappa_lly_assignment(pg, u, v),
                              factor * kappa_lly_assignment(moving, y1, y2), Relation::Equal));
    out.push_back(make_report(std::string("T4-K0") + suffix, inst, product_kappa_zero(pg, u, v),
                              factor * kappa_zero(moving, y1, y2), Relation::Equal));
    return out;
}

}  // namespace

DiagonalBoundX diagonal_bound_x(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2) {
    DiagonalBoundX x;
    x.r_x_size = static_cast<int>(edge_neighborhood(g, x1, x2).r_x.size());
    x.r_y_size = static_cast<int>(edge_neighborhood(h, y1, y2).r_x.size());
    int dg = common_degree(g), dh = common_degree(h);
    x.degree = dg + dh + dg * dh;
    x.x_value = 1 - make_rational(x.r_x_size * x.r_y_size - 1, x.degree);
    return x;
}

std::vector<TheoremCheckReport> check_theorem2(const Graph& g, const Graph& h, int x1, int x2,
                                               int y1, int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!closed_neighborhood_equal(g, x1, x2))
        throw PreconditionError("theorem 2: closed neighborhoods of the G pair differ");
    if (!h.has_edge(y1, y2)) throw PreconditionError("theorem 2: y1y2 is not an edge of H");
    auto p = strong_product(g, h);
    int u = p.vertex_of(x1, y1), v = p.vertex_of(x2, y2);
    return theorem2_core(p.graph, u, v, h, y1, y2, common_degree(g), "");
}

TheoremCheckReport check_theorem3(const Graph& g, const Graph& h, int x1, int x2, int y1,
                                  int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!g.has_edge(x1, x2)) throw PreconditionError("theorem 3: x1x2 is not an edge of G");
    if (!h.has_edge(y1, y2)) throw PreconditionError("theorem 3: y1y2 is not an edge of H");
    if (closed_neighborhood_equal(g, x1, x2) || closed_neighborhood_equal(h, y1, y2))
        throw PreconditionError("theorem 3: requires non-twin pairs in both factors");
    auto p = strong_product(g, h);
    int u = p.vertex_of(x1, y1), v = p.vertex_of(x2, y2);
    int dg = common_degree(g), dh = common_degree(h);
    auto x = diagonal_bound_x(g, h, x1, x2, y1, y2);
    Rational rhs = make_rational(dh * (dg + 1), x.degree) * kappa_lly_assignment(h, y1, y2) +
                   make_rational(dg * (dh + 1), x.degree) * kappa_lly_assignment(g, x1, x2) -
                   x.x_value;
    return make_report("T3", edge_instance(p.graph, u, v), kappa_lly_assignment(p.graph, u, v),
                       std::move(rhs), Relation::GreaterEqual);
}

std::vector<TheoremCheckReport> check_theorem4(const Graph& g, const Graph& h, int x, int y1,
                                               int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!h.has_edge(y1, y2)) throw PreconditionError("theorem 4: y1y2 is not an edge of H");
    auto p = cartesian_product(g, h);
    return theorem4_core(p.graph, p.vertex_of(x, y1), p.vertex_of(x, y2), h, y1, y2,
                         common_degree(g), "");
}

std::vector<TheoremCheckReport> check_theorem1(const Graph& g, const Graph& h, int x, int y1,
                                               int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!h.has_edge(y1, y2)) throw PreconditionError("theorem 1: y1y2 is not an edge of H");
    auto p = strong_product(g, h);
    return theorem1_core(p.graph, p.vertex_of(x, y1), p.vertex_of(x, y2), h, y1, y2,
                         common_degree(g), "");
}

std::vector<TheoremCheckReport> check_corollary_complete(const Graph& g, const Graph& h, int u,
                                                         int v) {
    require_regular(h, "right");
    int n = g.vertex_count();
    if (g.edge_count() != n * (n - 1) / 2)
        throw PreconditionError("corollary: left factor must be complete");
    auto p = strong_product(g, h);
    if (!p.graph.has_edge(u, v)) throw PreconditionError("corollary: not a product edge");
    auto [x1, y1] = p.coords.at(u);
    auto [x2, y2] = p.coords.at(v);
    int dg = common_degree(g), dh = common_degree(h);
    int d_prod = dg + dh + dg * dh;
    bool empty_branch = (y1 == y2) || edge_neighborhood(h, y1, y2).r_x.empty();
    Rational rhs_lly, rhs_k0;
    if (empty_branch) {
        rhs_lly = make_rational(d_prod + 1, d_prod);
        rhs_k0 = make_rational(d_prod - 1, d_prod);
    } else {
        Rational lly_h = kappa_lly_assignment(h, y1, y2);
        rhs_lly = make_rational(dh * (dg + 1), d_prod) * lly_h;
        rhs_k0 = make_rational(dg * dh, d_prod) * lly_h +
                 make_rational(dh, d_prod) * kappa_zero(h, y1, y2);
    }
    std::string inst = edge_instance(p.graph, u, v);
    std::vector<TheoremCheckReport> out;
    out.push_back(make_report("COR1-LLY", inst, kappa_lly_assignment(p.graph, u, v),
                              std::move(rhs_lly), Relation::Equal));
    out.push_back(make_report("COR1-K0", inst, product_kappa_zero(p.graph, u, v),
                              std::move(rhs_k0), Relation::Equal));
    return out;
}

TheoremCheckReport check_corollary_idleness(const Graph& g, const Graph& h, int x1, int x2,
                                            int y1, int y2, const Rational& alpha) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (alpha < 0 || alpha > 1)
        throw PreconditionError("corollary: alpha must lie in [0, 1]");
    if (!closed_neighborhood_equal(g, x1, x2))
        throw PreconditionError("corollary: closed neighborhoods of the G pair differ");
    if (!h.has_edge(y1, y2)) throw PreconditionError("corollary: y1y2 is not an edge of H");
    auto p = strong_product(g, h);
    int u = p.vertex_of(x1, y1), v = p.vertex_of(x2, y2);
    int dg = common_degree(g), dh = common_degree(h);
    int d_prod = dg + dh + dg * dh;
    Rational lly_h = kappa_lly_assignment(h, y1, y2);
    Rational k0_h = kappa_zero(h, y1, y2);
    Rational expected;
    if (alpha <= make_rational(1, d_prod + 1)) {
        expected = dh * (lly_h - k0_h) * alpha +
                   make_rational(dh, d_prod) * (dg * lly_h + k0_h) * (1 - alpha);
    } else {
        expected = make_rational(dh * (dg + 1), d_prod) * lly_h * (1 - alpha);
    }
    return make_report("COR2",
                       edge_instance(p.graph, u, v) + " alpha=" + rational_str(alpha),
                       kappa_alpha(p.graph, u, v, alpha), std::move(expected), Relation::Equal);
}

TheoremCheckReport check_lemma1(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!closed_neighborhood_equal(g, x1, x2))
        throw PreconditionError("lemma 1: closed neighborhoods of the G pair differ");
    if (!h.has_edge(y1, y2)) throw PreconditionError("lemma 1: y1y2 is not an edge of H");
    auto p = strong_product(g, h);
    int u = p.vertex_of(x1, y1), v = p.vertex_of(x2, y2);
    return make_report("L1", edge_instance(p.graph, u, v),
                       Rational(opt_value(p.graph, u, v)),
                       Rational((common_degree(g) + 1) * opt_value(h, y1, y2)), Relation::Equal);
}

TheoremCheckReport check_lemma2(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!closed_neighborhood_equal(g, x1, x2))
        throw PreconditionError("lemma 2: closed neighborhoods of the G pair differ");
    if (!h.has_edge(y1, y2)) throw PreconditionError("lemma 2: y1y2 is not an edge of H");
    if (edge_neighborhood(h, y1, y2).r_x.empty())
        throw PreconditionError("lemma 2: R_{y1} is empty");
    auto p = strong_product(g, h);
    int u = p.vertex_of(x1, y1), v = p.vertex_of(x2, y2);
    return make_report("L2", edge_instance(p.graph, u, v),
                       Rational(max_over_optimal(p.graph, u, v)),
                       Rational(max_over_optimal(h, y1, y2)), Relation::Equal);
}

TheoremCheckReport check_lemma3(const Graph& g, const Graph& h, int x, int y1, int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!h.has_edge(y1, y2)) throw PreconditionError("lemma 3: y1y2 is not an edge of H");
    auto p = cartesian_product(g, h);
    int u = p.vertex_of(x, y1), v = p.vertex_of(x, y2);
    return make_report("L3", edge_instance(p.graph, u, v),
                       Rational(opt_value(p.graph, u, v)),
                       Rational(opt_value(h, y1, y2) + common_degree(g)), Relation::Equal);
}

TheoremCheckReport check_lemma4(const Graph& g, const Graph& h, int x, int y1, int y2) {
    require_regular(g, "left");
    require_regular(h, "right");
    if (!h.has_edge(y1, y2)) throw PreconditionError("lemma 4: y1y2 is not an edge of H");
    if (edge_neighborhood(h, y1, y2).r_x.empty())
        throw PreconditionError("lemma 4: R_{y1} is empty");
    auto p = cartesian_product(g, h);
    int u = p.vertex_of(x, y1), v = p.vertex_of(x, y2);
    return make_report("L4", edge_instance(p.graph, u, v),
                       Rational(max_over_optimal(p.graph, u, v)),
                       Rational(max_over_optimal(h, y1, y2)), Relation::Equal);
}

namespace {

TheoremCheckReport distance_proposition(const Graph& g, const Graph& h, ProductKind kind) {
    auto p = kind == ProductKind::Strong ? strong_product(g, h) : cartesian_product(g, h);
    long mismatches = 0;
    long pairs = 0;
    int n = p.graph.vertex_count();
    std::vector<std::vector<std::optional<int>>> dg, dh;
    for (int a = 0; a < g.vertex_count(); ++a) dg.push_back(bfs_distance(g, a));
    for (int b = 0; b < h.vertex_count(); ++b) dh.push_back(bfs_distance(h, b));
    for (int u = 0; u < n; ++u) {
        auto dist = bfs_distance(p.graph, u);
        auto [x1, y1] = p.coords[u];
        for (int v = u + 1; v < n; ++v) {
            auto [x2, y2] = p.coords[v];
            ++pairs;
            auto da = dg[x1][x2];
            auto db = dh[y1][y2];
            std::optional<int> expected;
            if (da && db)
                expected = kind == ProductKind::Strong ? std::max(*da, *db) : *da + *db;
            if (dist[v] != expected) ++mismatches;
        }
    }
    auto r = make_report(kind == ProductKind::Strong ? "P1" : "P2",
                         std::to_string(pairs) + " vertex pairs", Rational(mismatches),
                         Rational(0), Relation::Equal);
    return r;
}

}  // namespace

std::vector<TheoremCheckReport> check_proposition1(const Graph& g, const Graph& h) {
    return {distance_proposition(g, h, ProductKind::Strong)};
}

std::vector<TheoremCheckReport> check_proposition2(const Graph& g, const Graph& h) {
    return {distance_proposition(g, h, ProductKind::Cartesian)};
}

namespace {

bool selected(const SweepOptions& opts, const std::string& id) {
    if (opts.theorems.empty()) return true;
    for (const auto& t : opts.theorems) {
        if (t == id) return true;
        // "T2" selects "T2-LLY" and "T2-K0"; "-swap" variants follow their base id.
        if (id.size() > t.size() && id.compare(0, t.size(), t) == 0 && id[t.size()] == '-')
            return true;
    }
    return false;
}

// All checks applicable to one product edge. Vertical edges reuse the
// horizontal formulas with the factor roles swapped.
std::vector<TheoremCheckReport> checks_for_edge(const ProductGraph& p, ProductKind kind, int u,
                                                int v, const SweepOptions& opts) {
    const Graph& g = p.left_factor;
    const Graph& h = p.right_factor;
    int dg = common_degree(g), dh = common_degree(h);
    auto [x1, y1] = p.coords.at(u);
    auto [x2, y2] = p.coords.at(v);
    EdgeKind kind_of_edge = classify_edge(p, u, v);
    std::vector<TheoremCheckReport> out;
    auto append = [&out](std::vector<TheoremCheckReport> more) {
        for (auto& r : more) out.push_back(std::move(r));
    };
    bool want_t1 = selected(opts, "T1-LLY");
    bool want_t2 = selected(opts, "T2-LLY");
    bool want_t3 = selected(opts, "T3");
    bool want_t4 = selected(opts, "T4-LLY");
    bool want_l1 = selected(opts, "L1");
    bool want_l2 = selected(opts, "L2");
    bool want_l3 = selected(opts, "L3");
    bool want_l4 = selected(opts, "L4");
    bool want_cor1 = selected(opts, "COR1-LLY");
    bool want_cor2 = selected(opts, "COR2");

    if (kind == ProductKind::Cartesian) {
        // Horizontal: moving factor H; vertical: moving factor G.
        bool horizontal = (kind_of_edge == EdgeKind::Horizontal);
        const Graph& moving = horizontal ? h : g;
        int m1 = horizontal ? y1 : x1;
        int m2 = horizontal ? y2 : x2;
        int d_idle = horizontal ? dg : dh;
        const char* suffix = horizontal ? "" : "-swap";
        if (want_t4) append(theorem4_core(p.graph, u, v, moving, m1, m2, d_idle, suffix));
        if (want_l3)
            append({make_report(std::string("L3") + suffix, edge_instance(p.graph, u, v),
                                Rational(opt_value(p.graph, u, v)),
                                Rational(opt_value(moving, m1, m2) + d_idle), Relation::Equal)});
        if (want_l4 && !edge_neighborhood(moving, m1, m2).r_x.empty())
            append({make_report(std::string("L4") + suffix, edge_instance(p.graph, u, v),
                                Rational(max_over_optimal(p.graph, u, v)),
                                Rational(max_over_optimal(moving, m1, m2)), Relation::Equal)});
        return out;
    }

    // Strong product. Decide which orientations have a closed-twin idle pair.
    bool twins_g = closed_neighborhood_equal(g, x1, x2);
    bool twins_h = closed_neighborhood_equal(h, y1, y2);
    auto run_orientation = [&](const Graph& moving, int m1, int m2, int d_idle,
                               const char* suffix) {
        if (want_t1) append(theorem1_core(p.graph, u, v, moving, m1, m2, d_idle, suffix));
        if (want_t2) append(theorem2_core(p.graph, u, v, moving, m1, m2, d_idle, suffix));
        if (want_l1)
            append({make_report(std::string("L1") + suffix, edge_instance(p.graph, u, v),
                                Rational(opt_value(p.graph, u, v)),
                                Rational((d_idle + 1) * opt_value(moving, m1, m2)),
                                Relation::Equal)});
        if (want_l2 && !edge_neighborhood(moving, m1, m2).r_x.empty())
            append({make_report(std::string("L2") + suffix, edge_instance(p.graph, u, v),
                                Rational(max_over_optimal(p.graph, u, v)),
                                Rational(max_over_optimal(moving, m1, m2)), Relation::Equal)});
    };
    if (kind_of_edge != EdgeKind::Vertical && twins_g) run_orientation(h, y1, y2, dg, "");
    if (kind_of_edge != EdgeKind::Horizontal && twins_h) run_orientation(g, x1, x2, dh, "-swap");
    if (want_cor1) {
        int ng = g.vertex_count();
        if (g.edge_count() == ng * (ng - 1) / 2)
            append(check_corollary_complete(g, h, u, v));
    }
    if (want_cor2 && kind_of_edge != EdgeKind::Vertical && twins_g) {
        int d_prod = dg + dh + dg * dh;
        for (const Rational& alpha :
             {Rational(0), make_rational(1, d_prod + 1), make_rational(1, 2)})
            append({check_corollary_idleness(g, h, x1, x2, y1, y2, alpha)});
    }
    if (kind_of_edge == EdgeKind::Diagonal && !twins_g && !twins_h && want_t3) {
        auto x = diagonal_bound_x(g, h, x1, x2, y1, y2);
        Rational rhs = make_rational(dh * (dg + 1), x.degree) * kappa_lly_assignment(h, y1, y2) +
                       make_rational(dg * (dh + 1), x.degree) * kappa_lly_assignment(g, x1, x2) -
                       x.x_value;
        append({make_report("T3", edge_instance(p.graph, u, v),
                            kappa_lly_assignment(p.graph, u, v), std::move(rhs),
                            Relation::GreaterEqual)});
    }
    return out;
}

}  // namespace

SweepResult sweep(const Graph& g, const Graph& h, ProductKind kind, const SweepOptions& opts) {
    require_regular(g, "left");
    require_regular(h, "right");
    auto p = kind == ProductKind::Strong ? strong_product(g, h) : cartesian_product(g, h);
    auto edges = p.graph.edges();
    std::vector<std::vector<TheoremCheckReport>> per_edge(edges.size());
    int jobs = std::max(1, opts.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < edges.size(); i = next.fetch_add(1))
            per_edge[i] = checks_for_edge(p, kind, edges[i].first, edges[i].second, opts);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    SweepResult result;
    for (auto& reports : per_edge) {
        if (reports.empty()) ++result.skipped_edges;
        for (auto& r : reports) {
            if (r.holds)
                ++result.pass_count;
            else
                ++result.fail_count;
            if (r.relation == Relation::GreaterEqual) {
                if (!result.has_inequality || r.slack < result.worst_slack)
                    result.worst_slack = r.slack;
                result.has_inequality = true;
            }
            result.reports.push_back(std::move(r));
        }
    }
    return result;
}

}  // namespace ricci
