#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"

namespace ricci {

// Finitely supported probability distribution on vertices. Atoms carry
// strictly positive mass, are sorted by vertex, and sum exactly to 1.
struct Measure {
    std::vector<std::pair<int, Rational>> atoms;

    Rational mass_at(int v) const;
};

// Lazy-random-walk step distribution: mass alpha at x, (1-alpha)/deg(x)
// on each neighbor.
Measure walk_measure(const Graph& g, int x, const Rational& alpha);

// Exact Wasserstein distance under the hop metric.
Rational wasserstein(const Graph& g, const Measure& m1, const Measure& m2);

// Same, but also returns the certified plan (support-indexed).
std::pair<Rational, TransportPlan> wasserstein_with_plan(const Graph& g, const Measure& m1,
                                                         const Measure& m2,
                                                         TransportProblem* problem_out = nullptr);

// kappa_alpha(x, y) = 1 - W(mu_x^alpha, mu_y^alpha) / d(x, y).
// Defined for any distinct pair in one component.
Rational kappa_alpha(const Graph& g, int x, int y, const Rational& alpha);

// kappa_LLY via the assignment route: (d + 1 - OPT) / d for an edge with
// equal endpoint degrees d.
Rational kappa_lly_assignment(const Graph& g, int x, int y);

// kappa_LLY via the transport route: kappa_alpha / (1 - alpha) evaluated
// at alpha = 1/(d+1), where the idleness function is already on its final
// linear piece. Cross-check partner of kappa_lly_assignment.
Rational kappa_lly_limit(const Graph& g, int x, int y);

// kappa_0 via the assignment route:
//   |triangle| = d-1:  kappa_LLY - 2/d
//   otherwise:         kappa_LLY - (3 - MAX)/d
Rational kappa_zero(const Graph& g, int x, int y);

// The two-piece idleness function alpha -> kappa_alpha(x, y) of an
// equal-degree edge; breakpoint at 1/(d+1).
struct IdlenessFunction {
    int d = 0;
    Rational kappa_lly;
    Rational kappa_zero;
    Rational breakpoint;  // 1/(d+1)

    Rational evaluate(const Rational& alpha) const;
};

IdlenessFunction idleness_function(const Graph& g, int x, int y);

// Per-edge bundle with both routes computed and compared.
struct EdgeCurvatureReport {
    int x = -1;
    int y = -1;
    int degree = 0;
    int triangle_size = 0;
    int opt = 0;
    std::optional<int> max;  // absent when R_x = ∅
    Rational kappa_lly;
    Rational kappa_zero;
    std::string route;
    bool cross_check = false;
};

EdgeCurvatureReport edge_report(const Graph& g, int x, int y);

}  // namespace ricci
