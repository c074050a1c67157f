#pragma once

#include <string>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

enum class Relation { Equal, GreaterEqual };

// One theorem/lemma instance checked on a concrete product edge.
struct TheoremCheckReport {
    std::string theorem_id;  // T1-LLY, T1-K0, T2-LLY, T2-K0, T3, T4-LLY, T4-K0,
                             // COR1-LLY, COR1-K0, COR2, L1, L2, L3, L4, P1, P2
    std::string instance;
    Rational lhs;
    Rational rhs;
    Relation relation = Relation::Equal;
    bool holds = false;
    Rational slack;  // lhs - rhs
};

// The sharp-bound correction term of the diagonal lower bound:
// X = 1 - (|R_x1||R_y1| - 1) / d_strong.
struct DiagonalBoundX {
    int r_x_size = 0;
    int r_y_size = 0;
    int degree = 0;  // d_G + d_H + d_G d_H
    Rational x_value;
};

DiagonalBoundX diagonal_bound_x(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2);

// Closed-twin product formulas for strong-product edges
// (x1 = x2 covers horizontal edges):
//   kappa_LLY = d_H(d_G+1)/d · kappa_LLY(y1,y2)
//   kappa_0   = d_G d_H/d · kappa_LLY(y1,y2) + d_H/d · kappa_0(y1,y2)
std::vector<TheoremCheckReport> check_theorem2(const Graph& g, const Graph& h, int x1, int x2,
                                               int y1, int y2);

// Sharp lower bound for diagonal edges with non-twin endpoint pairs in
// both factors; reports the exact slack.
TheoremCheckReport check_theorem3(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2);

// Cartesian horizontal-edge formulas: both curvatures scale by d_H/(d_G+d_H).
std::vector<TheoremCheckReport> check_theorem4(const Graph& g, const Graph& h, int x, int y1,
                                               int y2);

// Horizontal strong-product lower bounds; the kappa_LLY bound must be tight.
std::vector<TheoremCheckReport> check_theorem1(const Graph& g, const Graph& h, int x, int y1,
                                               int y2);

// Complete-factor corollary, including the R_{y1} = ∅ branch values
// (d+1)/d and (d-1)/d.
std::vector<TheoremCheckReport> check_corollary_complete(const Graph& g, const Graph& h, int u,
                                                         int v);

// Idleness corollary: the composed two-branch expression equals
// kappa_alpha on the twin product edge.
TheoremCheckReport check_corollary_idleness(const Graph& g, const Graph& h, int x1, int x2,
                                            int y1, int y2, const Rational& alpha);

// Integer identities on explicit products:
//   L1: OPT_strong = (d_G + 1) OPT_H          (twins in G)
//   L2: MAX_strong = MAX_H                    (twins in G, R_{y1} ≠ ∅)
//   L3: OPT_cartesian = OPT_H + d_G           (x1 = x2)
//   L4: MAX_cartesian = MAX_H                 (x1 = x2, R_{y1} ≠ ∅)
TheoremCheckReport check_lemma1(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2);
TheoremCheckReport check_lemma2(const Graph& g, const Graph& h, int x1, int x2, int y1, int y2);
TheoremCheckReport check_lemma3(const Graph& g, const Graph& h, int x, int y1, int y2);
TheoremCheckReport check_lemma4(const Graph& g, const Graph& h, int x, int y1, int y2);

// Distance propositions on explicit products, all vertex pairs:
// strong distance = max of factor distances, Cartesian distance = sum.
std::vector<TheoremCheckReport> check_proposition1(const Graph& g, const Graph& h);
std::vector<TheoremCheckReport> check_proposition2(const Graph& g, const Graph& h);

enum class ProductKind { Strong, Cartesian };

struct SweepOptions {
    std::vector<std::string> theorems;  // empty = all applicable
    int jobs = 1;
};

struct SweepResult {
    std::vector<TheoremCheckReport> reports;
    int pass_count = 0;
    int fail_count = 0;
    int skipped_edges = 0;  // edges where no selected theorem applies
    Rational worst_slack;   // smallest slack among GreaterEqual reports
    bool has_inequality = false;
};

// Runs every applicable selected check over every edge of the product.
// Horizontal/vertical edges get T1/T2/T4 (vertical via factor-role swap);
// diagonal edges get T2 when a factor pair is closed twins and T3 when
// neither is. Lemma identities run where their preconditions hold.
SweepResult sweep(const Graph& g, const Graph& h, ProductKind kind, const SweepOptions& opts);

}  // namespace ricci
