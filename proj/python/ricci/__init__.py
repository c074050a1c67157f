"""Exact Ollivier / Lin-Lu-Yau curvature of graph edges.

Thin wrapper over the C++ extension; all curvature values come back as
exact ``fractions.Fraction`` objects.
"""

from fractions import Fraction

from ricci._core import (  # noqa: F401
    Graph,
    GraphParseError,
    PreconditionError,
    build_graph,
    edge_report,
    max_over_optimal,
    opt_value,
    sweep,
)
from ricci import _core


def kappa_lly(graph, x, y):
    return Fraction(_core.kappa_lly(graph, x, y))


def kappa_zero(graph, x, y):
    return Fraction(_core.kappa_zero(graph, x, y))


def kappa_alpha(graph, x, y, alpha):
    return Fraction(_core.kappa_alpha(graph, x, y, str(Fraction(alpha))))


__all__ = [
    "Graph",
    "GraphParseError",
    "PreconditionError",
    "build_graph",
    "edge_report",
    "kappa_alpha",
    "kappa_lly",
    "kappa_zero",
    "max_over_optimal",
    "opt_value",
    "sweep",
]
