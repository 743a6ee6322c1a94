"""Classic problems expressed through the colourable and degenerate solvers."""
from __future__ import annotations

from ..errors import ParameterError, WitnessError
from ..graph import Graph, check_weights, connected_components, induced_subgraph
from ..solution import Solution
from .colorable import solve_d_colorable
from .degenerate import solve_d_degenerate

CLASSIC = ("wis", "wvc", "oct", "bipartite-subgraph", "wfvs", "induced-forest")


def is_forest(G: Graph) -> bool:
    return G.m == G.n - len(connected_components(G))


def solve_classic(problem: str, G: Graph, w, T, validate: bool = True) -> Solution:
    """wis / bipartite-subgraph / induced-forest directly; wvc / oct / wfvs by complement."""
    if problem not in CLASSIC:
        raise ParameterError(f"unknown problem {problem!r}")
    w = check_weights(G, w)
    total = sum(w.values())
    if problem in ("wis", "wvc"):
        base = solve_d_colorable(G, w, 1, T, validate)
    elif problem in ("bipartite-subgraph", "oct"):
        base = solve_d_colorable(G, w, 2, T, validate)
    else:
        base = solve_d_degenerate(G, w, 1, T, validate)
        if not is_forest(induced_subgraph(G, base.vertices)):
            raise WitnessError("induced-forest witness contains a cycle")
    if problem in ("wis", "bipartite-subgraph", "induced-forest"):
        return Solution(problem, base.value, base.vertices, base.assignment, base.ordering)
    rest = frozenset(G.vertices) - base.vertices
    return Solution(problem, total - base.value, rest, extra={"kept": base.vertices})
