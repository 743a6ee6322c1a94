"""Turing kernel for Weighted Clique on graphs within k edges of chordal."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..chordal import maximal_cliques_chordal
from ..fillin import Modulator, approx_fillin
from ..graph import Graph, check_weights, induced_subgraph
from ..oracle import wclique_oracle
from .instance import NOT_IN_CLASS, RESOLVED_NO, RESOLVED_YES


@dataclass(frozen=True)
class OracleQuery:
    clique: frozenset  # the maximal clique C_i of G + A
    vertices: frozenset  # X_i = X & C_i, the query graph's vertex set
    threshold: int  # W_i = max(0, W - w(C_i - X_i))
    answer: bool


@dataclass(frozen=True)
class TuringResult:
    verdict: str
    answer: bool | None
    modulator: Modulator | None = None
    queries: tuple = field(default=())


def turing_kernel_wclique(G: Graph, w, W: int, k: int, oracle: Callable | None = None) -> TuringResult:
    """Decide whether G has a clique of weight >= W using queries on G[X & C_i].

    Every maximal clique C of G + A splits into X & C and C - X; the latter
    is a clique of G fully adjacent to the rest of C, so C holds a clique of
    weight W iff G[X & C] holds one of weight W - w(C - X).
    """
    w = check_weights(G, w)
    oracle = oracle or wclique_oracle
    A = approx_fillin(G, k)
    if A is None:
        return TuringResult(NOT_IN_CLASS, None)
    X = A.endpoints()
    queries = []
    for C in maximal_cliques_chordal(A.apply(G)) if G.n else [frozenset()]:
        Xi = C & X
        Wi = max(0, W - sum(w[v] for v in C - Xi))
        H = induced_subgraph(G, Xi)
        ans = bool(oracle(H, {v: w[v] for v in Xi}, Wi))
        queries.append(OracleQuery(C, Xi, Wi, ans))
    answer = any(q.answer for q in queries)
    return TuringResult(RESOLVED_YES if answer else RESOLVED_NO, answer, A, tuple(queries))
