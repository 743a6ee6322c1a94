"""Re-apply a recorded rule trace to a fresh copy of the input."""
from __future__ import annotations

from ..graph import Graph
from .instance import NOT_IN_CLASS, REDUCED, RESOLVED_NO, RESOLVED_YES, KernelInstance

def replay_trace(G: Graph, ell: int, trace) -> KernelInstance:
    """Rebuild the kernel output from (G, ell) and the trace alone.

    Deletions and threshold deltas are applied in order; a `build-compressed`
    step (interval compression) recomputes G* from the surviving
    graph and the surviving marked vertices.
    """
    from .interval import build_compressed_instance

    X: set = set()
    built = None
    for rec in trace:
        if rec.rule.endswith("-stop"):
            return KernelInstance(NOT_IN_CLASS, trace=tuple(trace))
        if rec.deleted:
            G = G.remove_vertices(rec.deleted)
            X -= set(rec.deleted)
        X |= set(rec.marked)
        ell += rec.ell_delta
        if rec.rule == "build-compressed":
            built = build_compressed_instance(G, X, ell)
    if ell <= 0:
        return KernelInstance(RESOLVED_YES, trace=tuple(trace))
    if built is not None:
        return KernelInstance(REDUCED, built.graph, built.weights, ell, tuple(trace))
    if G.n == 0:
        return KernelInstance(RESOLVED_NO, trace=tuple(trace))
    return KernelInstance(REDUCED, G, None, ell, tuple(trace))
