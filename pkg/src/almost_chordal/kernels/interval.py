"""Compression of Independent Set on graphs within k edges of an interval graph.

The output is a Weighted Independent Set instance on the vertex set X plus
one vertex per subgraph in the family C (see `build_compressed_instance`).
"""
from __future__ import annotations

from itertools import combinations, product

from ..asteroidal import ATWitness, find_x_touching_at, is_touching, remove_internal_edges
from ..chordal import is_chordal, max_weight_is_chordal
from ..fillin import approx_fillin
from ..graph import Graph, connected_components, induced_subgraph
from .instance import NOT_IN_CLASS, REDUCED, RESOLVED_NO, RESOLVED_YES, KernelInstance, RuleRecord


def irrelevance_threshold(k: int) -> int:
    return 8 * k * k + 7 * k + 2


def x_bound(k: int) -> int:
    return 32 * k ** 3 + 10 * k * k + 11 * k


def find_touching_long_claw(G: Graph, X) -> ATWitness | None:
    """An induced long claw of G - E(G[X]) whose leaves form an X-touching AT.

    Searched directly as a bounded-size induced subgraph: centre x, pairwise
    non-adjacent neighbours u1 < u2 < u3, and one private leaf per ui.
    """
    X = frozenset(X)
    H = remove_internal_edges(G, X)
    for x in H.vertices:
        nx_ = H.neighbors(x)
        for us in combinations(sorted(nx_), 3):
            if not H.is_independent(us):
                continue
            leaves = []
            for i, u in enumerate(us):
                others = [us[j] for j in range(3) if j != i]
                cand = [v for v in sorted(H.neighbors(u))
                        if v != x and v not in nx_ and not any(H.has_edge(v, o) for o in others)]
                leaves.append(cand)
            for vs in product(*leaves):
                if len(set(vs)) < 3 or not H.is_independent(vs):
                    continue
                W = ATWitness(tuple(vs), frozenset((x, *us, *vs)), "F1")
                if is_touching(W, X):
                    return W
    return None


def _chordal_alpha(G: Graph, vs) -> int:
    return max_weight_is_chordal(induced_subgraph(G, vs))[0]


def component_family(G: Graph, X) -> list[frozenset]:
    """Components of G - (X + N(Y)) over all Y in X with |Y| <= 2, exact duplicates removed."""
    X = sorted(X)
    seen = set()
    out = []
    subsets = [()] + [(x,) for x in X] + list(combinations(X, 2))
    for Y in subsets:
        blocked = set(X) | set(G.neighborhood(Y))
        rest = [v for v in G.vertices if v not in blocked]
        for comp in connected_components(G, rest):
            if comp not in seen:
                seen.add(comp)
                out.append(comp)
    return out


def build_compressed_instance(G: Graph, X, ell: int) -> KernelInstance:
    """The weighted graph G* on X plus the family C.

    X-vertices keep their labels and weight 1; the i-th member of C gets the
    label base + i (base above every label of G) and weight alpha(C).
    """
    X = frozenset(X)
    fam = component_family(G, X)
    base = max(G.vertices, default=-1) + 1
    labels = {base + i: comp for i, comp in enumerate(fam)}
    verts = sorted(X) + sorted(labels)
    edges = [(u, v) for u, v in combinations(sorted(X), 2) if G.has_edge(u, v)]
    for c, comp in labels.items():
        near = G.neighborhood(comp) | comp
        edges += [(x, c) for x in sorted(X) if x in near]
    for (a, ca), (b, cb) in combinations(sorted(labels.items()), 2):
        if ca & cb or G.neighborhood(ca) & cb:
            edges.append((a, b))
    weights = {x: 1 for x in X}
    weights.update({c: _chordal_alpha(G, comp) for c, comp in labels.items()})
    Gs = Graph(verts, edges)
    return KernelInstance(REDUCED, Gs, weights, ell, extra={"components": labels, "X": X})


def interval_is_compress(G: Graph, ell: int, k: int) -> KernelInstance:
    trace: list = []
    checks: list = []
    A = approx_fillin(G, k)
    if A is None:
        trace.append(RuleRecord("fillin-stop", note="fill-in exceeds budget"))
        return KernelInstance(NOT_IN_CLASS, trace=tuple(trace), extra={"rule3_checks": checks})
    X = set(A.endpoints())
    trace.append(RuleRecord("approx-fillin", marked=tuple(sorted(X)), note=f"modulator size {A.size}"))

    def stop(rule):
        trace.append(RuleRecord(rule))
        return KernelInstance(NOT_IN_CLASS, trace=tuple(trace), extra={"rule3_checks": checks, "X": frozenset(X)})

    # Rules 1-2
    for count in range(k + 2):
        if count == k + 1:
            return stop("rule2-stop")
        W = find_touching_long_claw(G, X)
        if W is None:
            break
        new = tuple(sorted(W.vertices - X))
        X |= W.vertices
        trace.append(RuleRecord("rule1", marked=new, note=W.shape))

    # Rule 3
    p = irrelevance_threshold(k)
    changed = True
    while changed:
        changed = False
        ok = is_chordal(G.remove_vertices(X))
        checks.append(ok)
        if not ok:
            raise AssertionError("G - X is not chordal before the irrelevant-vertex rule")
        for x in G.vertices:
            nb = G.neighbors(x) - X
            if len(nb) > p and _chordal_alpha(G, nb) >= p + 1:
                G = G.remove_vertices([x])
                X.discard(x)
                trace.append(RuleRecord("rule3", deleted=(x,)))
                changed = True
                break

    # Rules 4-5
    for count in range(k + 2):
        if count == k + 1:
            return stop("rule5-stop")
        found = find_x_touching_at(G, X)
        if found is None:
            break
        _, W = found
        new = tuple(sorted(W.vertices - X))
        X |= W.vertices
        trace.append(RuleRecord("rule4", marked=new, note=W.shape))
    x_size = len(X)

    # Rule 6
    for comp in connected_components(G):
        H = induced_subgraph(G, comp)
        if is_chordal(H):
            a = max_weight_is_chordal(H)[0]
            G = G.remove_vertices(comp)
            X -= comp
            ell -= a
            trace.append(RuleRecord("rule6", deleted=tuple(sorted(comp)), ell_delta=-a))
            if ell <= 0:
                return KernelInstance(RESOLVED_YES, trace=tuple(trace), extra={"rule3_checks": checks, "x_size": x_size})
    if ell <= 0:
        return KernelInstance(RESOLVED_YES, trace=tuple(trace), extra={"rule3_checks": checks, "x_size": x_size})
    if G.n == 0:
        return KernelInstance(RESOLVED_NO, trace=tuple(trace), extra={"rule3_checks": checks, "x_size": x_size})
    out = build_compressed_instance(G, X, ell)
    trace.append(RuleRecord("build-compressed", note=f"{out.graph.n} vertices"))
    extra = dict(out.extra, rule3_checks=checks, x_size=x_size)
    return KernelInstance(REDUCED, out.graph, out.weights, ell, tuple(trace), extra)
