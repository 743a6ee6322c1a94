"""Chordality recognition, clique trees and independent sets of chordal graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotChordalError
from .graph import Graph, bfs_path, pair


@dataclass(frozen=True)
class ChordalityCertificate:
    """Outcome of a chordality test.

    Exactly one of `peo` (a perfect elimination ordering) and `cycle` (an
    induced chordless cycle of length at least four) is set.
    """

    peo: tuple | None = None
    cycle: tuple | None = None

    @property
    def chordal(self) -> bool:
        return self.peo is not None

    def __bool__(self) -> bool:
        return self.chordal


def mcs_order(G: Graph) -> list:
    """Maximum cardinality search visit order (ties: smallest label)."""
    weight = {v: 0 for v in G}
    unvisited = set(G.vertices)
    order = []
    while unvisited:
        v = min(unvisited, key=lambda x: (-weight[x], x))
        unvisited.discard(v)
        order.append(v)
        for u in G.neighbors(v):
            if u in unvisited:
                weight[u] += 1
    return order


def _peo_violation(G: Graph, order) -> tuple | None:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in G.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        for u in later:
            if u != first and not G.has_edge(first, u):
                return v, first, u
    return None


def is_peo(G: Graph, order) -> bool:
    return len(order) == G.n and set(order) == set(G.vertices) and _peo_violation(G, order) is None


def find_chordless_cycle(G: Graph, shortest: bool = False, hint: tuple | None = None) -> tuple | None:
    """An induced cycle of length >= 4, or None if G is chordal.

    For a vertex v with non-adjacent neighbours a, b, a shortest a-b path
    avoiding the rest of N[v] closes an induced cycle through v.  Every
    chordless cycle arises this way, so scanning all (v, a, b) is complete;
    with `shortest` the globally shortest one is returned.
    """
    best = None
    triples = []
    if hint is not None:
        triples.append(hint)
    for v in G.vertices:
        nb = sorted(G.neighbors(v))
        for a, b in combinations(nb, 2):
            if not G.has_edge(a, b):
                triples.append((v, a, b))
    for v, a, b in triples:
        blocked = G.closed_neighborhood(v) - {a, b}
        allowed = [x for x in G.vertices if x not in blocked]
        path = bfs_path(G, a, b, allowed)
        if path is None:
            continue
        cyc = (v,) + tuple(path)
        if best is None or len(cyc) < len(best):
            best = cyc
            if not shortest or len(best) == 4:
                break
    return best


def recognize_chordal(G: Graph) -> ChordalityCertificate:
    """Test chordality with maximum cardinality search.

    The reverse of an MCS visit order is a perfect elimination ordering iff
    G is chordal.  A failed verification yields a chordless cycle.
    """
    order = mcs_order(G)[::-1]
    bad = _peo_violation(G, order)
    if bad is None:
        return ChordalityCertificate(peo=tuple(order))
    return ChordalityCertificate(cycle=find_chordless_cycle(G, hint=bad))


def is_chordal(G: Graph) -> bool:
    return recognize_chordal(G).chordal


def _require_peo(G: Graph) -> tuple:
    cert = recognize_chordal(G)
    if not cert.chordal:
        raise NotChordalError(f"graph is not chordal; chordless cycle {list(cert.cycle)}")
    return cert.peo


def maximal_cliques_chordal(G: Graph) -> list[frozenset]:
    """Maximal cliques of a chordal graph, at most n of them."""
    peo = _require_peo(G)
    pos = {v: i for i, v in enumerate(peo)}
    cands = []
    for v in peo:
        cands.append(frozenset([v]) | {u for u in G.neighbors(v) if pos[u] > pos[v]})
    uniq = sorted(set(cands), key=lambda c: (-len(c), sorted(c)))
    out = []
    for c in uniq:
        if not any(c < o for o in out):
            out.append(c)
    out.sort(key=lambda c: sorted(c))
    return out


def clique_tree(G: Graph):
    """Tree decomposition of a chordal graph whose bags are its maximal cliques.

    The tree is a maximum-weight spanning tree of the clique intersection
    graph; disconnected graphs get zero-weight links between components.
    """
    from .decomposition import TreeDecomposition

    if G.n == 0:
        return TreeDecomposition((frozenset(),), ())
    bags = maximal_cliques_chordal(G)
    cand = []
    for i, j in combinations(range(len(bags)), 2):
        cand.append((-len(bags[i] & bags[j]), i, j))
    cand.sort()
    parent = list(range(len(bags)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for _, i, j in cand:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
    return TreeDecomposition(tuple(bags), tuple(edges))


def max_weight_is_chordal(G: Graph, w=None) -> tuple[int, frozenset]:
    """Maximum-weight independent set of a chordal graph (Frank's algorithm).

    A forward pass along a perfect elimination ordering marks vertices with
    positive residual weight and charges that weight to later neighbours; a
    backward pass picks marked vertices greedily.
    """
    peo = _require_peo(G)
    w = {v: 1 for v in G} if w is None else w
    pos = {v: i for i, v in enumerate(peo)}
    resid = {v: w[v] for v in G}
    marked = []
    for v in peo:
        r = resid[v]
        if r > 0:
            marked.append(v)
            for u in G.neighbors(v):
                if pos[u] > pos[v]:
                    resid[u] = max(0, resid[u] - r)
    chosen = set()
    for v in reversed(marked):
        if not (G.neighbors(v) & chosen):
            chosen.add(v)
    return sum(w[v] for v in chosen), frozenset(chosen)


def chordal_alpha(G: Graph, vs=None) -> int:
    from .graph import induced_subgraph

    H = G if vs is None else induced_subgraph(G, vs)
    return max_weight_is_chordal(H)[0]


def triangulation_edges(G: Graph, order) -> list:
    """Fill pairs created by the elimination game along `order`."""
    adj = {v: set(G.neighbors(v)) for v in G}
    pos = {v: i for i, v in enumerate(order)}
    fill = []
    for v in order:
        later = sorted(u for u in adj[v] if pos[u] > pos[v])
        for a, b in combinations(later, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fill.append(pair(a, b))
    return fill
