"""Immutable simple undirected graphs and the elementary operations on them.

Vertices are arbitrary hashable, mutually comparable labels (in practice
non-negative integers).  Labels survive every operation, so a vertex keeps
its identity when it is carried into an induced subgraph or a kernel.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import GraphError

Vertex = Hashable
Pair = tuple  # a normalized (u, v) with u < v
WeightMap = dict


def pair(u, v) -> Pair:
    """Normalize an unordered pair to a sorted tuple."""
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph with O(1) adjacency queries.

    Instances are immutable: every operation returns a new graph.
    """

    __slots__ = ("_adj", "_vertices", "_m", "_hash")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable = ()):
        verts = list(vertices)
        adj: dict = {v: set() for v in verts}
        if len(adj) != len(verts):
            seen = set()
            for v in verts:
                if v in seen:
                    raise GraphError(f"duplicate vertex label {v!r}")
                seen.add(v)
        m = 0
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u!r}", )
            if u not in adj or v not in adj:
                raise GraphError(f"edge {(u, v)!r} has an endpoint outside the vertex set")
            if v in adj[u]:
                continue
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self._vertices = tuple(sorted(adj))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._m = m
        self._hash = None

    # -- basic queries -------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator:
        return iter(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        nb = self._adj.get(u)
        return nb is not None and v in nb

    def closed_neighborhood(self, v) -> frozenset:
        return self._adj[v] | {v}

    def neighborhood(self, vs: Iterable) -> frozenset:
        """Open neighborhood of a vertex set: N(S) minus S."""
        vs = set(vs)
        out = set()
        for v in vs:
            out |= self._adj[v]
        return frozenset(out - vs)

    def edges(self) -> list:
        out = []
        for u in self._vertices:
            for v in self._adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def is_clique(self, vs: Iterable) -> bool:
        vs = list(vs)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vs: Iterable) -> bool:
        vs = list(vs)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def non_edges(self, vs: Iterable | None = None) -> list:
        vs = self._vertices if vs is None else sorted(vs)
        return [(u, v) for u, v in combinations(vs, 2) if not self.has_edge(u, v)]

    def adjacency(self) -> Mapping:
        return dict(self._adj)

    # -- identity ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ------------------------------------------------
    def remove_vertices(self, vs: Iterable) -> "Graph":
        drop = set(vs)
        return induced_subgraph(self, [v for v in self._vertices if v not in drop])

    def add_vertex(self, v, nbrs: Iterable = ()) -> "Graph":
        return Graph(self._vertices + (v,), self.edges() + [(v, u) for u in nbrs])


def build_graph(n: int, edges: Iterable) -> Graph:
    """Graph on vertices 0..n-1.  Rejects loops, out-of-range and repeated pairs."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    seen = set()
    norm = []
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair ({u}, {v}) out of range for n={n}")
        p = pair(u, v)
        if p in seen:
            raise GraphError(f"duplicate pair ({u}, {v})")
        seen.add(p)
        norm.append(p)
    return Graph(range(n), norm)


def complement(G: Graph) -> Graph:
    return Graph(G.vertices, G.non_edges())


def apply_modulator(G: Graph, A: Iterable, mode: str = "add") -> Graph:
    """Return G with the pairs of A added, deleted, or toggled."""
    A = sorted({pair(u, v) for u, v in A})
    for u, v in A:
        if u not in G or v not in G or u == v:
            raise GraphError(f"pair ({u}, {v}) is not a pair of vertices of the graph")
    edges = set(G.edges())
    if mode == "add":
        for p in A:
            if p in edges:
                raise GraphError(f"pair {p} is already an edge")
        edges.update(A)
    elif mode == "delete":
        for p in A:
            if p not in edges:
                raise GraphError(f"pair {p} is not an edge")
        edges.difference_update(A)
    elif mode in ("symmetric-difference", "xor"):
        edges.symmetric_difference_update(A)
    else:
        raise GraphError(f"unknown modulator mode {mode!r}")
    return Graph(G.vertices, edges)


def induced_subgraph(G: Graph, S: Iterable) -> Graph:
    S = list(S)
    keep = set(S)
    for v in keep:
        if v not in G:
            raise GraphError(f"unknown vertex {v!r}")
    return Graph(sorted(keep), [(u, v) for u in keep for v in G.neighbors(u) & keep if u < v])


def degeneracy_ordering(G: Graph) -> tuple[list, int]:
    """Repeatedly remove a vertex of minimum degree (ties: smallest label).

    Returns the removal order and the degeneracy d: every vertex has at most
    d neighbours after it in the order.
    """
    deg = {v: G.degree(v) for v in G}
    alive = set(G.vertices)
    order = []
    d = 0
    # bucket queue keyed by current degree
    buckets: dict = {}
    for v in G:
        buckets.setdefault(deg[v], set()).add(v)
    cur = 0
    while alive:
        cur = max(cur - 1, 0)
        while not buckets.get(cur):
            cur += 1
        v = min(buckets[cur])
        buckets[cur].discard(v)
        d = max(d, cur)
        order.append(v)
        alive.discard(v)
        for u in G.neighbors(v):
            if u in alive:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets.setdefault(deg[u], set()).add(u)
    return order, d


def enumerate_cliques(G: Graph) -> list[frozenset]:
    """All cliques of G, the empty set included.

    Each clique is generated once, from its earliest vertex in a degeneracy
    ordering, as a subset of that vertex's later neighbourhood.
    """
    order, _ = degeneracy_ordering(G)
    pos = {v: i for i, v in enumerate(order)}
    out = [frozenset()]
    for v in order:
        later = sorted(u for u in G.neighbors(v) if pos[u] > pos[v])
        # grow cliques inside `later` by backtracking
        stack = [(frozenset([v]), 0)]
        while stack:
            cl, i = stack.pop()
            out.append(cl)
            for j in range(i, len(later)):
                u = later[j]
                if all(G.has_edge(u, x) for x in cl if x != v):
                    stack.append((cl | {u}, j + 1))
    out.sort(key=lambda c: (len(c), sorted(c)))
    return out


def connected_components(G: Graph, within: Iterable | None = None) -> list[frozenset]:
    """Components of G (or of G[within]), each a frozenset, ordered by smallest label."""
    allowed = set(G.vertices) if within is None else set(within)
    seen = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def bfs_path(G: Graph, s, t, allowed: Iterable | None = None) -> list | None:
    """Shortest s-t path using only `allowed` vertices (endpoints always allowed)."""
    ok = set(G.vertices) if allowed is None else set(allowed) | {s, t}
    prev = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in sorted(G.neighbors(x)):
            if y in ok and y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def unit_weights(G: Graph) -> dict:
    return {v: 1 for v in G}


def total_weight(w: Mapping, vs: Iterable) -> int:
    return sum(w[v] for v in vs)


def check_weights(G: Graph, w: Mapping | None, positive: bool = True) -> dict:
    """Return a weight map covering G, defaulting to unit weights."""
    if w is None:
        return unit_weights(G)
    for v in G:
        if v not in w:
            raise GraphError(f"missing weight for vertex {v!r}")
        if not isinstance(w[v], int) or isinstance(w[v], bool):
            raise GraphError(f"weight of {v!r} must be an integer")
        if positive and w[v] < 1:
            raise GraphError(f"weight of {v!r} must be positive")
    return {v: w[v] for v in G}


# some named graphs used across tests and the CLI
def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Relabel consecutively and place side by side."""
    verts, edges, off = [], [], 0
    for H in graphs:
        idx = {v: off + i for i, v in enumerate(H.vertices)}
        verts.extend(idx.values())
        edges.extend((idx[u], idx[v]) for u, v in H.edges())
        off += H.n
    return Graph(verts, edges)
