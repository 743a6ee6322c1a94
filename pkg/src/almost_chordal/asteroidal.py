"""Asteroidal triples, minimal witnesses and the X-touching search.

Witness templates (terminals always z1, z2, z3, or v1..v3 for F1):

* F1: long claw, centre x, middle vertices u1..u3, leaves v1..v3.
* F2: whipping top.  Hub c adjacent to z1, z3, h, a, b; h adjacent to z2,
  a, b; a adjacent to z1, b adjacent to z3.
* F3(r), r >= 2: induced path z1 x1 .. xr z3 plus a vertex y adjacent to
  every xi and a pendant z2 on y.  F3(2) is the net.
* F4(r), r >= 1: induced path z1 x1 .. xr z3, vertices y1 ~ z1 and y2 ~ z3
  both adjacent to every xi and to each other, and z2 adjacent to y1, y2.
  F4(1) is the 3-sun.
* F5: C6 with alternating terminals.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .errors import GraphError
from .graph import Graph, connected_components, induced_subgraph

UNCLASSIFIED = "unclassified"
ALL_SHAPES = ("F1", "F2", "F3", "F4", "F5")


@dataclass(frozen=True)
class ATWitness:
    terminals: tuple
    vertices: frozenset
    shape: str = UNCLASSIFIED

    @property
    def family(self) -> str:
        return self.shape.split("(")[0]


def _avoid_labels(G: Graph, x, alive=None) -> dict:
    """Component id of every vertex of G - N[x] (restricted to `alive`)."""
    allowed = set(G.vertices if alive is None else alive) - G.closed_neighborhood(x)
    lab = {}
    for i, comp in enumerate(connected_components(G, allowed)):
        for v in comp:
            lab[v] = i
    return lab


def is_asteroidal_triple(G: Graph, T) -> bool:
    a, b, c = T
    if G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c) or len({a, b, c}) < 3:
        return False
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        lab = _avoid_labels(G, z)
        if x not in lab or lab.get(x) != lab.get(y):
            return False
    return True


def all_asteroidal_triples(G: Graph, restrict=None) -> list[tuple]:
    pool = sorted(G.vertices if restrict is None else set(restrict) & set(G.vertices))
    labels = {x: _avoid_labels(G, x) for x in G.vertices}
    out = []
    for a, b, c in combinations(pool, 3):
        if G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c):
            continue
        la, lb, lc = labels[a], labels[b], labels[c]
        if b in la and la.get(b) == la.get(c) and a in lb and lb.get(a) == lb.get(c) and a in lc and lc.get(a) == lc.get(b):
            out.append((a, b, c))
    return out


def find_AT(G: Graph, restrict=None) -> tuple | None:
    """Lexicographically first asteroidal triple (drawn from `restrict`), or None."""
    pool = sorted(G.vertices if restrict is None else set(restrict) & set(G.vertices))
    labels: dict = {}
    for a, b, c in combinations(pool, 3):
        if G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c):
            continue
        ok = True
        for x, y, z in ((b, c, a), (a, c, b), (a, b, c)):
            if z not in labels:
                labels[z] = _avoid_labels(G, z)
            lz = labels[z]
            if lz.get(x) is None or lz.get(x) != lz.get(y):
                ok = False
                break
        if ok:
            return (a, b, c)
    return None


def minimize_at_witness(G: Graph, T, prefer=()) -> ATWitness:
    """Delete non-terminal vertices one at a time while T stays asteroidal.

    Vertices in `prefer` are tried first, then the rest, each group in label
    order.  Since being an AT is inherited by supergraphs, a single pass
    reaches an inclusion-minimal witness.
    """
    T = tuple(T)
    if not is_asteroidal_triple(G, T):
        raise GraphError(f"{T} is not an asteroidal triple")
    prefer = set(prefer)
    others = [v for v in G.vertices if v not in T]
    order = sorted(v for v in others if v in prefer) + sorted(v for v in others if v not in prefer)
    keep = set(G.vertices)
    for v in order:
        trial = keep - {v}
        if is_asteroidal_triple(induced_subgraph(G, trial), T):
            keep = trial
    F = induced_subgraph(G, keep)
    return ATWitness(T, frozenset(keep), classify_witness(F, T))


# -- templates ----------------------------------------------------------
def _f1():
    e = [("x", "u1"), ("x", "u2"), ("x", "u3"), ("u1", "v1"), ("u2", "v2"), ("u3", "v3")]
    return e, ("v1", "v2", "v3")


def _f2():
    e = [("c", "z1"), ("c", "z3"), ("c", "h"), ("c", "a"), ("c", "b"),
         ("h", "z2"), ("h", "a"), ("h", "b"), ("a", "z1"), ("b", "z3")]
    return e, ("z1", "z2", "z3")


def _f3(r):
    path = ["z1"] + [f"x{i}" for i in range(1, r + 1)] + ["z3"]
    e = list(zip(path, path[1:]))
    e += [("y", f"x{i}") for i in range(1, r + 1)] + [("y", "z2")]
    return e, ("z1", "z2", "z3")


def _f4(r):
    path = ["z1"] + [f"x{i}" for i in range(1, r + 1)] + ["z3"]
    e = list(zip(path, path[1:]))
    for i in range(1, r + 1):
        e += [("y1", f"x{i}"), ("y2", f"x{i}")]
    e += [("y1", "z1"), ("y2", "z3"), ("y1", "y2"), ("y1", "z2"), ("y2", "z2")]
    return e, ("z1", "z2", "z3")


def _f5():
    cyc = ["z1", "p", "z2", "q", "z3", "s"]
    return list(zip(cyc, cyc[1:] + cyc[:1])), ("z1", "z2", "z3")


@lru_cache(maxsize=None)
def template(shape: str) -> tuple:
    """(edge list, terminals) of a template such as 'F1' or 'F3(4)'."""
    fam, _, rest = shape.partition("(")
    r = int(rest.rstrip(")")) if rest else None
    if fam == "F1":
        return _f1()
    if fam == "F2":
        return _f2()
    if fam == "F3" and r is not None and r >= 2:
        return _f3(r)
    if fam == "F4" and r is not None and r >= 1:
        return _f4(r)
    if fam == "F5":
        return _f5()
    raise ValueError(f"unknown template {shape!r}")


def _template_nx(shape):
    edges, terms = template(shape)
    H = nx.Graph(edges)
    for v in H:
        H.nodes[v]["t"] = v in terms
    return H


def shapes_for_size(nv: int) -> list[str]:
    out = []
    if nv == 7:
        out += ["F1", "F2"]
    if nv == 6:
        out.append("F5")
    if nv >= 6:
        out.append(f"F3({nv - 4})")
    if nv >= 6:
        out.append(f"F4({nv - 5})")
    return out


def classify_witness(F: Graph, T) -> str:
    """Match F (terminals T) against the templates; terminals map to terminals."""
    T = set(T)
    H = nx.Graph()
    H.add_nodes_from(F.vertices)
    H.add_edges_from(F.edges())
    for v in H:
        H.nodes[v]["t"] = v in T
    for shape in shapes_for_size(F.n):
        P = _template_nx(shape)
        if P.number_of_edges() != H.number_of_edges():
            continue
        gm = GraphMatcher(H, P, node_match=lambda a, b: a["t"] == b["t"])
        if gm.is_isomorphic():
            return shape
    return UNCLASSIFIED


# -- X-touching search ----------------------------------------------------
def remove_internal_edges(G: Graph, X) -> Graph:
    X = set(X)
    return Graph(G.vertices, [(u, v) for u, v in G.edges() if not (u in X and v in X)])


def _distances(G: Graph) -> dict:
    from collections import deque

    dist = {}
    for s in G.vertices:
        d = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in G.neighbors(x):
                if y not in d:
                    d[y] = d[x] + 1
                    q.append(y)
        dist[s] = d
    return dist


def is_touching(W: ATWitness, X) -> bool:
    inter = W.vertices & set(X)
    return len(inter) <= 1 or inter <= set(W.terminals)


def _shape_ok(shape, shapes) -> bool:
    return shape != UNCLASSIFIED and shape.split("(")[0] in shapes


def find_x_touching_at(G: Graph, X, shapes=ALL_SHAPES) -> tuple[tuple, ATWitness] | None:
    """An X-touching AT of G - E(G[X]) whose witness has one of `shapes`.

    Triples are tried by increasing total pairwise distance, then
    lexicographically.  A witness is minimized deleting vertices of X first,
    which keeps it touching whenever some touching witness for that triple
    exists.  When a touching witness is unclassified it still contains a
    minimal asteroidal witness on fewer vertices, so the search descends
    into it before moving on.
    """
    X = frozenset(X)
    Gp = remove_internal_edges(G, X)
    dist = _distances(Gp)
    inf = 3 * (Gp.n + 1)

    def key(t):
        a, b, c = t
        return (dist[a].get(b, inf) + dist[a].get(c, inf) + dist[b].get(c, inf), t)

    def search(H: Graph, exclude=frozenset(), depth=0):
        triples = sorted((t for t in all_asteroidal_triples(H) if t not in exclude), key=key)
        for t in triples:
            W = minimize_at_witness(H, t, prefer=X)
            if not is_touching(W, X):
                continue
            if _shape_ok(W.shape, shapes):
                return t, W
            if W.shape == UNCLASSIFIED and len(W.vertices) < H.n or (depth == 0 and W.shape == UNCLASSIFIED):
                sub = induced_subgraph(H, W.vertices)
                found = search(sub, frozenset([t]), depth + 1)
                if found is not None:
                    return found
        return None

    return search(Gp)
