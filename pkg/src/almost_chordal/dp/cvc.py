"""Minimum-weight connected vertex cover.

A state at node t is a partition P of S = bag minus U, where U is the
independent set of bag vertices left out of the cover; the blocks of P are
the traces of the components of G[S^] on S.  When S is empty two markers
stand in for P: EMPTY (nothing chosen yet) and CLOSED (one finished
component lies entirely below t).  The proof this follows only sketches
the transitions; the forget rule below adds the usual guard that refuses to
drop the last bag vertex of a component while other components are still
open, since that component could never be reconnected.
"""
from __future__ import annotations

from ..decomposition import FORGET, INTRODUCE, JOIN, LEAF, NiceTreeDecomposition, validate_nice
from ..errors import GraphError, WitnessError
from ..graph import Graph, check_weights, connected_components, induced_subgraph, is_connected
from ..solution import Solution

EMPTY = ("empty",)
CLOSED = ("closed",)


def _canon(blocks) -> tuple:
    return tuple(sorted(tuple(sorted(b)) for b in blocks if b))


def _members(P) -> frozenset:
    if P in (EMPTY, CLOSED):
        return frozenset()
    return frozenset(v for b in P for v in b)


def _offer(tab, key, val, back):
    cur = tab.get(key)
    if cur is None or val < cur[0]:
        tab[key] = (val, back)


def _merge(P1, P2) -> tuple:
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for P in (P1, P2):
        for b in P:
            for v in b:
                parent.setdefault(v, v)
            for v in b[1:]:
                ra, rb = find(b[0]), find(v)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return _canon(groups.values())


def solve_cvc(G: Graph, w, T: NiceTreeDecomposition, validate: bool = True) -> Solution:
    w = check_weights(G, w)
    if not is_connected(G):
        raise GraphError("connected vertex cover needs a connected graph")
    if validate:
        validate_nice(T, G)
    if G.m == 0:
        return Solution("cvc", 0, frozenset())
    tables: list = [None] * len(T.nodes)
    for nd in T.nodes:
        tab: dict = {}
        if nd.kind == LEAF:
            tab[EMPTY] = (0, None)
        elif nd.kind == INTRODUCE:
            v = nd.vertex
            child = tables[nd.children[0]]
            for P, (val, _) in child.items():
                S = _members(P)
                # v stays out: all its bag neighbours must be in the cover
                if (G.neighbors(v) & nd.bag) <= S:
                    _offer(tab, P, val, P)
                # v joins the cover
                if P == CLOSED:
                    continue
                if P == EMPTY:
                    _offer(tab, ((v,),), val + w[v], P)
                    continue
                touch = [b for b in P if any(G.has_edge(v, u) for u in b)]
                rest = [b for b in P if b not in touch]
                merged = tuple(sorted({v, *[u for b in touch for u in b]}))
                _offer(tab, _canon(rest + [merged]), val + w[v], P)
        elif nd.kind == FORGET:
            x = nd.vertex
            child = tables[nd.children[0]]
            for P, (val, _) in child.items():
                S = _members(P)
                if x not in S:
                    _offer(tab, P, val, P)
                    continue
                block = next(b for b in P if x in b)
                if len(block) > 1:
                    _offer(tab, _canon([tuple(u for u in b if u != x) for b in P]), val, P)
                elif len(P) == 1:
                    _offer(tab, CLOSED, val, P)
                # else: x's component would be cut off from the others
        else:
            t1, t2 = tables[nd.children[0]], tables[nd.children[1]]
            by_s: dict = {}
            for P2 in t2:
                by_s.setdefault(_members(P2), []).append(P2)
            for P1, (v1, _) in t1.items():
                S = _members(P1)
                ws = sum(w[u] for u in S)
                for P2 in by_s.get(S, []):
                    v2 = t2[P2][0]
                    if not S:
                        if P1 == CLOSED and P2 == CLOSED:
                            continue
                        key = CLOSED if CLOSED in (P1, P2) else EMPTY
                    else:
                        key = _merge(P1, P2)
                    _offer(tab, key, v1 + v2 - ws, (P1, P2))
        tables[nd.id] = tab
    root = tables[-1]
    if CLOSED not in root:
        raise GraphError("no connected vertex cover found")
    value = root[CLOSED][0]
    verts = _witness(T, tables)
    check_cvc(G, verts)
    if sum(w[v] for v in verts) != value:
        raise WitnessError("witness weight disagrees with table value")
    return Solution("cvc", value, verts)


def _witness(T, tables) -> frozenset:
    chosen = set()
    stack = [(len(T.nodes) - 1, CLOSED)]
    while stack:
        nid, P = stack.pop()
        chosen |= _members(P)
        nd = T.nodes[nid]
        _, back = tables[nid][P]
        if nd.kind in (INTRODUCE, FORGET):
            stack.append((nd.children[0], back))
        elif nd.kind == JOIN:
            stack.append((nd.children[0], back[0]))
            stack.append((nd.children[1], back[1]))
    return frozenset(chosen)


def check_cvc(G: Graph, S) -> None:
    S = set(S)
    for u, v in G.edges():
        if u not in S and v not in S:
            raise WitnessError(f"edge {(u, v)} uncovered")
    if len(connected_components(induced_subgraph(G, S))) > 1:
        raise WitnessError("cover is not connected")
