"""Maximum-weight induced d-degenerate subgraph.

A state at node t is (pi, delta): pi orders the set S = S^ meeting the bag,
delta[i] counts the neighbours of pi[i] that come after it in some d-coloring
ordering of G[S^] extending pi.  Entries are generated forward from the
children.  For a fixed pi, a state whose delta is componentwise no larger
and whose value is no smaller dominates another (degrees only grow as
vertices are introduced), so dominated states are dropped.
"""
from __future__ import annotations

from ..decomposition import FORGET, INTRODUCE, JOIN, LEAF, NiceTreeDecomposition, validate_nice
from ..errors import ParameterError, WitnessError
from ..graph import Graph, check_weights
from ..solution import Solution


def coloring_ordering_degree(G: Graph, order) -> int:
    """Largest number of later neighbours over the ordering (inside G[order])."""
    pos = {v: i for i, v in enumerate(order)}
    best = 0
    for v in order:
        best = max(best, sum(1 for u in G.neighbors(v) if u in pos and pos[u] > pos[v]))
    return best


def _inner_delta(G: Graph, pi) -> tuple:
    return tuple(sum(1 for j in range(i + 1, len(pi)) if G.has_edge(pi[i], pi[j])) for i in range(len(pi)))


def _offer(bucket: list, delta, val, back) -> None:
    """Insert into a Pareto front of (delta, value, back) entries."""
    for i, (dl, vl, _) in enumerate(bucket):
        if vl >= val and all(a <= b for a, b in zip(dl, delta)):
            return
    bucket[:] = [e for e in bucket if not (val >= e[1] and all(a <= b for a, b in zip(delta, e[0])))]
    bucket.append((delta, val, back))


def solve_d_degenerate(G: Graph, w, d: int, T: NiceTreeDecomposition, validate: bool = True) -> Solution:
    if d < 0:
        raise ParameterError("d must be non-negative")
    w = check_weights(G, w)
    if validate:
        validate_nice(T, G)
    # tables[node][pi] = list of (delta, value, back)
    tables: list = [None] * len(T.nodes)
    for nd in T.nodes:
        tab: dict = {}
        if nd.kind == LEAF:
            tab[()] = [((), 0, None)]
        elif nd.kind == INTRODUCE:
            v = nd.vertex
            child = tables[nd.children[0]]
            for pi, bucket in child.items():
                for idx, (delta, val, _) in enumerate(bucket):
                    _offer(tab.setdefault(pi, []), delta, val, (pi, idx))
                    adj = [G.has_edge(u, v) for u in pi]
                    for p in range(len(pi) + 1):
                        dv = sum(adj[p:])
                        if dv > d:
                            continue
                        before = tuple(delta[i] + adj[i] for i in range(p))
                        if any(x > d for x in before):
                            break  # later positions only add more
                        nd_delta = before + (dv,) + delta[p:]
                        npi = pi[:p] + (v,) + pi[p:]
                        _offer(tab.setdefault(npi, []), nd_delta, val + w[v], (pi, idx))
        elif nd.kind == FORGET:
            x = nd.vertex
            child = tables[nd.children[0]]
            for pi, bucket in child.items():
                if x in pi:
                    p = pi.index(x)
                    npi = pi[:p] + pi[p + 1:]
                    for idx, (delta, val, _) in enumerate(bucket):
                        _offer(tab.setdefault(npi, []), delta[:p] + delta[p + 1:], val, (pi, idx))
                else:
                    for idx, (delta, val, _) in enumerate(bucket):
                        _offer(tab.setdefault(pi, []), delta, val, (pi, idx))
        else:
            t1, t2 = tables[nd.children[0]], tables[nd.children[1]]
            for pi, b1 in t1.items():
                b2 = t2.get(pi)
                if not b2:
                    continue
                inner = _inner_delta(G, pi)
                ws = sum(w[u] for u in pi)
                for i1, (d1, v1, _) in enumerate(b1):
                    for i2, (d2, v2, _) in enumerate(b2):
                        delta = tuple(a + b - c for a, b, c in zip(d1, d2, inner))
                        if any(x > d for x in delta):
                            continue
                        _offer(tab.setdefault(pi, []), delta, v1 + v2 - ws, (i1, i2))
        tables[nd.id] = tab
    root = tables[-1][()]
    ridx = max(range(len(root)), key=lambda i: (root[i][1], -i))
    value = root[ridx][1]
    order = _reconstruct(G, T, tables, ridx)
    verts = frozenset(order)
    if coloring_ordering_degree(G, order) > d:
        raise WitnessError("reconstructed ordering is not a d-coloring ordering")
    if sum(w[v] for v in verts) != value:
        raise WitnessError("witness weight disagrees with table value")
    return Solution("d-degenerate", value, verts, ordering=tuple(order))


def _reconstruct(G, T, tables, ridx) -> list:
    """Rebuild a full d-coloring ordering of S^ from the chosen states.

    Introduced vertices are placed right before their successor in pi;
    at joins the two child orderings are interleaved segment by segment
    between consecutive vertices of pi.
    """
    chosen: dict = {len(T.nodes) - 1: ((), ridx)}
    for nd in reversed(T.nodes):
        pi, idx = chosen[nd.id]
        _, _, back = tables[nd.id][pi][idx]
        if nd.kind in (INTRODUCE, FORGET):
            chosen[nd.children[0]] = back
        elif nd.kind == JOIN:
            chosen[nd.children[0]] = (pi, back[0])
            chosen[nd.children[1]] = (pi, back[1])
    orders: dict = {}
    for nd in T.nodes:
        pi, _ = chosen[nd.id]
        if nd.kind == LEAF:
            orders[nd.id] = []
        elif nd.kind == FORGET:
            orders[nd.id] = orders.pop(nd.children[0])
        elif nd.kind == INTRODUCE:
            o = orders.pop(nd.children[0])
            v = nd.vertex
            if v in pi:
                p = pi.index(v)
                if p + 1 < len(pi):
                    o.insert(o.index(pi[p + 1]), v)
                else:
                    o.append(v)
            orders[nd.id] = o
        else:
            o1, o2 = orders.pop(nd.children[0]), orders.pop(nd.children[1])
            marks = set(pi)
            out = []
            seg1, seg2 = _segments(o1, marks), _segments(o2, marks)
            for i in range(len(pi) + 1):
                out.extend(seg1[i])
                out.extend(seg2[i])
                if i < len(pi):
                    out.append(pi[i])
            orders[nd.id] = out
    return orders[len(T.nodes) - 1]


def _segments(order, marks) -> list:
    segs = [[]]
    for v in order:
        if v in marks:
            segs.append([])
        else:
            segs[-1].append(v)
    return segs
