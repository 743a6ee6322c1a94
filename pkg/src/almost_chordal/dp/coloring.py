"""Deciding ell-colourability over a k-almost chordal decomposition.

Bag states are partitions of the bag into independent sets.  A bag vertex
outside every missing pair is adjacent to the rest of the bag and so is
always a singleton block; only the endpoints S_t of missing pairs are
partitioned, which keeps the state count at most (2k)^(2k).
"""
from __future__ import annotations

from ..decomposition import FORGET, INTRODUCE, JOIN, LEAF, NiceTreeDecomposition, validate_nice
from ..errors import ParameterError, WitnessError
from ..graph import Graph
from ..solution import Solution


def set_partitions(items):
    """Set partitions of `items` via restricted growth strings."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def emit():
        blocks: dict = {}
        for x, b in zip(items, rgs):
            blocks.setdefault(b, []).append(x)
        return [blocks[b] for b in sorted(blocks)]

    def go(i, top):
        if i == n:
            yield emit()
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from go(i + 1, max(top, b))

    rgs[0] = 0
    yield from go(1, 0)


def _canon(blocks) -> tuple:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def bag_partitions(G: Graph, bag, missing, ell: int) -> list[tuple]:
    """Partitions of the bag into at most ell independent blocks."""
    ends = sorted({v for p in missing for v in p})
    forced = [(v,) for v in sorted(set(bag) - set(ends))]
    out = []
    for blocks in set_partitions(ends):
        if len(blocks) + len(forced) > ell:
            continue
        if all(G.is_independent(b) for b in blocks):
            out.append(_canon([tuple(b) for b in blocks] + forced))
    out.sort()
    return out


def _drop(part: tuple, v) -> tuple:
    return _canon([tuple(x for x in b if x != v) for b in part if b != (v,)])


def solve_coloring(G: Graph, ell: int, T: NiceTreeDecomposition, validate: bool = True) -> Solution:
    if ell < 1:
        raise ParameterError("ell must be at least 1")
    if validate:
        validate_nice(T, G)
    tables: list = [None] * len(T.nodes)
    counts = []
    for nd in T.nodes:
        keys = bag_partitions(G, nd.bag, nd.missing, ell)
        counts.append((nd.id, len(nd.missing), len(keys)))
        tab = {}
        if nd.kind == LEAF:
            tab[()] = None
        elif nd.kind == INTRODUCE:
            child = tables[nd.children[0]]
            for key in keys:
                ck = _drop(key, nd.vertex)
                if ck in child:
                    tab[key] = ck
        elif nd.kind == FORGET:
            child = tables[nd.children[0]]
            x = nd.vertex
            # a child partition projects to exactly one parent partition
            for ck in sorted(child):
                key = _drop(ck, x)
                if key not in tab:
                    tab[key] = ck
        else:
            t1, t2 = tables[nd.children[0]], tables[nd.children[1]]
            for key in keys:
                if key in t1 and key in t2:
                    tab[key] = key
        tables[nd.id] = tab
    ok = () in tables[-1]
    coloring = _recolor(G, T, tables, ell) if ok else None
    if coloring is not None:
        for u, v in G.edges():
            if coloring[u] == coloring[v]:
                raise WitnessError("colouring is not proper")
        if max(coloring.values(), default=0) > ell:
            raise WitnessError("colouring uses too many colours")
    sol = Solution("coloring", ok, frozenset(G.vertices) if ok else frozenset(), coloring)
    sol.extra["partition_counts"] = counts
    return sol


def _recolor(G, T, tables, ell) -> dict:
    """Assign colours top-down; a vertex is coloured where it is forgotten."""
    color: dict = {}
    stack = [(len(T.nodes) - 1, ())]
    while stack:
        nid, key = stack.pop()
        nd = T.nodes[nid]
        back = tables[nid][key]
        if nd.kind == FORGET:
            x = nd.vertex
            block = next(b for b in back if x in b)
            mates = [u for u in block if u != x]
            if mates:
                color[x] = color[mates[0]]
            else:
                used = {color[b[0]] for b in back if b != block}
                color[x] = min(c for c in range(1, ell + 1) if c not in used)
            stack.append((nd.children[0], back))
        elif nd.kind == INTRODUCE:
            stack.append((nd.children[0], back))
        elif nd.kind == JOIN:
            stack.append((nd.children[0], key))
            stack.append((nd.children[1], key))
    return color
