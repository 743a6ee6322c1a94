"""Tree decompositions, nice tree decompositions and their validators."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DecompositionError
from .graph import Graph

LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"
KINDS = (LEAF, INTRODUCE, FORGET, JOIN)


def bag_deficiency(G: Graph, bag) -> tuple[int, list]:
    """Non-adjacent pairs inside `bag` and their number."""
    for v in bag:
        if v not in G:
            raise DecompositionError(f"bag vertex {v!r} not in graph")
    missing = G.non_edges(bag)
    return len(missing), missing


@dataclass(frozen=True)
class TreeDecomposition:
    """Unrooted tree decomposition: bags indexed 0..len-1 and tree edges."""

    bags: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, G: Graph) -> None:
        validate_tree_decomposition(self, G)


def _tree_check(n_nodes: int, edges) -> dict:
    adj = defaultdict(list)
    for a, b in edges:
        if not (0 <= a < n_nodes and 0 <= b < n_nodes) or a == b:
            raise DecompositionError(f"bad tree edge {(a, b)}")
        adj[a].append(b)
        adj[b].append(a)
    if n_nodes == 0:
        raise DecompositionError("decomposition has no nodes")
    if len(edges) != n_nodes - 1:
        raise DecompositionError("decomposition graph is not a tree (edge count)")
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != n_nodes:
        raise DecompositionError("decomposition graph is not a tree (disconnected)")
    return adj


def _check_t1_t3(bags, adj, G: Graph) -> None:
    covered = set().union(*bags) if bags else set()
    extra = covered - set(G.vertices)
    if extra:
        raise DecompositionError(f"bags mention unknown vertices {sorted(extra)}")
    missing = set(G.vertices) - covered
    if missing:
        raise DecompositionError(f"(T1) violated: vertices {sorted(missing)} in no bag")
    owner = defaultdict(list)
    for i, b in enumerate(bags):
        for v in b:
            owner[v].append(i)
    for u, v in G.edges():
        if not (set(owner[u]) & set(owner[v])):
            raise DecompositionError(f"(T2) violated: edge {(u, v)} in no bag")
    for v, nodes in owner.items():
        nodes = set(nodes)
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in nodes and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != nodes:
            raise DecompositionError(f"(T3) violated: bags containing {v!r} are not connected")


def validate_tree_decomposition(T: TreeDecomposition, G: Graph) -> None:
    adj = _tree_check(len(T.bags), T.edges)
    _check_t1_t3(T.bags, adj, G)


@dataclass(frozen=True)
class NiceNode:
    id: int
    kind: str
    bag: frozenset
    children: tuple = ()
    vertex: object = None
    missing: tuple = ()


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Rooted nice decomposition.

    Nodes are stored in post-order (children before parents); the root is
    the last node and node ids equal positions.
    """

    nodes: tuple
    parent: tuple = field(default=())

    def __post_init__(self):
        par = [-1] * len(self.nodes)
        for node in self.nodes:
            for c in node.children:
                par[c] = node.id
        object.__setattr__(self, "parent", tuple(par))

    @property
    def root(self) -> NiceNode:
        return self.nodes[-1]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @property
    def max_deficiency(self) -> int:
        return max((len(nd.missing) for nd in self.nodes), default=0)

    @property
    def width(self) -> int:
        return max((len(nd.bag) for nd in self.nodes), default=0) - 1

    def distinct_bags(self) -> list[frozenset]:
        return sorted({nd.bag for nd in self.nodes}, key=lambda b: (len(b), sorted(b)))

    def validate(self, G: Graph) -> None:
        validate_nice(self, G)

    def to_text(self, label=lambda v: v + 1) -> str:
        """One line per node: id, kind (with vertex), parent id, bag members."""
        lines = []
        for nd in self.nodes:
            kind = nd.kind if nd.vertex is None else f"{nd.kind}={label(nd.vertex)}"
            par = self.parent[nd.id]
            members = " ".join(str(label(v)) for v in sorted(nd.bag))
            lines.append(f"{nd.id} {kind} {par if par >= 0 else '-'} {members}".rstrip())
        return "\n".join(lines) + "\n"


def validate_nice(T: NiceTreeDecomposition, G: Graph) -> None:
    """Check (T1)-(T3), the nice-form rules, and the stored deficiency lists."""
    nodes = T.nodes
    if not nodes:
        raise DecompositionError("empty decomposition")
    edges = []
    for i, nd in enumerate(nodes):
        if nd.id != i:
            raise DecompositionError(f"node at position {i} has id {nd.id}")
        if nd.kind not in KINDS:
            raise DecompositionError(f"node {i}: unknown kind {nd.kind!r}")
        for c in nd.children:
            if not 0 <= c < i:
                raise DecompositionError(f"node {i}: child {c} not earlier in post-order")
            edges.append((c, i))
        kids = [nodes[c] for c in nd.children]
        if nd.kind == LEAF:
            if kids or nd.bag:
                raise DecompositionError(f"node {i}: leaf must be childless with an empty bag")
        elif nd.kind == INTRODUCE:
            if len(kids) != 1 or nd.vertex in kids[0].bag or nd.bag != kids[0].bag | {nd.vertex}:
                raise DecompositionError(f"node {i}: malformed introduce node")
        elif nd.kind == FORGET:
            if len(kids) != 1 or nd.vertex not in kids[0].bag or nd.bag != kids[0].bag - {nd.vertex}:
                raise DecompositionError(f"node {i}: malformed forget node")
        else:
            if len(kids) != 2 or kids[0].bag != nd.bag or kids[1].bag != nd.bag:
                raise DecompositionError(f"node {i}: malformed join node")
        if tuple(G.non_edges(nd.bag)) != tuple(nd.missing):
            raise DecompositionError(f"node {i}: stored deficiency list is wrong")
    if nodes[-1].bag:
        raise DecompositionError("root bag must be empty")
    adj = _tree_check(len(nodes), edges)
    _check_t1_t3([nd.bag for nd in nodes], adj, G)


class _Builder:
    def __init__(self, G: Graph):
        self.G = G
        self.nodes: list[NiceNode] = []
        self._missing_cache: dict = {}

    def _missing(self, bag):
        m = self._missing_cache.get(bag)
        if m is None:
            m = tuple(self.G.non_edges(bag))
            self._missing_cache[bag] = m
        return m

    def add(self, kind, bag, children=(), vertex=None) -> int:
        nid = len(self.nodes)
        self.nodes.append(NiceNode(nid, kind, frozenset(bag), tuple(children), vertex, self._missing(frozenset(bag))))
        return nid

    def chain(self, top: int, target: frozenset) -> int:
        """Forget then introduce vertices so that the bag of `top` becomes `target`."""
        bag = self.nodes[top].bag
        for v in sorted(bag - target):
            bag = bag - {v}
            top = self.add(FORGET, bag, (top,), v)
        for v in sorted(target - bag):
            bag = bag | {v}
            top = self.add(INTRODUCE, bag, (top,), v)
        return top


def make_nice(T: TreeDecomposition, G: Graph, root: int = 0) -> NiceTreeDecomposition:
    """Convert a tree decomposition into nice form with empty root and leaves.

    Every intermediate bag is a subset of some input bag; the node count is
    O(n * number of bags).
    """
    validate_tree_decomposition(T, G)
    adj = defaultdict(list)
    for a, b in T.edges:
        adj[a].append(b)
        adj[b].append(a)
    # iterative post-order over the rooted input tree
    order, par = [], {root: None}
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in sorted(adj[x], reverse=True):
            if y != par[x]:
                par[y] = x
                stack.append(y)
    kids = defaultdict(list)
    for x in order:
        if par[x] is not None:
            kids[par[x]].append(x)
    b = _Builder(G)
    top: dict = {}
    for x in reversed(order):
        bag = T.bags[x]
        subs = [b.chain(top[c], bag) for c in sorted(kids[x])]
        if not subs:
            subs = [b.chain(b.add(LEAF, ()), bag)]
        cur = subs[0]
        for s in subs[1:]:
            cur = b.add(JOIN, bag, (cur, s))
        top[x] = cur
    b.chain(top[root], frozenset())
    return NiceTreeDecomposition(tuple(b.nodes))


def parse_nice_text(text: str, G: Graph, label=lambda s: int(s) - 1) -> NiceTreeDecomposition:
    """Inverse of NiceTreeDecomposition.to_text."""
    rows = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith(("c ", "#")):
            continue
        parts = line.split()
        if len(parts) < 3:
            raise DecompositionError(f"line {ln}: expected 'id kind parent bag...'")
        try:
            nid = int(parts[0])
            kind, _, vert = parts[1].partition("=")
            vertex = label(vert) if vert else None
            par = -1 if parts[2] == "-" else int(parts[2])
            bag = frozenset(label(p) for p in parts[3:])
        except ValueError as exc:
            raise DecompositionError(f"line {ln}: {exc}") from None
        rows.append((nid, kind, vertex, par, bag))
    children = defaultdict(list)
    for nid, _, _, par, _ in rows:
        if par >= 0:
            children[par].append(nid)
    nodes = tuple(
        NiceNode(nid, kind, bag, tuple(sorted(children[nid])), vertex, tuple(G.non_edges(bag)))
        for nid, kind, vertex, par, bag in rows
    )
    return NiceTreeDecomposition(nodes)
