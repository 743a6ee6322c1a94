import random

import pytest

from almost_chordal.chordal import clique_tree
from almost_chordal.decomposition import (
    FORGET,
    INTRODUCE,
    JOIN,
    LEAF,
    NiceNode,
    NiceTreeDecomposition,
    TreeDecomposition,
    bag_deficiency,
    make_nice,
    parse_nice_text,
    validate_nice,
    validate_tree_decomposition,
)
from almost_chordal.errors import DecompositionError
from almost_chordal.fillin import kalmost_nice_decomposition
from almost_chordal.generators import random_almost_chordal
from almost_chordal.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph


def test_single_edge_chain():
    G = path_graph(2)
    T = make_nice(TreeDecomposition((frozenset({0, 1}),)), G)
    steps = [(nd.kind, nd.vertex) for nd in T.nodes]
    assert steps == [(LEAF, None), (INTRODUCE, 0), (INTRODUCE, 1), (FORGET, 0), (FORGET, 1)]
    assert T.root.bag == frozenset()


def test_empty_graph_single_node():
    T = make_nice(clique_tree(empty_graph(0)), empty_graph(0))
    assert len(T.nodes) == 1 and T.nodes[0].kind == LEAF


def test_p3_clique_tree_becomes_valid_nice():
    G = path_graph(3)
    T = make_nice(clique_tree(G), G)
    validate_nice(T, G)
    assert all(len(nd.children) <= 2 for nd in T.nodes)


def test_joins_are_binary_with_equal_bags():
    star = Graph(range(5), [(0, i) for i in range(1, 5)])
    T = make_nice(clique_tree(star), star)
    validate_nice(T, star)
    joins = [nd for nd in T.nodes if nd.kind == JOIN]
    assert joins
    for nd in joins:
        assert [T.nodes[c].bag for c in nd.children] == [nd.bag, nd.bag]


def test_bag_deficiency():
    G = path_graph(3)
    assert bag_deficiency(complete_graph(4), range(4)) == (0, [])
    assert bag_deficiency(empty_graph(5), range(5))[0] == 10
    assert bag_deficiency(G, [0, 1, 2]) == (1, [(0, 2)])


def test_validator_reports_t_conditions():
    G = path_graph(3)
    with pytest.raises(DecompositionError, match="T1"):
        validate_tree_decomposition(TreeDecomposition((frozenset({0, 1}),)), G)
    with pytest.raises(DecompositionError, match="not a tree"):
        validate_tree_decomposition(TreeDecomposition((frozenset({0, 1}), frozenset({2}))), G)
    with pytest.raises(DecompositionError, match="T2"):
        validate_tree_decomposition(TreeDecomposition((frozenset({0, 1}), frozenset({2}), frozenset({1})), ((0, 2), (1, 2))), G)
    bad = TreeDecomposition((frozenset({0, 1}), frozenset({1, 2}), frozenset({0})), ((0, 1), (1, 2)))
    with pytest.raises(DecompositionError, match="T3"):
        validate_tree_decomposition(bad, G)


def test_validator_rejects_broken_nice_forms():
    G = path_graph(2)
    T = make_nice(TreeDecomposition((frozenset({0, 1}),)), G)
    nodes = list(T.nodes)
    nodes[1] = NiceNode(1, INTRODUCE, frozenset({0}), (0,), 0, (("x", "y"),))
    with pytest.raises(DecompositionError, match="deficiency"):
        validate_nice(NiceTreeDecomposition(tuple(nodes)), G)
    nodes = list(T.nodes)
    nodes[2] = NiceNode(2, FORGET, frozenset({0, 1}), (1,), 1, ())
    with pytest.raises(DecompositionError):
        validate_nice(NiceTreeDecomposition(tuple(nodes)), G)


def test_text_round_trip():
    rng = random.Random(2)
    for _ in range(20):
        G = random_almost_chordal(rng.randint(3, 10), 2, rng)
        T, _ = kalmost_nice_decomposition(G, 2)
        text = T.to_text()
        again = parse_nice_text(text, G)
        assert again.to_text() == text
        validate_nice(again, G)


def test_text_format_line():
    G = path_graph(2)
    T = make_nice(TreeDecomposition((frozenset({0, 1}),)), G)
    assert T.to_text().splitlines() == ["0 leaf 1", "1 introduce=1 2 1", "2 introduce=2 3 1 2", "3 forget=1 4 2", "4 forget=2 -"]


def test_parse_rejects_garbage():
    with pytest.raises(Exception):
        parse_nice_text("0 leaf\n1 sprout=1 - 1\n", path_graph(2))


def test_c4_decomposition_deficiency_one():
    G = cycle_graph(4)
    T, A = kalmost_nice_decomposition(G, 1)
    assert A.size == 1 and T.max_deficiency == 1
    assert kalmost_nice_decomposition(G, 0) is None
