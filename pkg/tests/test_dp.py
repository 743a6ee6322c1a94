import pytest

from corpus import dp_corpus

from almost_chordal.chordal import clique_tree
from almost_chordal.decomposition import make_nice
from almost_chordal.dp import (
    candidate_bound,
    check_cvc,
    check_homomorphism,
    coloring_ordering_degree,
    enumerate_bag_candidates,
    is_forest,
    set_partitions,
    solve_classic,
    solve_coloring,
    solve_cvc,
    solve_d_colorable,
    solve_d_degenerate,
    solve_h_colorable,
)
from almost_chordal.errors import GraphError
from almost_chordal.fillin import Modulator, kalmost_nice_decomposition, minimal_triangulation, nice_decomposition_from_modulator
from almost_chordal.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    path_graph,
    star_graph,
    unit_weights,
)


def nice(G, k=None):
    return kalmost_nice_decomposition(G, k)[0]


def unit(G):
    return unit_weights(G)


def test_candidate_bound_values():
    assert candidate_bound(1, 0) == 2
    assert candidate_bound(1, 1) == 3
    assert candidate_bound(2, 0) == 4


def test_candidate_examples():
    fam = enumerate_bag_candidates(complete_graph(3), range(3), 1)
    assert set(fam.sets) == {frozenset(), frozenset({0}), frozenset({1}), frozenset({2})}
    P3 = path_graph(3)
    fam = enumerate_bag_candidates(P3, range(3), 1)
    assert set(fam.sets) == {frozenset(), frozenset({0}), frozenset({1}), frozenset({2}), frozenset({0, 2})}
    assert len(enumerate_bag_candidates(P3, range(3), 2)) == 8


def test_d_colorable_examples():
    C5 = cycle_graph(5)
    T = nice(C5)
    assert solve_d_colorable(C5, unit(C5), 1, T).value == 2
    assert solve_d_colorable(C5, unit(C5), 2, T).value == 4


def test_h_colorable_examples():
    C4 = cycle_graph(4)
    T = nice(C4)
    assert solve_h_colorable(C4, unit(C4), empty_graph(1), T).value == 2
    s = solve_h_colorable(C4, unit(C4), cycle_graph(4), T)
    assert s.value == 4
    check_homomorphism(C4, s.assignment, cycle_graph(4))


def test_h_equals_d_colorable_for_complete_targets():
    for G, w, T, _ in dp_corpus()[:20]:
        for d in (1, 2, 3):
            assert solve_h_colorable(G, w, complete_graph(d), T).value == solve_d_colorable(G, w, d, T).value


def test_degenerate_examples():
    K4, C5 = complete_graph(4), cycle_graph(5)
    assert solve_d_degenerate(K4, unit(K4), 1, nice(K4)).value == 2
    assert solve_d_degenerate(C5, unit(C5), 1, nice(C5)).value == 4


def test_degenerate_witnesses():
    for G, w, T, _ in dp_corpus()[:25]:
        for d in (0, 1, 2):
            s = solve_d_degenerate(G, w, d, T)
            H = induced_subgraph(G, s.vertices)
            assert coloring_ordering_degree(H, s.ordering) <= d
            assert sum(w[v] for v in s.vertices) == s.value
        assert solve_d_degenerate(G, w, 0, T).value == solve_classic("wis", G, w, T).value
        assert solve_d_degenerate(G, w, 1, T).value == solve_classic("induced-forest", G, w, T).value


def test_coloring_examples():
    C5, K4 = cycle_graph(5), complete_graph(4)
    assert solve_coloring(C5, 3, nice(C5)).value is True
    assert solve_coloring(C5, 2, nice(C5)).value is False
    assert solve_coloring(K4, 4, nice(K4)).value is True
    assert solve_coloring(K4, 3, nice(K4)).value is False


def test_coloring_witness_is_proper():
    for G, _, T, _ in dp_corpus()[:25]:
        for ell in (2, 3, 4):
            s = solve_coloring(G, ell, T)
            if s.value:
                col = s.assignment
                assert all(col[u] != col[v] for u, v in G.edges())
                assert set(col.values()) <= set(range(1, ell + 1))


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(list(range(n)))) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_cvc_examples():
    S = star_graph(3)
    assert solve_cvc(S, unit(S), nice(S)).value == 1
    C4, P4 = cycle_graph(4), path_graph(4)
    assert solve_cvc(C4, unit(C4), nice(C4)).value == 3
    s = solve_cvc(P4, unit(P4), nice(P4))
    assert s.value == 2 and s.vertices == frozenset({1, 2})
    single = empty_graph(1)
    assert solve_cvc(single, unit(single), nice(single)).value == 0


def test_cvc_needs_connected_graph():
    G = empty_graph(2)
    with pytest.raises(GraphError):
        solve_cvc(G, unit(G), nice(G))


def test_cvc_witnesses():
    for G, w, T, _ in dp_corpus():
        if G.m and len(G.vertices) > 1:
            try:
                s = solve_cvc(G, w, T)
            except GraphError:
                continue
            check_cvc(G, s.vertices)


def test_classic_examples():
    C4, C5, K4 = cycle_graph(4), cycle_graph(5), complete_graph(4)
    assert solve_classic("wvc", C4, unit(C4), nice(C4)).value == 2
    assert solve_classic("oct", C5, unit(C5), nice(C5)).value == 1
    assert solve_classic("wfvs", K4, unit(K4), nice(K4)).value == 2
    P3 = path_graph(3)
    s = solve_classic("wis", P3, unit(P3), nice(P3))
    assert s.value == 2 and s.vertices == frozenset({0, 2})
    assert solve_classic("wis", K4, {0: 1, 1: 2, 2: 3, 3: 4}, nice(K4)).value == 4


def test_classic_witnesses():
    for G, w, T, _ in dp_corpus()[:25]:
        s = solve_classic("wis", G, w, T)
        assert G.is_independent(s.vertices)
        s = solve_classic("wfvs", G, w, T)
        assert is_forest(induced_subgraph(G, set(G.vertices) - s.vertices))
        s = solve_classic("oct", G, w, T)
        assert solve_d_colorable(induced_subgraph(G, set(G.vertices) - s.vertices), None, 2,
                                 nice(induced_subgraph(G, set(G.vertices) - s.vertices))).value == \
            len(G.vertices) - len(s.vertices)


def test_value_independent_of_decomposition():
    for G, w, T, _ in dp_corpus()[:20]:
        T2 = nice_decomposition_from_modulator(G, minimal_triangulation(G))
        for d in (1, 2):
            assert solve_d_colorable(G, w, d, T).value == solve_d_colorable(G, w, d, T2).value
        assert solve_d_degenerate(G, w, 1, T).value == solve_d_degenerate(G, w, 1, T2).value
        assert solve_coloring(G, 3, T).value == solve_coloring(G, 3, T2).value
        # the full completion gives a single bag; the cost grows with its deficiency
        T3 = nice_decomposition_from_modulator(G, Modulator(frozenset(G.non_edges())))
        assert solve_d_colorable(G, w, 2, T).value == solve_d_colorable(G, w, 2, T3).value


def test_chordal_input_with_clique_tree():
    G = Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    T = make_nice(clique_tree(G), G)
    # frozen from the brute-force oracle
    assert solve_d_colorable(G, None, 1, T).value == 2
    assert solve_d_colorable(G, None, 2, T).value == 4
