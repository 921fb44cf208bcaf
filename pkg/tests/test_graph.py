"""Pattern collections, overlaps, linkages, and the overlap graph."""

import pytest
from hypothesis import given, strategies as st

from clusterperm.graph import (
    EdgeLabel,
    NotReducedError,
    PatternCollection,
    build_graph,
    collection,
    enumerate_linkages,
    graph_to_dot,
    k_overlaps,
    linkage_lengths,
    overlap_lengths,
    reduce_collection,
)
from clusterperm.perms import DomainError, occurrences, standardize

small_perm = st.integers(2, 5).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


def test_k_overlaps_examples():
    assert k_overlaps((1, 2, 3), (1, 2, 3), 1)
    assert k_overlaps((1, 2, 3), (1, 2, 3), 2)
    assert not k_overlaps((1, 3, 2), (1, 3, 2), 2)
    # suffix (2,5,4) and prefix (1,3,2) standardize equally
    assert k_overlaps((1, 3, 2, 5, 4), (1, 3, 2, 5, 4), 3)
    assert k_overlaps((2, 1, 3, 5, 4), (2, 1, 3, 5, 4), 2)


def test_overlap_lengths_excludes_full_overlap():
    assert overlap_lengths((1, 2, 3), (1, 2, 3)) == [1, 2]
    assert overlap_lengths((1, 2), (1, 2, 3)) == [1]
    assert overlap_lengths((1, 3, 2, 5, 4), (1, 3, 2, 5, 4)) == [1, 3]


def test_linkage_lengths():
    assert linkage_lengths((1, 2, 3), (1, 2, 3)) == {4, 5}
    assert linkage_lengths((1, 3, 2), (1, 3, 2)) == {5}


def test_enumerate_linkages_identity_pattern():
    assert enumerate_linkages((1, 2, 3), (1, 2, 3), 4) == [(1, 2, 3, 4)]
    out = enumerate_linkages((1, 2, 3), (1, 2, 3), 5)
    assert out == [(1, 2, 3, 4, 5)]


@given(small_perm, small_perm)
def test_enumerate_linkages_are_genuine(pi, pip):
    l, lp = len(pi), len(pip)
    for n in sorted(linkage_lengths(pi, pip)):
        words = enumerate_linkages(pi, pip, n)
        assert words, f"no linkage of length {n} for ({pi},{pip})"
        for w in words:
            assert standardize(w[:l]) == pi
            assert standardize(w[n - lp :]) == pip
            # the two windows genuinely share a position
            assert l + lp > n


def test_pattern_collection_requires_reduced():
    with pytest.raises(NotReducedError) as err:
        PatternCollection(((1, 4, 5, 6, 2, 3), (1, 3, 4, 5, 2)))
    assert err.value.divisor == (1, 3, 4, 5, 2)
    assert err.value.multiple == (1, 4, 5, 6, 2, 3)
    with pytest.raises(DomainError):
        PatternCollection(((1, 2, 3), (1, 2, 3)))


def test_reduce_collection_drops_multiples():
    red = reduce_collection([(1, 4, 5, 6, 2, 3), (1, 3, 4, 5, 2)])
    assert red.patterns == ((1, 3, 4, 5, 2),)
    assert collection([(1, 2, 3)]).patterns == ((1, 2, 3),)


def test_collection_symmetries():
    c = PatternCollection(((1, 2, 3), (2, 1, 3)))
    assert set(c.reversed().patterns) == {(3, 2, 1), (3, 1, 2)}
    assert set(c.complemented().patterns) == {(3, 2, 1), (2, 3, 1)}


def test_build_graph_vertices():
    g = build_graph(PatternCollection(((1, 2, 3),)))
    assert set(g.vertices) == {(1,), (1, 2)}
    assert g.distinguished == (1,)


def test_build_graph_two_vertex_example():
    g = build_graph(PatternCollection(((1, 5, 7, 6, 2, 4, 3), (1, 3, 2, 5, 4))))
    assert set(g.vertices) == {(1,), (1, 3, 2)}
    labels = sorted(
        (e.source, e.target, e.label.mu_i, e.label.mu_f, e.label.length)
        for e in g.edges
    )
    assert labels == [
        ((1,), (1,), (1,), (3,), 7),
        ((1,), (1,), (1,), (4,), 5),
        ((1,), (1, 3, 2), (1,), (2, 3, 4), 7),
        ((1,), (1, 3, 2), (1,), (2, 4, 5), 5),
        ((1, 3, 2), (1,), (1, 2, 3), (4,), 5),
        ((1, 3, 2), (1, 3, 2), (1, 2, 3), (2, 4, 5), 5),
    ]


def test_edge_label_rendering():
    lab = EdgeLabel((1,), (2, 3, 4), 7)
    assert str(lab) == "({1},{2,3,4};7)"


def test_graph_to_dot():
    dot = graph_to_dot(build_graph(PatternCollection(((1, 2, 3),))))
    assert dot.startswith("digraph")
    assert "1 2" in dot or "(1, 2)" in dot or "12" in dot


def test_deterministic_edge_order():
    coll = PatternCollection(((1, 2, 3), (2, 1, 3)))
    g1, g2 = build_graph(coll), build_graph(coll)
    assert g1.edges == g2.edges
    assert g1.vertices == g2.vertices
