"""Equivalence checks: structural conditions, graph isomorphism, GF equality."""

from itertools import combinations, permutations

import pytest

from clusterperm.equivalence import (
    PatternBijection,
    any_monotone_corollary_bijection,
    any_theorem13_bijection,
    check_monotone_corollary,
    check_theorem13,
    classify_s5,
    graphs_isomorphic,
    separated_set,
    separation_property,
    verify_strong_equivalence,
)
from clusterperm.graph import NotReducedError, PatternCollection, build_graph
from clusterperm.perms import DomainError, occurrences, parse_perm

WILF_PAIR = (
    PatternCollection(((1, 4, 3, 2, 6, 5, 9, 8, 7),)),
    PatternCollection(((1, 3, 4, 2, 6, 5, 8, 9, 7),)),
)

# Four two-pattern collections related by swapping two adjacent middle values
# in either pattern; two of them are not reduced because the short pattern
# consecutively divides the long one.
FOUR_COLLECTIONS = [
    ((1, 4, 5, 6, 2, 3), (1, 3, 4, 5, 2)),
    ((1, 4, 5, 6, 2, 3), (1, 3, 5, 4, 2)),
    ((1, 4, 6, 5, 2, 3), (1, 3, 4, 5, 2)),
    ((1, 4, 6, 5, 2, 3), (1, 3, 5, 4, 2)),
]

# Four length-9 singletons related by the weaker overlap-set-maximum condition.
NINE_FAMILY = [
    (1, 4, 3, 2, 6, 5, 9, 8, 7),
    (1, 3, 4, 2, 6, 5, 8, 9, 7),
    (1, 4, 3, 2, 5, 6, 9, 8, 7),
    (1, 3, 4, 2, 5, 6, 8, 9, 7),
]


def test_bijection_validation():
    with pytest.raises(DomainError):
        PatternBijection((((1, 2), (1, 2)), ((2, 1), (1, 2))))
    phi = PatternBijection((((1, 2, 3), (1, 3, 2)),))
    assert phi.apply((1, 2, 3)) == (1, 3, 2)
    with pytest.raises(DomainError):
        phi.apply((2, 1, 3))


def test_condition_positive_on_wilf_pair():
    phi = any_theorem13_bijection(*WILF_PAIR)
    assert phi is not None
    report = check_theorem13(WILF_PAIR[0], WILF_PAIR[1], phi)
    assert report.ok and not report.failures


def test_condition_negative_on_different_overlaps():
    c1 = PatternCollection(((1, 2, 3),))
    c2 = PatternCollection(((1, 3, 2),))
    phi = PatternBijection((((1, 2, 3), (1, 3, 2)),))
    report = check_theorem13(c1, c2, phi)
    assert not report.ok
    assert not report.linkages_ok


def test_condition_accepts_raw_pattern_lists():
    assert any_theorem13_bijection(
        [(1, 2, 3)], [(2, 3, 1)]
    ) is None  # lengths of overlaps differ
    for a, b in combinations(FOUR_COLLECTIONS, 2):
        assert any_theorem13_bijection(a, b) is not None
    with pytest.raises(DomainError):
        check_theorem13(
            [(1, 2), (1, 2)], [(1, 2), (2, 1)],
            PatternBijection((((1, 2), (1, 2)),)),
        )


def test_two_of_the_four_collections_are_not_reduced():
    reduced = []
    for pats in FOUR_COLLECTIONS:
        try:
            PatternCollection(pats)
            reduced.append(True)
        except NotReducedError:
            reduced.append(False)
    assert reduced == [False, True, True, False]


def test_condition_insufficient_without_reducedness():
    """The structural condition holds across all four collections, yet the
    non-reduced ones have a different occurrence distribution already at n=6:
    nested occurrences inflate the counts, so the sufficient condition only
    applies to reduced collections."""

    def distribution(pats, n):
        out = {}
        for sigma in permutations(range(1, n + 1)):
            q = sum(len(occurrences(p, sigma)) for p in pats)
            out[q] = out.get(q, 0) + 1
        return out

    d = [distribution(pats, 6) for pats in FOUR_COLLECTIONS]
    assert d[0] == d[3] == {0: 708, 1: 11, 2: 1}
    assert d[1] == d[2] == {0: 707, 1: 13}
    assert d[0] != d[1]


def test_reduced_pair_of_the_four_is_equivalent():
    c1 = PatternCollection(FOUR_COLLECTIONS[1])
    c2 = PatternCollection(FOUR_COLLECTIONS[2])
    assert verify_strong_equivalence(c1, c2, 10)


def test_monotone_corollary_on_nine_family():
    cols = [(p,) for p in NINE_FAMILY]
    for a, b in combinations(cols, 2):
        assert any_monotone_corollary_bijection(a, b) is not None
    # the full condition is strictly stronger: it fails when the final
    # overlap sets differ even though their maxima agree
    weak = any_monotone_corollary_bijection(cols[0], cols[2])
    strong = any_theorem13_bijection(cols[0], cols[2])
    assert weak is not None and strong is None
    report = check_monotone_corollary(
        cols[0], cols[2], PatternBijection(((NINE_FAMILY[0], NINE_FAMILY[2]),))
    )
    assert report.ok


def test_nine_family_gf_equivalent():
    cols = [PatternCollection((p,)) for p in NINE_FAMILY]
    for a, b in combinations(cols, 2):
        assert verify_strong_equivalence(a, b, 12)


def test_graph_isomorphism():
    g1, g2 = build_graph(WILF_PAIR[0]), build_graph(WILF_PAIR[1])
    iso = graphs_isomorphic(g1, g2)
    assert iso is not None
    assert iso[(1,)] == (1,)
    assert graphs_isomorphic(g1, g1) is not None
    g3 = build_graph(PatternCollection(((1, 2, 3),)))
    g4 = build_graph(PatternCollection(((1, 3, 2),)))
    assert graphs_isomorphic(g3, g4) is None


def test_separation_property_examples():
    assert separation_property((1,), (1,))
    assert separation_property((1, 2), (2, 1))
    assert separation_property((1, 2), (1, 2))
    assert not separation_property((1,), (1, 2))


def test_separated_set():
    assert separated_set((1,), (1,), 1) == [(1, 3, 2)]
    fam = separated_set((1,), (1,), 2)
    assert fam == [(1, 3, 4, 2), (1, 4, 3, 2)]
    assert len(separated_set((1, 2), (1,), 3)) == 6
    for a, b in combinations(fam, 2):
        assert any_theorem13_bijection([a], [b]) is not None
        assert verify_strong_equivalence(
            PatternCollection((a,)), PatternCollection((b,)), 9
        )


@pytest.fixture(scope="module")
def s5_report():
    return classify_s5()


def test_s5_orbits(s5_report):
    assert s5_report["orbit_count"] == 32
    two = [o["representative"] for o in s5_report["orbits"] if o["size"] == 2]
    assert two == ["1 2 3 4 5", "1 4 3 2 5", "2 1 3 5 4", "2 5 3 1 4"]
    assert sum(1 for o in s5_report["orbits"] if o["size"] == 4) == 28


def test_s5_buckets_follow_true_overlap_profiles(s5_report):
    # 13254 has a length-3 self-overlap and 21354 a length-2 self-overlap,
    # so the no-overlap bucket has 12 orbits, not 14.
    sizes = {k: len(v) for k, v in s5_report["buckets"].items()}
    assert sizes == {"none": 12, "2": 16, "3": 3, "2,3,4": 1}
    assert "1 3 2 5 4" in s5_report["buckets"]["3"]
    assert "2 1 3 5 4" in s5_report["buckets"]["2"]


def test_s5_no_overlap_classes(s5_report):
    classes = {frozenset(grp) for grp in s5_report["classes"]["none"]}
    assert frozenset(
        ["1 3 4 5 2", "1 3 5 4 2", "1 4 3 5 2", "1 4 5 3 2", "1 5 3 4 2", "1 5 4 3 2"]
    ) in classes
    assert frozenset(["1 2 4 5 3", "1 2 5 4 3"]) in classes
    assert frozenset(["2 4 1 5 3", "2 5 1 4 3"]) in classes
    # singletons: their would-be partners have genuine self-overlaps
    assert frozenset(["1 2 3 5 4"]) in classes
    assert frozenset(["2 1 5 3 4"]) in classes


def test_s5_everything_decided(s5_report):
    assert s5_report["undecided"] == []
    assert all(len(grp) == 1 for grp in s5_report["classes"]["2"])
    assert all(len(grp) == 1 for grp in s5_report["classes"]["3"])


def test_s5_separations_include_three_overlap_pair(s5_report):
    pair = [
        s
        for s in s5_report["separations"]
        if {s["a"], s["b"]} == {"1 4 2 5 3", "1 5 2 4 3"}
    ]
    assert pair and pair[0]["q"] == 2
