"""Word and permutation primitives."""

import pytest
from hypothesis import given, strategies as st

from clusterperm.perms import (
    DomainError,
    InvalidPermutationError,
    InvalidWordError,
    all_permutations,
    check_permutation,
    check_word,
    complement,
    divides,
    format_perm,
    left_divides,
    occurrences,
    parse_collection_text,
    parse_perm,
    reverse,
    right_divides,
    standardize,
    symmetry_orbit,
)

perm_lists = st.integers(1, 8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)
word_lists = st.lists(
    st.integers(1, 50), min_size=1, max_size=8, unique=True
)


def test_standardize_examples():
    assert standardize((5, 7, 3)) == (2, 3, 1)
    assert standardize((1,)) == (1,)
    assert standardize((10, 2, 7)) == (3, 1, 2)


@given(word_lists)
def test_standardize_is_a_permutation_and_idempotent(w):
    s = standardize(w)
    assert sorted(s) == list(range(1, len(w) + 1))
    assert standardize(s) == s


@given(word_lists)
def test_standardize_preserves_relative_order(w):
    s = standardize(w)
    for i in range(len(w)):
        for j in range(len(w)):
            assert (w[i] < w[j]) == (s[i] < s[j])


def test_check_word_rejects_bad_input():
    with pytest.raises(InvalidWordError):
        check_word(())
    with pytest.raises(InvalidWordError):
        check_word((1, 1))
    with pytest.raises(InvalidWordError):
        check_word((0, 2))


def test_check_permutation_rejects_gaps():
    with pytest.raises(InvalidPermutationError):
        check_permutation((1, 3))
    assert check_permutation([2, 1]) == (2, 1)


def test_occurrences_positions_are_one_based():
    assert occurrences((1, 2), (1, 2, 3, 4)) == [1, 2, 3]
    assert occurrences((1, 2, 3), (1, 2, 3, 4)) == [1, 2]
    assert occurrences((2, 1), (1, 2, 3, 4)) == []
    assert occurrences((1, 3, 2), (2, 4, 3, 1)) == [1]


def test_divisibility():
    assert divides((1, 3, 4, 5, 2), (1, 4, 5, 6, 2, 3))
    assert left_divides((1, 3, 4, 5, 2), (1, 4, 5, 6, 2, 3))
    assert not right_divides((1, 3, 4, 5, 2), (1, 4, 5, 6, 2, 3))
    assert right_divides((1, 2), (2, 1, 3, 4))
    assert not divides((1, 2, 3), (3, 2, 1))


@given(perm_lists)
def test_reverse_complement_involutions(p):
    p = tuple(p)
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p
    assert reverse(complement(p)) == complement(reverse(p))


@given(perm_lists)
def test_symmetry_orbit_size(p):
    orb = symmetry_orbit(tuple(p))
    assert len(orb) in (1, 2, 4)
    for m in orb:
        assert symmetry_orbit(m) == orb


def test_all_permutations_count():
    assert len(list(all_permutations(4))) == 24


@given(perm_lists)
def test_parse_format_round_trip(p):
    p = tuple(p)
    assert parse_perm(format_perm(p)) == p


def test_parse_perm_forms():
    assert parse_perm("231") == (2, 3, 1)
    assert parse_perm("2, 3, 1") == (2, 3, 1)
    assert parse_perm("10 2 3 4 5 6 7 8 9 1") == (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    with pytest.raises(InvalidPermutationError):
        parse_perm("")
    with pytest.raises(InvalidPermutationError):
        parse_perm("1b2")
    with pytest.raises(InvalidPermutationError):
        parse_perm("130")


def test_parse_collection_text():
    text = "# two patterns\n123\n\n1 3 2  # a comment\n"
    assert parse_collection_text(text) == [(1, 2, 3), (1, 3, 2)]
    with pytest.raises(DomainError):
        parse_collection_text("# nothing\n")
