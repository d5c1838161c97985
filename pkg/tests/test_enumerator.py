import pytest
from hypothesis import given, strategies as st

from conftest import semirings
from semiring_lab.enumerator import (are_isomorphic, cached_corpus, canonical_form, enumerate_semirings,
                                     enumerate_semirings_naive, read_corpus, write_corpus)
from semiring_lab.errors import OrderTooLarge
from semiring_lab.kernel import bool2, relabel, validate, zmod

# frozen after the orderly search and the filter-all-tables search agreed
CLASS_COUNTS = {2: 2, 3: 6, 4: 36, 5: 228}


def test_small_orders():
    assert enumerate_semirings(1) == []
    two = enumerate_semirings(2)
    assert len(two) == 2
    assert {are_isomorphic(S, bool2()) or are_isomorphic(S, zmod(2)) for S in two} == {True}


@pytest.mark.parametrize("n", [2, 3])
def test_orderly_matches_naive(n):
    a = [S.encoding() for S in enumerate_semirings(n)]
    b = [S.encoding() for S in enumerate_semirings_naive(n)]
    assert a == b and len(a) == CLASS_COUNTS[n]


@pytest.mark.slow
def test_orderly_matches_naive_order4():
    assert [S.encoding() for S in enumerate_semirings(4)] == [S.encoding() for S in enumerate_semirings_naive(4)]


@pytest.mark.slow
def test_order5_count():
    assert len(enumerate_semirings(5)) == CLASS_COUNTS[5]


def test_emitted_semirings_are_valid_canonical_and_sorted():
    items = enumerate_semirings(4)
    assert len(items) == CLASS_COUNTS[4]
    for S in items:
        assert validate(S.add, S.mul) == S
        assert canonical_form(S) == S
    assert [S.encoding() for S in items] == sorted(S.encoding() for S in items)


def test_cap():
    with pytest.raises(OrderTooLarge):
        enumerate_semirings(7)


def test_isomorphism_examples():
    assert not are_isomorphic(bool2(), zmod(2))
    assert are_isomorphic(zmod(4), zmod(4))


@given(semirings(), st.randoms(use_true_random=False))
def test_canonical_form_invariant(S, rnd):
    rest = list(range(2, S.order))
    rnd.shuffle(rest)
    T = relabel(S, [0, 1, *rest])
    c = canonical_form(S)
    assert canonical_form(T) == c
    assert canonical_form(c) == c


def test_corpus_roundtrip(tmp_path):
    items = enumerate_semirings(3)
    write_corpus(items, tmp_path / "c.jsonl")
    assert read_corpus(tmp_path / "c.jsonl") == items
    assert cached_corpus(3, tmp_path) == items
    assert (tmp_path / "corpus-v1-n3.jsonl").exists()
    assert cached_corpus(3, tmp_path) == items
