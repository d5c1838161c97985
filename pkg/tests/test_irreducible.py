import pytest
from hypothesis import given

from conftest import semirings
from semiring_lab.claims import FAIL, PASS
from semiring_lab.errors import NotMember, NotProper
from semiring_lab.irreducible import (audit_abi, audit_arithmetic_theorem, audit_eqsi, irreducible_decomposition,
                                      is_irreducible, is_strongly_irreducible, minimal_s_strongly_irreducible_above)
from semiring_lab.kernel import bool2, trunc, zmod
from semiring_lab.order import semisubtractive_family


def test_irreducibility_examples():
    assert is_strongly_irreducible(zmod(4), [0, 2])
    assert not is_irreducible(zmod(6), [0])
    assert is_irreducible(bool2(), [0])
    assert is_irreducible(zmod(6), [0], family="all") is False
    with pytest.raises(NotMember):
        is_irreducible(zmod(4), [0, 1])


def test_audits():
    for S in (zmod(4), zmod(6)):
        assert audit_eqsi(S).status == PASS
        assert [f.status for f in audit_arithmetic_theorem(S)] == [PASS, PASS]
    for S in (zmod(4), bool2(), trunc(2)):
        assert audit_abi(S).status in (PASS, FAIL)


def test_decomposition():
    assert [a.elements for a in irreducible_decomposition(zmod(6), [0])] == [(0, 3), (0, 2, 4)]
    assert [a.elements for a in irreducible_decomposition(zmod(4), [0])] == [(0,)]
    assert [a.elements for a in irreducible_decomposition(bool2(), [0])] == [(0,)]
    with pytest.raises(NotProper):
        irreducible_decomposition(zmod(4), [0, 1, 2, 3])


def test_minimal_strongly_irreducible():
    assert minimal_s_strongly_irreducible_above(zmod(4), [0]).elements == (0,)
    assert minimal_s_strongly_irreducible_above(zmod(6), [0, 3]).elements == (0, 3)
    assert minimal_s_strongly_irreducible_above(bool2(), [0]).elements == (0,)


@given(semirings())
def test_decomposition_intersects_back(S):
    fam = semisubtractive_family(S)
    for a in fam:
        if a.bits == S.full:
            continue
        parts = irreducible_decomposition(S, a)
        if parts is None:
            continue
        meet = S.full
        for p in parts:
            assert is_irreducible(S, p) and a <= p
            meet &= p.bits
        assert meet == a.bits
        # irredundant
        for k in range(len(parts)):
            rest = S.full
            for j, p in enumerate(parts):
                if j != k:
                    rest &= p.bits
            assert rest != a.bits


@given(semirings())
def test_strong_implies_plain(S):
    for a in semisubtractive_family(S):
        if is_strongly_irreducible(S, a):
            assert is_irreducible(S, a)
