import pytest
from hypothesis import given, strategies as st

from conftest import semirings
from oracles import closure as oracle_closure, ss_ideals
from semiring_lab.claims import FAIL, evaluate, REGISTRY
from semiring_lab.errors import NotClosed
from semiring_lab.ideals import enumerate_ideals, generated_ideal
from semiring_lab.kernel import bits_of, bool2, trunc, validate, zmod
from semiring_lab.order import (covering_pairs, golan_closure, hasse_dot, ideal_family,
                                is_arithmetic, make_family, maximal_semisubtractive, modularity_audit,
                                semisubtractive_family)

# two order-5 semirings whose semisubtractive ideals do not form a modular lattice
NONMODULAR_5 = (0, 1, 2, 3, 4, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 3, 1, 2, 3, 2, 4, 1, 2, 2, 4,
                0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 0, 2, 0, 0, 0, 0, 3, 0, 0, 0, 0, 4, 0, 0, 0)


def _decode(enc):
    n = int((len(enc) // 2) ** 0.5)
    h = n * n
    return validate([enc[r * n:(r + 1) * n] for r in range(n)], [enc[h + r * n:h + (r + 1) * n] for r in range(n)])


def test_families():
    assert [a.elements for a in semisubtractive_family(bool2())] == [(0,), (0, 1)]
    assert len(semisubtractive_family(zmod(4))) == 3
    assert len(semisubtractive_family(trunc(2))) == 3


def test_closure_examples():
    for S in (bool2(), zmod(4), trunc(2), zmod(6)):
        assert golan_closure(S, [0]).elements == (0,)
        assert golan_closure(S, list(S.elements)).bits == S.full
    assert golan_closure(trunc(2), [0, 2]).elements == (0, 2)


@given(semirings())
def test_closure_methods_agree_with_oracle(S):
    for a in enumerate_ideals(S):
        fp = golan_closure(S, a)
        assert fp == golan_closure(S, a, method="oracle")
        assert fp.elements == tuple(sorted(oracle_closure(S.add, S.mul, frozenset(a.elements))))


@given(semirings(), st.data())
def test_closure_is_a_closure_operator(S, data):
    ids = enumerate_ideals(S)
    a, b = data.draw(st.sampled_from(ids)), data.draw(st.sampled_from(ids))
    ca = golan_closure(S, a)
    assert a <= ca
    assert golan_closure(S, ca) == ca
    if a <= b:
        assert ca <= golan_closure(S, b)


@given(semirings())
def test_semisubtractive_family_matches_oracle(S):
    want = sorted(bits_of(X) for X in ss_ideals(S.add, S.mul))
    assert list(semisubtractive_family(S).bits()) == want


def test_lattice_audits_on_chains():
    for S in (zmod(4), bool2(), trunc(2)):
        assert modularity_audit(semisubtractive_family(S)).holds
    for S in (zmod(4), bool2(), zmod(6)):
        assert is_arithmetic(S).holds


def test_nonmodular_example():
    S = _decode(NONMODULAR_5)
    audit = modularity_audit(semisubtractive_family(S))
    assert not audit.holds
    f = evaluate(REGISTRY["modular"], S)
    assert f.status == FAIL
    a, b, c = (bits_of(f.witness[k]) for k in "abc")
    lhs = generated_ideal(S, a | c).bits & b
    rhs = generated_ideal(S, a | (c & b)).bits
    assert a & ~b == 0 and lhs != rhs


def test_audit_needs_a_lattice():
    S = zmod(6)
    fam = make_family(S, [m for m in ideal_family(S) if m.elements in ((0, 3), (0, 2, 4))])
    with pytest.raises(NotClosed):
        modularity_audit(fam)


def test_maximal():
    assert [m.elements for m in maximal_semisubtractive(zmod(4))] == [(0, 2)]
    assert [m.elements for m in maximal_semisubtractive(bool2())] == [(0,)]
    assert sorted(m.elements for m in maximal_semisubtractive(zmod(6))) == [(0, 2, 4), (0, 3)]


def test_hasse():
    assert len(covering_pairs(ideal_family(bool2()))) == 1
    dot = hasse_dot(ideal_family(zmod(6)))
    assert dot.count("[label=") == 4 and dot.count("->") == 4
    assert hasse_dot(ideal_family(zmod(4))).count("->") == 2
