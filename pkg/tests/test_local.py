from hypothesis import given

from conftest import semirings
from semiring_lab.claims import FAIL, PASS, REGISTRY, evaluate
from semiring_lab.enumerator import are_isomorphic
from semiring_lab.ideals import enumerate_ideals, is_semisubtractive
from semiring_lab.kernel import bool2, trunc, zmod
from semiring_lab.local import (audit_sus_sums, cancellable_elements, extend_ideal, is_s_local, localize,
                                semi_units)


def test_semi_units():
    assert semi_units(bool2()).elements == (1,)
    assert semi_units(trunc(2)).elements == (1, 2)
    assert semi_units(zmod(4)).elements == (1, 3)


@given(semirings())
def test_semi_units_match_definition(S):
    E = S.elements
    want = tuple(x for x in E if x and any(S.add[1][S.mul[s][x]] == S.mul[t][x] for s in E for t in E))
    assert semi_units(S).elements == want


def test_s_local():
    v = is_s_local(zmod(4))
    assert v.s_local and v.max_ideal.elements == (0, 2) and v.nsu_agrees
    assert not is_s_local(zmod(6)).s_local
    v = is_s_local(trunc(2))
    assert v.max_ideal.elements == (0, 2) and v.non_semi_units.elements == (0,)
    assert not v.nsu_agrees


def test_sus_sums():
    for S in (zmod(4), bool2()):
        assert [f.status for f in audit_sus_sums(S)] == [PASS, PASS]
    sus, sums = audit_sus_sums(trunc(2))
    assert sus.status == FAIL and sus.witness == {"x": 2, "a": [0, 2]}
    assert sums.status == FAIL and sums.witness == {"x": 2, "a": [0, 2]}
    assert evaluate(REGISTRY["nsu"], trunc(2)).status == FAIL


def test_cancellable():
    assert cancellable_elements(bool2()).elements == (1,)
    assert cancellable_elements(zmod(4)).elements == (1, 3)
    assert cancellable_elements(trunc(2)).elements == (1,)


def test_localization_examples():
    for S in (bool2(), zmod(4), trunc(2)):
        L = localize(S)
        assert are_isomorphic(L.semiring, S)
        assert are_isomorphic(localize(S, [1]).semiring, S)
    L = localize(zmod(4))
    assert extend_ideal(L, [0]).elements == (0,)
    assert extend_ideal(L, [0, 2]).elements == tuple(sorted(L.canonical.map[x] for x in (0, 2)))
    assert extend_ideal(L, [0, 1, 2, 3]).bits == L.semiring.full


@given(semirings())
def test_extensions_stay_semisubtractive(S):
    L = localize(S)
    for a in enumerate_ideals(S):
        if is_semisubtractive(S, a):
            assert is_semisubtractive(L.semiring, extend_ideal(L, a))
