import pytest
from hypothesis import given, strategies as st

from conftest import semirings
from oracles import ideals as oracle_ideals, prime_elementwise, prime_idealwise
from semiring_lab.errors import NotProper
from semiring_lab.ideals import (_ideal_bits_grown, annihilator, classify, colon, enumerate_ideals,
                                 generated_ideal, hom_image, hom_kernel, hom_preimage, ideal_intersection,
                                 ideal_product, ideal_sum, is_ideal, is_prime, is_prime_elementwise,
                                 is_semisubtractive, make_ideal, nilradical, radical)
from semiring_lab.kernel import bits_of, bool2, trunc, validate_hom, zmod


def sets(S, idx):
    return [a.elements for a in idx]


def test_is_ideal_examples():
    assert is_ideal(trunc(2), [0, 2])
    assert is_ideal(zmod(5), [0])
    assert not is_ideal(zmod(4), [0, 1])


def test_enumerate_examples():
    assert sets(bool2(), enumerate_ideals(bool2())) == [(0,), (0, 1)]
    assert sets(None, enumerate_ideals(zmod(4))) == [(0,), (0, 2), (0, 1, 2, 3)]
    assert sets(None, enumerate_ideals(trunc(2))) == [(0,), (0, 2), (0, 1, 2)]


@given(semirings())
def test_enumeration_matches_oracle(S):
    want = sorted(bits_of(X) for X in oracle_ideals(S.add, S.mul))
    assert [a.bits for a in enumerate_ideals(S)] == want
    assert sorted(_ideal_bits_grown(S)) == want


def test_generated():
    assert generated_ideal(trunc(2), [1]).elements == (0, 1, 2)
    assert generated_ideal(zmod(4), [2]).elements == (0, 2)
    assert generated_ideal(zmod(4), []).elements == (0,)


def test_classify_examples():
    c = classify(trunc(2), [0, 2])
    assert c.semisubtractive and not c.subtractive
    c = classify(zmod(4), [0, 2])
    assert c.subtractive and c.semisubtractive
    assert classify(bool2(), [0, 1]).semisubtractive


def test_prime_examples():
    assert is_prime(zmod(4), [0, 2]) and not is_prime(zmod(4), [0])
    assert is_prime(bool2(), [0]) and is_prime(trunc(2), [0])
    with pytest.raises(NotProper):
        is_prime(zmod(4), [0, 1, 2, 3])


@given(semirings())
def test_prime_tests_agree_with_oracles(S):
    for a in enumerate_ideals(S):
        if len(a) == S.order:
            continue
        X = frozenset(a.elements)
        ew = is_prime_elementwise(S, a)
        assert ew == prime_elementwise(S.add, S.mul, X)
        assert is_prime(S, a) == prime_idealwise(S.add, S.mul, X)
        assert ew == is_prime(S, a)   # commutative with identity: the two notions agree


def test_calculus_examples():
    Z4, T2 = zmod(4), trunc(2)
    i = make_ideal(Z4, [0, 2])
    assert ideal_product(i, i).elements == (0,)
    assert ideal_sum(i, make_ideal(Z4, [0])) == i
    j = make_ideal(T2, [0, 2])
    assert ideal_intersection([j, make_ideal(T2, [0, 1, 2])]) == j
    assert colon(make_ideal(Z4, [0]), i).elements == (0, 2)
    assert colon(make_ideal(T2, [0]), j).elements == (0,)
    assert colon(i, make_ideal(Z4, [0, 1, 2, 3])) == i
    assert annihilator(Z4, [2]).elements == (0, 2)
    assert annihilator(bool2(), [1]).elements == (0,)


def test_radicals():
    assert radical(zmod(4), [0]).elements == (0, 2)
    assert radical(zmod(4), [0, 1, 2, 3]).elements == (0, 1, 2, 3)
    assert radical(trunc(2), [0]).elements == (0,)
    assert nilradical(zmod(4)).elements == (0, 2)


def test_hom_ideals():
    Z4, Z2 = zmod(4), zmod(2)
    phi = validate_hom(Z4, Z2, [0, 1, 0, 1])
    assert hom_kernel(phi).elements == (0, 2)
    assert hom_image(phi, make_ideal(Z4, [0, 2])).elements == (0,)
    ident = validate_hom(Z4, Z4, range(4))
    assert hom_preimage(ident, make_ideal(Z4, [0, 2])).elements == (0, 2)


@given(semirings(), st.data())
def test_sum_and_intersection_are_ideals(S, data):
    ids = enumerate_ideals(S)
    a, b = data.draw(st.sampled_from(ids)), data.draw(st.sampled_from(ids))
    s, m = ideal_sum(a, b), ideal_intersection([a, b])
    assert is_ideal(S, s) and is_ideal(S, m)
    assert a <= s and b <= s and m <= a and m <= b
    assert ideal_product(a, b) <= m


@given(semirings(), st.data())
def test_generated_is_least(S, data):
    X = data.draw(st.sets(st.sampled_from(list(S.elements))))
    g = generated_ideal(S, X)
    containing = [a for a in enumerate_ideals(S) if bits_of(X) & ~a.bits == 0]
    assert all(g <= b for b in containing) and g in containing
    assert is_ideal(S, g)


@given(semirings())
def test_semisubtractive_matches_definition(S):
    for a in enumerate_ideals(S):
        want = all(S.add[x].index(0) in a for x in a if 0 in S.add[x])
        assert is_semisubtractive(S, a) == want
