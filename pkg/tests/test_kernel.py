import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import semirings
from semiring_lab.errors import AxiomViolation, BadParams, BadTables, NotAHom, ZeroEqualsOne
from semiring_lab.kernel import (FIXTURE_NAMES, additive_inverse, all_fixtures, all_homs, bool2, fixture, from_json,
                                 invertible_set, is_ring, neg, prod, relabel, trunc, validate, validate_hom,
                                 witness_violates, zmod)

from oracles import homs as oracle_homs


def _holds(A, M, axiom, w):
    # independent restatement of each axiom at a single witness
    checks = {
        "add_identity": lambda x: A[0][x] == x and A[x][0] == x,
        "add_commutative": lambda x, y: A[x][y] == A[y][x],
        "add_associative": lambda x, y, z: A[A[x][y]][z] == A[x][A[y][z]],
        "mul_identity": lambda x: M[1][x] == x and M[x][1] == x,
        "mul_commutative": lambda x, y: M[x][y] == M[y][x],
        "mul_associative": lambda x, y, z: M[M[x][y]][z] == M[x][M[y][z]],
        "zero_absorbing": lambda x: M[0][x] == 0 and M[x][0] == 0,
        "distributive": lambda x, y, z: M[x][A[y][z]] == A[M[x][y]][M[x][z]],
    }
    return checks[axiom](*w)


def test_fixtures_validate():
    assert len(all_fixtures()) == len(FIXTURE_NAMES)
    for S in all_fixtures():
        assert validate(S.add, S.mul) == S


def test_boolean_and_ring_tables():
    assert bool2().add[1][1] == 1
    assert is_ring(zmod(4)) and not is_ring(bool2()) and not is_ring(trunc(2))


def test_order_one_rejected():
    with pytest.raises(ZeroEqualsOne):
        validate([[0]], [[0]])


def test_bad_shapes():
    with pytest.raises(BadTables):
        validate([[0, 1]], [[0, 1], [1, 0]])
    with pytest.raises(BadTables):
        validate([[0, 2], [2, 0]], [[0, 0], [0, 1]])


def test_every_single_cell_mutation_of_z4_is_caught():
    S = zmod(4)
    for which, i, j, v in itertools.product((0, 1), range(4), range(4), range(4)):
        T = [[list(r) for r in S.add], [list(r) for r in S.mul]]
        if T[which][i][j] == v:
            continue
        T[which][i][j] = v
        with pytest.raises(AxiomViolation) as err:
            validate(*T)
        assert not _holds(*T, err.value.axiom, err.value.witness)
        assert witness_violates(*T, err.value.axiom, err.value.witness)


def test_inverses():
    assert additive_inverse(zmod(4), 3) == 1
    assert additive_inverse(bool2(), 1) is None
    assert additive_inverse(trunc(2), 2) is None
    assert neg(zmod(4), 1) == 3
    assert invertible_set(zmod(4)).elements == (0, 1, 2, 3)
    assert invertible_set(bool2()).elements == (0,)
    P = prod(zmod(2), bool2())
    labels = [P.label(x) for x in invertible_set(P)]
    assert labels == ["(0,0)", "(1,0)"]


def test_fixture_expressions():
    assert fixture("zmod", 4) == zmod(4)
    assert fixture("prod(zmod(2),bool2)").order == 4
    assert trunc(2).add[2][1] == 2
    with pytest.raises(BadParams):
        fixture("nonsense")


def test_from_json_moves_identities():
    S = zmod(3)
    # relabel so that zero sits at index 2 and one at 0
    perm = [2, 0, 1]
    add = [[0] * 3 for _ in range(3)]
    mul = [[0] * 3 for _ in range(3)]
    for x in range(3):
        for y in range(3):
            add[perm[x]][perm[y]] = perm[S.add[x][y]]
            mul[perm[x]][perm[y]] = perm[S.mul[x][y]]
    T = from_json({"add": add, "mul": mul, "zero": 2, "one": 0})
    assert T == S


def test_homs():
    Z4, Z2 = zmod(4), zmod(2)
    validate_hom(Z4, Z4, range(4))
    validate_hom(Z4, Z2, [x % 2 for x in range(4)])
    P = prod(zmod(2), bool2())
    proj = [int(P.label(x)[3]) for x in P.elements]   # second coordinate
    validate_hom(P, bool2(), proj)
    with pytest.raises(NotAHom):
        validate_hom(Z4, Z2, [0, 1, 1, 1])


@given(semirings(), semirings())
def test_all_homs_matches_brute_force(S, T):
    got = [h.map for h in all_homs(S, T)]
    assert got == oracle_homs(S.add, S.mul, T.add, T.mul)


@given(semirings(), st.randoms(use_true_random=False))
def test_relabelling_preserves_validity(S, rnd):
    rest = list(range(2, S.order))
    rnd.shuffle(rest)
    T = relabel(S, [0, 1, *rest])
    assert validate(T.add, T.mul) == T
    assert len(invertible_set(T)) == len(invertible_set(S))
