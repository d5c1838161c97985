from hypothesis import given

from conftest import semirings
from semiring_lab.kernel import bool2, trunc, validate_hom, zmod
from semiring_lab.topology import (build_space, check_connected, check_quasi_compact, check_sober, check_T0,
                                   closure, induced_map, scir_holds)


def test_spaces():
    X = build_space(bool2())
    assert X.size == 2 and len(X.closed_sets) == 3
    assert build_space(zmod(4)).size == 3 and len(build_space(zmod(4)).closed_sets) == 4
    assert build_space(trunc(2)).size == 3


def test_checks_on_fixtures():
    for S in (bool2(), zmod(4), trunc(2), zmod(6)):
        X = build_space(S)
        assert check_T0(X).holds and check_sober(X).holds
        assert check_connected(X).holds
        assert check_quasi_compact(X).holds


def test_induced_map_z4_to_z2():
    m = induced_map(validate_hom(zmod(4), zmod(2), [0, 1, 0, 1]))
    assert m.well_defined and m.continuous and m.homeomorphism
    assert m.point_map == (1, 2)


@given(semirings())
def test_closed_sets_form_a_topology(S):
    X = build_space(S)
    closed = set(X.closed_sets)
    assert 0 in closed and X.whole in closed
    for a in closed:
        for b in closed:
            assert a | b in closed and a & b in closed
    for i in range(X.size):
        assert closure(X, 1 << i) == X.subbasis[i]
        assert scir_holds(X, i)
