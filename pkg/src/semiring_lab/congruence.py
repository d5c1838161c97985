"""s-congruences: x ~ y iff x = y + d for some d in a & V(S).

``phi`` sends a semisubtractive ideal to its s-congruence and ``psi``
sends a congruence back to the class of 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from .claims import AUDIT, PROVEN, REGISTRY, SET, SETS, claim, evaluate
from .errors import NotSemisubtractive
from .ideals import Ideal, _is_ideal_bits, _ss_bits, _ss_family_bits, as_bits
from .kernel import ElementSet, FiniteSemiring, _inverse_bits, bits_of, elements_of


@dataclass(frozen=True)
class Congruence:
    owner: FiniteSemiring
    classes: tuple[tuple[int, ...], ...]   # sorted, ordered by least element

    def related(self, x: int, y: int) -> bool:
        return any(x in c and y in c for c in self.classes)

    def class_of(self, x: int) -> tuple[int, ...]:
        return next(c for c in self.classes if x in c)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


def _relation(S: FiniteSemiring, a: int) -> tuple[int, ...]:
    """rel[y] = bitset of x with x = y + d, d in a & V(S)."""
    ds = elements_of(a & _inverse_bits(S))
    return tuple(bits_of(S.add[y][d] for d in ds) for y in S.elements)


def relation_defect(S: FiniteSemiring, rel: tuple[int, ...]) -> tuple[str, tuple[int, ...]] | None:
    """First failed congruence property of a relation given as rows, with a witness."""
    E = S.elements
    for x in E:
        if not rel[x] >> x & 1:
            return "reflexive", (x,)
    for x in E:
        for y in elements_of(rel[x]):
            if not rel[y] >> x & 1:
                return "symmetric", (x, y)
    for x in E:
        for y in elements_of(rel[x]):
            if rel[y] & ~rel[x]:
                z = elements_of(rel[y] & ~rel[x])[0]
                return "transitive", (x, y, z)
    for x in E:
        for y in elements_of(rel[x]):
            for z in E:
                if not rel[S.add[x][z]] >> S.add[y][z] & 1:
                    return "additive", (x, y, z)
                if not rel[S.mul[x][z]] >> S.mul[y][z] & 1:
                    return "multiplicative", (x, y, z)
    return None


def _classes(rel: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    seen, out = 0, []
    for x, row in enumerate(rel):
        if not seen >> x & 1:
            out.append(elements_of(row))
            seen |= row
    return tuple(out)


def is_congruence(S: FiniteSemiring, classes: Iterable[Iterable[int]]) -> bool:
    cls = [bits_of(c) for c in classes]
    covered = 0
    for c in cls:
        if covered & c or not c:
            return False
        covered |= c
    if covered != S.full:
        return False
    rel = [0] * S.order
    for c in cls:
        for x in elements_of(c):
            rel[x] = c
    return relation_defect(S, tuple(rel)) is None


def s_congruence(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> Congruence:
    bits = as_bits(S, a)
    if not _is_ideal_bits(S, bits) or not _ss_bits(S, bits):
        raise NotSemisubtractive(f"{elements_of(bits)} is not a semisubtractive ideal")
    rel = _relation(S, bits)
    defect = relation_defect(S, rel)
    if defect is not None:
        raise AssertionError(f"s-congruence fails {defect[0]} at {defect[1]}")
    return Congruence(S, _classes(rel))


def ideal_of(c: Congruence) -> Ideal:
    """The class of 0."""
    return Ideal(c.owner, bits_of(c.class_of(0)))


def audit_bijection(S: FiniteSemiring, ctx=None) -> list:
    return [evaluate(REGISTRY[k], S, ctx) for k in ("bijection", "bijection.restricted", "bijection.psiphi")]


# -- claims ------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _phi_classes(S: FiniteSemiring, a: int) -> tuple[tuple[int, ...], ...]:
    return _classes(_relation(S, a))


def _psi_phi(S: FiniteSemiring, a: int) -> int:
    return bits_of(next(c for c in _phi_classes(S, a) if 0 in c))


def _each_ss(S, ctx):
    for a in _ss_family_bits(S):
        yield {"a": list(elements_of(a))}


def _bijection_instances(S, ctx, family):
    seen = []
    for a in family:
        yield {"a": list(elements_of(a))}
    for a in family:
        cls = _phi_classes(S, a)
        if cls not in seen:
            seen.append(cls)
            yield {"congruence": [list(c) for c in cls]}


def _all_round_trips(S, ctx):
    return _bijection_instances(S, ctx, _ss_family_bits(S))


def _inside_v(S: FiniteSemiring) -> tuple[int, ...]:
    v = _inverse_bits(S)
    return tuple(a for a in _ss_family_bits(S) if a & ~v == 0)


def _restricted_round_trips(S, ctx):
    return _bijection_instances(S, ctx, _inside_v(S))


def _check_round_trip(S, w, allowed) -> bool | None:
    if "a" in w:
        a = bits_of(w["a"])
        if a not in allowed:
            return None
        return _psi_phi(S, a) == a
    cls = tuple(sorted(tuple(sorted(c)) for c in w["congruence"]))
    images = {_phi_classes(S, a): a for a in allowed}
    if cls not in images:
        return None
    psi = bits_of(next(c for c in cls if 0 in c))
    if psi not in _ss_family_bits(S):
        return False
    return _phi_classes(S, psi) == cls


@claim("congruence", "the relation induced by a semisubtractive ideal is a congruence",
       status=PROVEN, instances=_each_ss, kinds={"a": SET})
def _congruence(S, w):
    a = bits_of(w["a"])
    if a not in _ss_family_bits(S):
        return None
    return relation_defect(S, _relation(S, a)) is None


@claim("bijection", "semisubtractive ideals correspond bijectively to s-congruences",
       status=AUDIT, instances=_all_round_trips,
       kinds={"a": SET, "congruence": SETS})
def _bijection(S, w):
    return _check_round_trip(S, w, _ss_family_bits(S))


@claim("bijection.restricted", "the correspondence is bijective on semisubtractive ideals inside V(S)",
       status=AUDIT, instances=_restricted_round_trips,
       kinds={"a": SET, "congruence": SETS})
def _bijection_restricted(S, w):
    return _check_round_trip(S, w, _inside_v(S))


@claim("bijection.psiphi", "the class of 0 under the s-congruence of a is a & V(S)",
       status=AUDIT, instances=_each_ss, kinds={"a": SET})
def _psiphi(S, w):
    a = bits_of(w["a"])
    if a not in _ss_family_bits(S):
        return None
    return _psi_phi(S, a) == a & _inverse_bits(S)
