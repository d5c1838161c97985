"""Semi-units, s-local semirings, and localization at cancellable elements."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from .claims import AUDIT, ELEMENT, PROVEN, REGISTRY, SET, claim, evaluate, single
from .errors import AxiomViolation, LocalizationInvalid, NotAHom
from .ideals import Ideal, _gen_bits, _ss_bits, _ss_family_bits, as_bits
from .kernel import (ElementSet, FiniteSemiring, SemiringHom, bits_of, elements_of, validate,
                     validate_hom)
from .order import maximal_semisubtractive


@functools.lru_cache(maxsize=None)
def _semi_unit_bits(S: FiniteSemiring) -> int:
    out = 0
    one_plus = S.add[1]
    for x in S.elements:
        if x == 0:
            continue
        col = [S.mul[s][x] for s in S.elements]
        lhs = {one_plus[v] for v in col}
        if lhs & set(col):
            out |= 1 << x
    return out


def semi_units(S: FiniteSemiring) -> ElementSet:
    """Nonzero x with 1 + s*x = t*x for some s, t."""
    return ElementSet(S, _semi_unit_bits(S))


@dataclass(frozen=True)
class SLocalVerdict:
    s_local: bool
    max_ideal: Ideal | None
    non_semi_units: ElementSet
    nsu_is_semisubtractive_ideal: bool
    nsu_agrees: bool

    def to_json(self) -> dict:
        return {"s_local": self.s_local,
                "max_ideal": self.max_ideal.to_json() if self.max_ideal is not None else None,
                "non_semi_units": self.non_semi_units.to_json(),
                "nsu_is_semisubtractive_ideal": self.nsu_is_semisubtractive_ideal,
                "nsu_agrees": self.nsu_agrees}


def is_s_local(S: FiniteSemiring) -> SLocalVerdict:
    """s-local means a unique maximal semisubtractive ideal.

    ``nsu_agrees`` cross-checks that characterization against the
    non-semi-unit set: the two notions of s-local must coincide, and when
    S is s-local the non-semi-units must be exactly the maximal ideal.
    """
    maxes = maximal_semisubtractive(S)
    s_local = len(maxes) == 1
    nsu = S.full & ~_semi_unit_bits(S)
    nsu_ideal = nsu in _ss_family_bits(S)
    agrees = s_local == nsu_ideal and (not s_local or maxes[0].bits == nsu)
    return SLocalVerdict(s_local, maxes[0] if s_local else None, ElementSet(S, nsu), nsu_ideal, agrees)


def audit_sus_sums(S: FiniteSemiring, ctx=None) -> list:
    return [evaluate(REGISTRY[c], S, ctx) for c in ("sus", "sums")]


def cancellable_elements(S: FiniteSemiring) -> ElementSet:
    """x with x*a = x*b only when a = b."""
    return ElementSet(S, bits_of(x for x in S.elements if len(set(S.mul[x])) == S.order))


@dataclass(frozen=True)
class LocalizedSemiring:
    base: FiniteSemiring
    X: ElementSet
    semiring: FiniteSemiring
    class_of: dict
    canonical: SemiringHom

    def fraction(self, a: int, s: int = 1) -> int:
        return self.class_of[(a, s)]

    def to_json(self) -> dict:
        return {"semiring": self.semiring.to_json(), "canonical": list(self.canonical.map)}


@functools.lru_cache(maxsize=None)
def _localize(S: FiniteSemiring, X: int) -> LocalizedSemiring:
    denoms = elements_of(X)
    if 1 not in denoms:
        raise LocalizationInvalid("denominators must contain 1")
    pairs = [(a, s) for a in S.elements for s in denoms]
    M = S.mul

    def same(p, q):
        return M[p[0]][q[1]] == M[q[0]][p[1]]

    classes: list[list[tuple[int, int]]] = []
    for p in pairs:
        for cls in classes:
            if same(p, cls[0]):
                cls.append(p)
                break
        else:
            classes.append([p])
    # transitivity: every member of a class must match every other
    for cls in classes:
        for p in cls:
            for q in cls:
                if not same(p, q):
                    raise LocalizationInvalid(f"fraction relation not transitive at {p}, {q}")
    zero = next(c for c in classes if (0, 1) in c)
    one = next(c for c in classes if (1, 1) in c)
    if zero is one:
        raise LocalizationInvalid("0/1 and 1/1 coincide")
    ordered = [zero, one] + [c for c in classes if c is not zero and c is not one]
    class_of = {p: i for i, cls in enumerate(ordered) for p in cls}
    n = len(ordered)

    def op(f):
        table = [[-1] * n for _ in range(n)]
        for i, ci in enumerate(ordered):
            for j, cj in enumerate(ordered):
                for p in ci:
                    for q in cj:
                        r = class_of[f(p, q)]
                        if table[i][j] == -1:
                            table[i][j] = r
                        elif table[i][j] != r:
                            raise LocalizationInvalid(f"operation not well defined at {p}, {q}")
        return table

    add = op(lambda p, q: (S.add[M[p[0]][q[1]]][M[q[0]][p[1]]], M[p[1]][q[1]]))
    mul = op(lambda p, q: (M[p[0]][q[0]], M[p[1]][q[1]]))
    try:
        T = validate(add, mul)
    except AxiomViolation as exc:
        raise LocalizationInvalid(f"localized tables violate {exc.axiom}", exc) from exc
    try:
        can = validate_hom(S, T, [class_of[(a, 1)] for a in S.elements])
    except NotAHom as exc:
        raise LocalizationInvalid("canonical map is not a homomorphism", exc) from exc
    return LocalizedSemiring(S, ElementSet(S, X), T, class_of, can)


def localize(S: FiniteSemiring, X: ElementSet | Iterable[int] | None = None) -> LocalizedSemiring:
    """Fractions a/s with s in X (default: all cancellable elements)."""
    bits = cancellable_elements(S).bits if X is None else as_bits(S, X)
    return _localize(S, bits)


def extend_ideal(L: LocalizedSemiring, a: ElementSet | Iterable[int]) -> Ideal:
    """a S_X: the ideal generated by the fractions x/1 with x in a."""
    bits = as_bits(L.base, a)
    return Ideal(L.semiring, _gen_bits(L.semiring, bits_of(L.canonical.map[x] for x in elements_of(bits))))


# -- claims ------------------------------------------------------------------------

def _su_in_ss(S, ctx):
    su = _semi_unit_bits(S)
    for x in elements_of(su):
        for a in _ss_family_bits(S):
            if a >> x & 1:
                yield {"x": x, "a": list(elements_of(a))}


def _element_vs_maximal(S, ctx):
    maxes = [m.bits for m in maximal_semisubtractive(S)]
    for x in S.elements:
        for m in maxes:
            yield {"x": x, "a": list(elements_of(m))}
        yield {"x": x}


@claim("sus", "a semisubtractive ideal containing a semi-unit is the whole semiring",
       status=AUDIT, instances=_su_in_ss, kinds={"x": ELEMENT, "a": SET})
def _sus(S, w):
    x, a = w["x"], bits_of(w["a"])
    if not _semi_unit_bits(S) >> x & 1 or not a >> x & 1 or a not in _ss_family_bits(S):
        return None
    return a == S.full


@claim("sums", "semi-units are exactly the elements outside every maximal semisubtractive ideal",
       status=AUDIT, instances=_element_vs_maximal, kinds={"x": ELEMENT, "a": SET})
def _sums(S, w):
    x = w["x"]
    unit = bool(_semi_unit_bits(S) >> x & 1)
    maxes = [m.bits for m in maximal_semisubtractive(S)]
    if "a" in w:
        m = bits_of(w["a"])
        if not unit or m not in maxes:
            return None
        return not m >> x & 1
    if unit:
        return None
    return any(m >> x & 1 for m in maxes)


def _nsu_notes(S, ctx):
    return is_s_local(S).to_json()


@claim("nsu", "S is s-local iff the non-semi-units form a semisubtractive ideal",
       status=AUDIT, instances=single, notes=_nsu_notes)
def _nsu(S, w):
    return is_s_local(S).nsu_agrees


def _each_ss(S, ctx):
    for a in _ss_family_bits(S):
        yield {"a": list(elements_of(a))}


@claim("psl", "extensions of semisubtractive ideals to the localization are semisubtractive",
       status=PROVEN, instances=_each_ss, kinds={"a": SET})
def _psl(S, w):
    a = bits_of(w["a"])
    if a not in _ss_family_bits(S):
        return None
    L = localize(S)
    return _ss_bits(L.semiring, extend_ideal(L, a).bits)


def _slocal_notes(S, ctx):
    return {"hypothesis": "cancellable elements disjoint from the maximal semisubtractive ideal"}


@claim("slocal", "localizing an s-local semiring gives an s-local semiring with maximal ideal m S_X",
       status=AUDIT, instances=single, notes=_slocal_notes)
def _slocal(S, w):
    maxes = maximal_semisubtractive(S)
    if len(maxes) != 1:
        return None
    m = maxes[0].bits
    L = localize(S)
    if L.X.bits & m:
        return None
    target = maximal_semisubtractive(L.semiring)
    return len(target) == 1 and target[0].bits == extend_ideal(L, m).bits
