"""s-irreducible and s-strongly irreducible ideals, decompositions, arithmetic semirings.

Irreducibility is always relative to a family of ideals: ``Id(S)`` gives
the plain notions, ``Id_s(S)`` the s-notions.  Following the definitions
literally, the whole semiring counts as (strongly) irreducible.
"""

from __future__ import annotations

import functools
from typing import Iterable

from .claims import AUDIT, ELEMENT, PROVEN, REGISTRY, SET, claim, evaluate
from .errors import NotMember, NotProper
from .ideals import Ideal, _gen_bits, _ideal_bits, _prime_elementwise_bits, _ss_family_bits, as_bits
from .kernel import ElementSet, FiniteSemiring, bits_of, elements_of
from .order import IdealFamily, _cz_bits, distributivity_audit, ideal_family, maximal_semisubtractive


def _family_bits(S: FiniteSemiring, family) -> tuple[int, ...]:
    if family in (None, "semisubtractive", "s"):
        return _ss_family_bits(S)
    if family in ("all", "ideals"):
        return _ideal_bits(S)
    if isinstance(family, IdealFamily):
        return family.bits()
    return tuple(as_bits(S, a) for a in family)


def _irr(fam: tuple[int, ...], a: int) -> bool:
    for b in fam:
        if b == a or b & a != a:
            continue
        for c in fam:
            if c != a and b & c == a:
                return False
    return True


def _strong_irr(fam: tuple[int, ...], a: int) -> bool:
    outside = [b for b in fam if b & ~a]
    for b in outside:
        for c in outside:
            if b & c & ~a == 0:
                return False
    return True


def _member(S, a, family) -> tuple[tuple[int, ...], int]:
    fam = _family_bits(S, family)
    bits = as_bits(S, a)
    if bits not in fam:
        raise NotMember(f"{elements_of(bits)} is not in the family")
    return fam, bits


def is_irreducible(S: FiniteSemiring, a: ElementSet | Iterable[int], family="semisubtractive") -> bool:
    """b & b' = a (b, b' in family) forces b = a or b' = a."""
    fam, bits = _member(S, a, family)
    return _irr(fam, bits)


def is_strongly_irreducible(S: FiniteSemiring, a: ElementSet | Iterable[int], family="semisubtractive") -> bool:
    """b & b' <= a (b, b' in family) forces b <= a or b' <= a."""
    fam, bits = _member(S, a, family)
    return _strong_irr(fam, bits)


@functools.lru_cache(maxsize=None)
def _s_irr_bits(S: FiniteSemiring) -> tuple[int, ...]:
    fam = _ss_family_bits(S)
    return tuple(a for a in fam if _irr(fam, a))


@functools.lru_cache(maxsize=None)
def _s_strong_bits(S: FiniteSemiring) -> tuple[int, ...]:
    fam = _ss_family_bits(S)
    return tuple(a for a in fam if _strong_irr(fam, a))


def _meet(S: FiniteSemiring, items: Iterable[int]) -> int:
    out = S.full
    for b in items:
        out &= b
    return out


def _decompose(S: FiniteSemiring, c: int) -> list[int] | None:
    above = [b for b in _s_irr_bits(S) if c & ~b == 0 and b != S.full]
    if _meet(S, above) != c:
        return None
    keep = list(above)
    for b in above:
        rest = [k for k in keep if k != b]
        if _meet(S, rest) == c:
            keep = rest
    return keep


def irreducible_decomposition(S: FiniteSemiring, c: ElementSet | Iterable[int]) -> list[Ideal] | None:
    """An irredundant list of proper s-irreducible ideals intersecting to ``c``.

    Candidates are taken in ascending bitset order and dropped greedily
    while the intersection is unchanged.  Returns None when the
    s-irreducible ideals above ``c`` do not intersect to ``c``.
    """
    bits = as_bits(S, c)
    if bits == S.full:
        raise NotProper("decomposition needs a proper ideal")
    got = _decompose(S, bits)
    return None if got is None else [Ideal(S, b) for b in got]


def _lex_key(bits: int) -> tuple[int, ...]:
    return elements_of(bits)


def minimal_s_strongly_irreducible_above(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> Ideal | None:
    """A containment-minimal proper s-strongly irreducible ideal above ``a``.

    Ties between incomparable minimal ideals go to the lexicographically
    least sorted element tuple.  None if no proper candidate exists.
    """
    bits = as_bits(S, a)
    if bits == S.full:
        raise NotProper("needs a proper ideal")
    cands = [b for b in _s_strong_bits(S) if bits & ~b == 0 and b != S.full]
    minimal = [b for b in cands if not any(c != b and c & ~b == 0 for c in cands)]
    if not minimal:
        return None
    return Ideal(S, min(minimal, key=_lex_key))


def audit_eqsi(S: FiniteSemiring, ctx=None):
    return evaluate(REGISTRY["eqsi"], S, ctx)


def audit_abi(S: FiniteSemiring, ctx=None):
    return evaluate(REGISTRY["abi"], S, ctx)


def audit_arithmetic_theorem(S: FiniteSemiring, ctx=None) -> list:
    return [evaluate(REGISTRY[c], S, ctx) for c in ("arith", "arith.cor")]


# -- claims ------------------------------------------------------------------------

def _each_ideal(S, ctx):
    for a in _ideal_bits(S):
        yield {"c": list(elements_of(a))}


def _each_ss(S, ctx):
    for a in _ss_family_bits(S):
        yield {"c": list(elements_of(a))}


def _each_proper_ss(S, ctx):
    for a in _ss_family_bits(S):
        if a != S.full:
            yield {"c": list(elements_of(a))}


@claim("eqsi", "s-(strongly) irreducible iff (strongly) irreducible and semisubtractive",
       status=AUDIT, instances=_each_ideal, kinds={"c": SET})
def _eqsi(S, w):
    c = bits_of(w["c"])
    ids, ss = _ideal_bits(S), _ss_family_bits(S)
    if c not in ids:
        return None
    is_ss = c in ss
    s_irr = is_ss and _irr(ss, c)
    s_strong = is_ss and _strong_irr(ss, c)
    return s_irr == (is_ss and _irr(ids, c)) and s_strong == (is_ss and _strong_irr(ids, c))


def _principal_closures(S: FiniteSemiring) -> list[int]:
    return [_cz_bits(S, _gen_bits(S, 1 << x)) for x in S.elements]


@claim("abi", "s-strong irreducibility has an elementwise test via closed principal ideals",
       status=AUDIT, instances=_each_ss, kinds={"c": SET})
def _abi(S, w):
    c = bits_of(w["c"])
    ss = _ss_family_bits(S)
    if c not in ss:
        return None
    cl = _principal_closures(S)
    elementwise = all(c >> x & 1 or c >> y & 1
                      for x in S.elements for y in S.elements if cl[x] & cl[y] & ~c == 0)
    return elementwise == _strong_irr(ss, c)


def _lir_instances(S, ctx):
    for c in _ss_family_bits(S):
        if c == S.full:
            continue
        for x in S.elements:
            if x != 0 and not c >> x & 1:
                yield {"c": list(elements_of(c)), "x": x}


@claim("lir", "an element outside a proper semisubtractive ideal is avoided by an s-irreducible ideal above it",
       status=PROVEN, instances=_lir_instances, kinds={"c": SET, "x": ELEMENT})
def _lir(S, w):
    c, x = bits_of(w["c"]), w["x"]
    if c == S.full or c not in _ss_family_bits(S) or c >> x & 1 or x == 0:
        return None
    return any(c & ~b == 0 and not b >> x & 1 for b in _s_irr_bits(S))


@claim("decomp", "a proper semisubtractive ideal is the intersection of the s-irreducible ideals above it",
       status=AUDIT, instances=_each_proper_ss, kinds={"c": SET})
def _decomp(S, w):
    c = bits_of(w["c"])
    if c == S.full or c not in _ss_family_bits(S):
        return None
    return _meet(S, (b for b in _s_irr_bits(S) if c & ~b == 0)) == c


@claim("decomp.finite", "every semisubtractive ideal is a finite intersection of s-irreducible ideals",
       status=AUDIT, instances=_each_ss, kinds={"c": SET})
def _decomp_finite(S, w):
    c = bits_of(w["c"])
    if c not in _ss_family_bits(S):
        return None
    if c in _s_irr_bits(S):
        return True
    return _decompose(S, c) is not None


def _minssi_notes(S, ctx):
    return {"maximal_semisubtractive": [
        {"ideal": m.to_json(), "prime": _prime_elementwise_bits(S, m.bits)}
        for m in maximal_semisubtractive(S)]}


@claim("minssi", "a proper semisubtractive ideal lies in a minimal proper s-strongly irreducible ideal",
       status=AUDIT, instances=_each_proper_ss, kinds={"c": SET}, notes=_minssi_notes)
def _minssi(S, w):
    c = bits_of(w["c"])
    if c == S.full or c not in _ss_family_bits(S):
        return None
    return minimal_s_strongly_irreducible_above(S, c) is not None


@functools.lru_cache(maxsize=None)
def _is_arithmetic(S: FiniteSemiring) -> bool:
    return distributivity_audit(ideal_family(S)).holds


def _coincide(S: FiniteSemiring) -> bool:
    return set(_s_irr_bits(S)) == set(_s_strong_bits(S))


def _arith_instances(S, ctx):
    audit = distributivity_audit(ideal_family(S))
    if audit.holds:
        yield from _each_ss(S, ctx)
    else:
        a, b, c = audit.counterexample
        yield {"a": a.to_json(), "b": b.to_json(), "c": c.to_json()}


def _distributive_at(S, a, b, c) -> bool:
    return a & _gen_bits(S, b | c) == _gen_bits(S, (a & b) | (a & c))


@claim("arith", "arithmetic iff s-irreducible and s-strongly irreducible coincide",
       status=AUDIT, instances=_arith_instances, kinds={"a": SET, "b": SET, "c": SET})
def _arith(S, w):
    if "c" in w and len(w) == 1:
        # forward direction, one semisubtractive ideal at a time
        if not _is_arithmetic(S):
            return None
        c = bits_of(w["c"])
        if c not in _ss_family_bits(S):
            return None
        return (c in _s_irr_bits(S)) == (c in _s_strong_bits(S))
    # converse: a distributivity failure must not coexist with the two notions coinciding
    a, b, c = (bits_of(w[k]) for k in "abc")
    ids = _ideal_bits(S)
    if not all(x in ids for x in (a, b, c)) or _distributive_at(S, a, b, c):
        return None
    return not _coincide(S)


@claim("arith.cor", "in an arithmetic semiring each semisubtractive ideal is the meet of the s-strongly irreducible ideals above it",
       status=AUDIT, instances=_each_ss, kinds={"c": SET})
def _arith_cor(S, w):
    if not _is_arithmetic(S):
        return None
    c = bits_of(w["c"])
    if c not in _ss_family_bits(S):
        return None
    return _meet(S, (b for b in _s_strong_bits(S) if c & ~b == 0)) == c
