"""Golan closure, the lattice of semisubtractive ideals, and Hasse export."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable

from .claims import AUDIT, PROVEN, SET, SETS, claim, single
from .errors import NotClosed
from .ideals import (Ideal, _gen_bits, _ideal_bits, _radical_bits, _ss_bits, _ss_family_bits,
                     as_bits, enumerate_ideals)
from .kernel import ElementSet, FiniteSemiring, _inverse_bits, bits_of, elements_of


@dataclass(frozen=True)
class IdealFamily:
    owner: FiniteSemiring
    members: tuple[Ideal, ...]
    poset: tuple[tuple[bool, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def index(self, a: ElementSet) -> int:
        return [m.bits for m in self.members].index(a.bits)

    def bits(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)


def make_family(S: FiniteSemiring, members: Iterable[Ideal]) -> IdealFamily:
    ms = tuple(members)
    if len({m.bits for m in ms}) != len(ms):
        raise ValueError("family members must be distinct")
    poset = tuple(tuple(a.bits & ~b.bits == 0 for b in ms) for a in ms)
    return IdealFamily(S, ms, poset)


def ideal_family(S: FiniteSemiring) -> IdealFamily:
    """Id(S)."""
    return make_family(S, enumerate_ideals(S))


def semisubtractive_family(S: FiniteSemiring) -> IdealFamily:
    """Id_s(S), ascending bitset order."""
    return make_family(S, (Ideal(S, b) for b in _ss_family_bits(S)))


# -- Golan closure ----------------------------------------------------------------

def _cz_oracle_bits(S: FiniteSemiring, bits: int) -> int:
    out = S.full
    for b in _ss_family_bits(S):
        if bits & ~b == 0:
            out &= b
    return out


@functools.lru_cache(maxsize=None)
def _cz_bits(S: FiniteSemiring, bits: int) -> int:
    inv = _inverse_bits(S)
    cur = _gen_bits(S, bits)
    for _ in range(S.order + 1):
        negs = 0
        for x in elements_of(cur & inv):
            negs |= 1 << S.add[x].index(0)
        if negs & ~cur == 0:
            return cur
        cur = _gen_bits(S, cur | negs)
    raise AssertionError("closure did not stabilise")  # strict growth bounds the rounds


def golan_closure(S: FiniteSemiring, a: ElementSet | Iterable[int], method: str = "fixed_point") -> Ideal:
    """Smallest semisubtractive ideal containing ``a``.

    ``method="fixed_point"`` adjoins missing additive inverses and re-closes
    until stable; ``method="oracle"`` intersects every semisubtractive ideal
    above ``a``.
    """
    bits = as_bits(S, a)
    if method == "fixed_point":
        return Ideal(S, _cz_bits(S, bits))
    if method == "oracle":
        return Ideal(S, _cz_oracle_bits(S, bits))
    raise ValueError(f"unknown method {method!r}")


# -- lattice audits -------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeAudit:
    law: str
    holds: bool
    counterexample: tuple[Ideal, Ideal, Ideal] | None = None

    def to_json(self) -> dict:
        return {"law": self.law, "holds": self.holds,
                "counterexample": [c.to_json() for c in self.counterexample] if self.counterexample else None}


def _check_closed(fam: IdealFamily) -> None:
    S = fam.owner
    present = set(fam.bits())
    for a in present:
        for b in present:
            if a & b not in present:
                raise NotClosed(f"family not closed under intersection: {elements_of(a & b)}")
            if _gen_bits(S, a | b) not in present:
                raise NotClosed("family not closed under ideal sum")


def modularity_audit(fam: IdealFamily) -> LatticeAudit:
    """Check (a+c) & b <= a + (c & b) for all a <= b, c in the family."""
    _check_closed(fam)
    S = fam.owner
    ms = fam.members
    for a in ms:
        for b in ms:
            if a.bits & ~b.bits:
                continue
            for c in ms:
                lhs = _gen_bits(S, a.bits | c.bits) & b.bits
                rhs = _gen_bits(S, a.bits | (c.bits & b.bits))
                if lhs & ~rhs:
                    return LatticeAudit("modular", False, (a, b, c))
    return LatticeAudit("modular", True)


def distributivity_audit(fam: IdealFamily) -> LatticeAudit:
    """Check a & (b+c) == (a&b) + (a&c) for all triples."""
    S = fam.owner
    ms = fam.members
    for a in ms:
        for b in ms:
            for c in ms:
                lhs = a.bits & _gen_bits(S, b.bits | c.bits)
                rhs = _gen_bits(S, (a.bits & b.bits) | (a.bits & c.bits))
                if lhs != rhs:
                    return LatticeAudit("distributive", False, (a, b, c))
    return LatticeAudit("distributive", True)


def is_arithmetic(S: FiniteSemiring) -> LatticeAudit:
    """Arithmetic means the lattice Id(S) is distributive."""
    return distributivity_audit(ideal_family(S))


def maximal_semisubtractive(S: FiniteSemiring) -> list[Ideal]:
    proper = [b for b in _ss_family_bits(S) if b != S.full]
    return [Ideal(S, b) for b in proper
            if not any(c != b and b & ~c == 0 for c in proper)]


# -- Hasse export ----------------------------------------------------------------------

def covering_pairs(fam: IdealFamily) -> list[tuple[int, int]]:
    """Index pairs (i, j) where member i is covered by member j."""
    n = len(fam)
    le = fam.poset
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or not le[i][j]:
                continue
            if not any(k not in (i, j) and le[i][k] and le[k][j] for k in range(n)):
                out.append((i, j))
    return out


def hasse_dot(fam: IdealFamily, name: str = "ideals") -> str:
    S = fam.owner
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, m in enumerate(fam.members):
        label = "{" + ",".join(S.label(x) for x in m) + "}"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in covering_pairs(fam):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- claims ------------------------------------------------------------------------

def _each_ideal(S, ctx):
    for a in _ideal_bits(S):
        yield {"a": list(elements_of(a))}


def _ideal_pairs(S, ctx):
    ids = _ideal_bits(S)
    for a in ids:
        for b in ids:
            yield {"a": list(elements_of(a)), "b": list(elements_of(b))}


def _ideal_pairs_and_whole(S, ctx):
    yield from _ideal_pairs(S, ctx)
    yield {"family": [list(elements_of(a)) for a in _ideal_bits(S)]}


def _proper_ss(S, ctx):
    for a in _ss_family_bits(S):
        if a != S.full:
            yield {"a": list(elements_of(a))}


def _ss_triples(S, ctx):
    fam = _ss_family_bits(S)
    for a in fam:
        for b in fam:
            if a & ~b:
                continue
            for c in fam:
                yield {"a": list(elements_of(a)), "b": list(elements_of(b)), "c": list(elements_of(c))}


@claim("mxc", "every proper semisubtractive ideal lies in a maximal one", status=PROVEN,
       instances=_proper_ss, kinds={"a": SET})
def _mxc(S, w):
    a = bits_of(w["a"])
    return any(a & ~m.bits == 0 for m in maximal_semisubtractive(S))


@claim("modular", "the semisubtractive ideals form a modular lattice", status=AUDIT,
       instances=_ss_triples, kinds={"a": SET, "b": SET, "c": SET})
def _modular(S, w):
    a, b, c = (bits_of(w[k]) for k in "abc")
    lhs = _gen_bits(S, a | c) & b
    rhs = _gen_bits(S, a | (c & b))
    return lhs & ~rhs == 0


@claim("lclk.1", "the closure is the smallest semisubtractive ideal containing the ideal",
       status=PROVEN, instances=_each_ideal, kinds={"a": SET})
def _lclk1(S, w):
    a = bits_of(w["a"])
    c = _cz_bits(S, a)
    if c != _cz_oracle_bits(S, a):
        return False
    if a & ~c or not _ss_bits(S, c):
        return False
    return all(c & ~b == 0 for b in _ss_family_bits(S) if a & ~b == 0)


@claim("lclk.2", "closure of the zero ideal is zero", status=PROVEN, instances=single)
def _lclk2(S, w):
    return _cz_bits(S, 1) == 1


@claim("lclk.3", "closure of S is S", status=PROVEN, instances=single)
def _lclk3(S, w):
    return _cz_bits(S, S.full) == S.full


@claim("lclk.4", "closure is idempotent", status=PROVEN, instances=_each_ideal, kinds={"a": SET})
def _lclk4(S, w):
    c = _cz_bits(S, bits_of(w["a"]))
    return _cz_bits(S, c) == c


@claim("lclk.5", "closure is monotone", status=PROVEN, instances=_ideal_pairs,
       kinds={"a": SET, "b": SET})
def _lclk5(S, w):
    a, b = bits_of(w["a"]), bits_of(w["b"])
    if a & ~b:
        return None
    return _cz_bits(S, a) & ~_cz_bits(S, b) == 0


@claim("lclk.6", "closure of a join contains both closures", status=PROVEN,
       instances=_ideal_pairs, kinds={"a": SET, "b": SET})
def _lclk6(S, w):
    a, b = bits_of(w["a"]), bits_of(w["b"])
    j = _cz_bits(S, _gen_bits(S, a | b))
    return (_cz_bits(S, a) | _cz_bits(S, b)) & ~j == 0


@claim("lclk.7", "closure commutes with intersections", status=AUDIT,
       instances=_ideal_pairs_and_whole, kinds={"a": SET, "b": SET, "family": SETS})
def _lclk7(S, w):
    fam = [bits_of(x) for x in w["family"]] if "family" in w else [bits_of(w["a"]), bits_of(w["b"])]
    meet, meet_cz = S.full, S.full
    for a in fam:
        meet &= a
        meet_cz &= _cz_bits(S, a)
    return _cz_bits(S, meet) == meet_cz


@claim("lclk.8", "an ideal is semisubtractive iff it equals its closure", status=PROVEN,
       instances=_each_ideal, kinds={"a": SET})
def _lclk8(S, w):
    a = bits_of(w["a"])
    return _ss_bits(S, a) == (_cz_bits(S, a) == a)


@claim("lclk.9", "cz(a+b) = cz(cz(a)+cz(b))", status=PROVEN, instances=_ideal_pairs,
       kinds={"a": SET, "b": SET})
def _lclk9(S, w):
    a, b = bits_of(w["a"]), bits_of(w["b"])
    lhs = _cz_bits(S, _gen_bits(S, a | b))
    rhs = _cz_bits(S, _gen_bits(S, _cz_bits(S, a) | _cz_bits(S, b)))
    return lhs == rhs


@claim("lclk.10", "closure lies inside the radical", status=PROVEN, instances=_each_ideal,
       kinds={"a": SET})
def _lclk10(S, w):
    a = bits_of(w["a"])
    return _cz_bits(S, a) & ~_radical_bits(S, a) == 0
