"""Ideals of a finite semiring and the ideal calculus built on them."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .claims import HOM, PROVEN, RAW, SET, SETS, claim
from .errors import EmptySubset, NotAnIdeal, NotProper, NotSurjective, OwnerMismatch
from .kernel import (ElementSet, FiniteSemiring, SemiringHom, _inverse_bits, bits_of, elements_of,
                     hom_from_witness, hom_instances)

# naive 2^n subset filter below this order, generator growth above
NAIVE_ENUMERATION_MAX_ORDER = 10


class Ideal(ElementSet):
    """An element set known to be an ideal of its owner."""

    def __repr__(self) -> str:
        return "Ideal" + super().__repr__()


def as_bits(S: FiniteSemiring, X: ElementSet | Iterable[int] | int) -> int:
    """Bitset of ``X``; a plain int is taken to already be a bitset."""
    if isinstance(X, int):
        if X < 0 or X >> S.order:
            raise ValueError(f"bitset {X:#b} out of range for order {S.order}")
        return X
    if isinstance(X, ElementSet):
        if X.owner is not S and X.owner != S:
            raise OwnerMismatch("element set belongs to a different semiring")
        return X.bits
    bits = bits_of(X)
    if bits >> S.order:
        raise ValueError(f"elements out of range for order {S.order}")
    return bits


def make_ideal(S: FiniteSemiring, X: ElementSet | Iterable[int]) -> Ideal:
    """Wrap ``X`` as an :class:`Ideal`, raising :class:`NotAnIdeal` if it is not one."""
    bits = as_bits(S, X)
    if not _is_ideal_bits(S, bits):
        raise NotAnIdeal(f"{elements_of(bits)} is not an ideal")
    return Ideal(S, bits)


def _same_owner(*sets: ElementSet) -> FiniteSemiring:
    S = sets[0].owner
    for a in sets[1:]:
        if a.owner is not S and a.owner != S:
            raise OwnerMismatch("ideals belong to different semirings")
    return S


def _is_ideal_bits(S: FiniteSemiring, bits: int) -> bool:
    if not bits & 1:
        return False
    xs = elements_of(bits)
    for x in xs:
        ax, mx = S.add[x], S.mul[x]
        for y in xs:
            if not bits >> ax[y] & 1:
                return False
        for s in S.elements:
            if not bits >> mx[s] & 1:
                return False
    return True


def is_ideal(S: FiniteSemiring, X: ElementSet | Iterable[int]) -> bool:
    return _is_ideal_bits(S, as_bits(S, X))


@functools.lru_cache(maxsize=1 << 18)
def _gen_bits(S: FiniteSemiring, bits: int) -> int:
    bits |= 1
    # a multiple-closed set stays multiple-closed under sums, so close once
    # under multiplication and then iterate sums
    mult = 0
    for x in elements_of(bits):
        for s in S.elements:
            mult |= 1 << S.mul[s][x]
    bits = mult | 1
    frontier = elements_of(bits)
    while True:
        new = 0
        xs = elements_of(bits)
        for x in frontier:
            ax = S.add[x]
            for y in xs:
                z = ax[y]
                if not bits >> z & 1:
                    new |= 1 << z
        if not new:
            return bits
        bits |= new
        frontier = elements_of(new)


def generated_ideal(S: FiniteSemiring, X: ElementSet | Iterable[int]) -> Ideal:
    """Smallest ideal containing ``X``."""
    return Ideal(S, _gen_bits(S, as_bits(S, X)))


@functools.lru_cache(maxsize=None)
def _ideal_bits(S: FiniteSemiring) -> tuple[int, ...]:
    if S.order <= NAIVE_ENUMERATION_MAX_ORDER:
        return _ideal_bits_naive(S)
    return _ideal_bits_grown(S)


def _ideal_bits_naive(S: FiniteSemiring) -> tuple[int, ...]:
    return tuple(b for b in range(1, S.full + 1, 2) if _is_ideal_bits(S, b))


def _ideal_bits_grown(S: FiniteSemiring) -> tuple[int, ...]:
    # every ideal is reached from {0} by adjoining generators one at a time
    seen = {1}
    stack = [1]
    while stack:
        b = stack.pop()
        for x in S.elements:
            if not b >> x & 1:
                c = _gen_bits(S, b | 1 << x)
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
    return tuple(sorted(seen))


def enumerate_ideals(S: FiniteSemiring) -> list[Ideal]:
    """All ideals of ``S`` in ascending bitset order."""
    return [Ideal(S, b) for b in _ideal_bits(S)]


@dataclass(frozen=True)
class IdealClassification:
    proper: bool
    subtractive: bool
    strongly_subtractive: bool
    semisubtractive: bool
    prime: bool
    maximal: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _ss_bits(S: FiniteSemiring, bits: int) -> bool:
    for x in elements_of(bits & _inverse_bits(S)):
        y = S.add[x].index(0)
        if not bits >> y & 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _ss_family_bits(S: FiniteSemiring) -> tuple[int, ...]:
    return tuple(b for b in _ideal_bits(S) if _ss_bits(S, b))


def is_semisubtractive(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> bool:
    """Every element of ``a`` that has an additive inverse has it inside ``a``."""
    return _ss_bits(S, as_bits(S, a))


def is_subtractive(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> bool:
    bits = as_bits(S, a)
    for x in elements_of(bits):
        for y in S.elements:
            if bits >> S.add[x][y] & 1 and not bits >> y & 1:
                return False
    return True


def is_strongly_subtractive(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> bool:
    bits = as_bits(S, a)
    for x in S.elements:
        for y in S.elements:
            if bits >> S.add[x][y] & 1 and not (bits >> x & 1 and bits >> y & 1):
                return False
    return True


def _prime_elementwise_bits(S: FiniteSemiring, bits: int) -> bool:
    for x in S.elements:
        if bits >> x & 1:
            continue
        for y in S.elements:
            if not bits >> y & 1 and bits >> S.mul[x][y] & 1:
                return False
    return True


def is_prime_elementwise(S: FiniteSemiring, p: ElementSet | Iterable[int]) -> bool:
    """xy in p implies x in p or y in p (p proper)."""
    bits = as_bits(S, p)
    if bits == S.full:
        raise NotProper("prime ideals are proper")
    return _prime_elementwise_bits(S, bits)


def is_prime(S: FiniteSemiring, p: ElementSet | Iterable[int]) -> bool:
    """Idealwise primality: ab <= p forces a <= p or b <= p, over all ideals."""
    bits = as_bits(S, p)
    if bits == S.full:
        raise NotProper("prime ideals are proper")
    ids = _ideal_bits(S)
    for a in ids:
        if a & ~bits == 0:
            continue
        for b in ids:
            if b & ~bits == 0:
                continue
            if _product_bits(S, a, b) & ~bits == 0:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _prime_bits(S: FiniteSemiring) -> tuple[int, ...]:
    return tuple(b for b in _ideal_bits(S) if b != S.full and _prime_elementwise_bits(S, b))


def primes(S: FiniteSemiring) -> list[Ideal]:
    """Spec(S), ascending bitset order."""
    return [Ideal(S, b) for b in _prime_bits(S)]


def _is_maximal_bits(S: FiniteSemiring, bits: int) -> bool:
    if bits == S.full:
        return False
    return not any(b != S.full and b != bits and bits & ~b == 0 for b in _ideal_bits(S))


def is_maximal(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> bool:
    return _is_maximal_bits(S, as_bits(S, a))


def classify(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> IdealClassification:
    bits = as_bits(S, a)
    proper = bits != S.full
    return IdealClassification(
        proper=proper,
        subtractive=is_subtractive(S, a),
        strongly_subtractive=is_strongly_subtractive(S, a),
        semisubtractive=_ss_bits(S, bits),
        prime=proper and _prime_elementwise_bits(S, bits),
        maximal=_is_maximal_bits(S, bits),
    )


# -- ideal calculus ---------------------------------------------------------------

@functools.lru_cache(maxsize=1 << 18)
def _product_bits(S: FiniteSemiring, a: int, b: int) -> int:
    prods = 0
    for x in elements_of(a):
        mx = S.mul[x]
        for y in elements_of(b):
            prods |= 1 << mx[y]
    return _gen_bits(S, prods)


def ideal_sum(a: ElementSet, b: ElementSet) -> Ideal:
    S = _same_owner(a, b)
    return Ideal(S, _gen_bits(S, a.bits | b.bits))


def ideal_product(a: ElementSet, b: ElementSet) -> Ideal:
    S = _same_owner(a, b)
    return Ideal(S, _product_bits(S, a.bits, b.bits))


def ideal_intersection(family: Sequence[ElementSet], owner: FiniteSemiring | None = None) -> Ideal:
    """Intersection of a family; the empty family gives the whole semiring."""
    if not family:
        if owner is None:
            raise EmptySubset("empty family needs an explicit owner")
        return Ideal(owner, owner.full)
    S = _same_owner(*family)
    bits = S.full
    for a in family:
        bits &= a.bits
    return Ideal(S, bits)


@functools.lru_cache(maxsize=1 << 18)
def _colon_bits(S: FiniteSemiring, a: int, b: int) -> int:
    out = 0
    ys = elements_of(b)
    for s in S.elements:
        ms = S.mul[s]
        if all(a >> ms[y] & 1 for y in ys):
            out |= 1 << s
    return out


def colon(a: ElementSet, b: ElementSet) -> Ideal:
    """(a : b) = {s : s*y in a for all y in b}."""
    S = _same_owner(a, b)
    return Ideal(S, _colon_bits(S, a.bits, b.bits))


def annihilator(S: FiniteSemiring, X: ElementSet | Iterable[int]) -> Ideal:
    bits = as_bits(S, X)
    if not bits:
        raise EmptySubset("annihilator of the empty set")
    return Ideal(S, _colon_bits(S, 1, bits))


def _radical_bits(S: FiniteSemiring, a: int) -> int:
    out = S.full
    for p in _prime_bits(S):
        if a & ~p == 0:
            out &= p
    return out


def radical(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> Ideal:
    """Intersection of the primes containing ``a`` (the whole semiring if none do)."""
    return Ideal(S, _radical_bits(S, as_bits(S, a)))


def nilradical(S: FiniteSemiring) -> Ideal:
    """Nilpotent elements; exponents up to the order suffice since powers cycle."""
    bits = 0
    for x in S.elements:
        p = x
        for _ in range(S.order):
            if p == 0:
                bits |= 1 << x
                break
            p = S.mul[p][x]
    return Ideal(S, bits)


def hom_preimage(phi: SemiringHom, b: ElementSet) -> Ideal:
    T = phi.target
    if b.owner is not T and b.owner != T:
        raise OwnerMismatch("ideal is not over the hom's target")
    bits = 0
    for x, fx in enumerate(phi.map):
        if b.bits >> fx & 1:
            bits |= 1 << x
    return Ideal(phi.source, bits)


def hom_kernel(phi: SemiringHom) -> Ideal:
    return hom_preimage(phi, Ideal(phi.target, 1))


def hom_image(phi: SemiringHom, a: ElementSet, strict: bool = False) -> ElementSet:
    """Pointwise image; an :class:`Ideal` whenever it is one (always, for surjective ``phi``)."""
    S = phi.source
    if a.owner is not S and a.owner != S:
        raise OwnerMismatch("ideal is not over the hom's source")
    if strict and not phi.is_surjective:
        raise NotSurjective("image of an ideal under a non-surjective hom")
    bits = bits_of(phi.map[x] for x in a)
    if _is_ideal_bits(phi.target, bits):
        return Ideal(phi.target, bits)
    return ElementSet(phi.target, bits)


# -- claims ------------------------------------------------------------------------

def _each_ideal(S, ctx):
    for a in _ideal_bits(S):
        yield {"a": list(elements_of(a))}


def _each_ss(S, ctx):
    for a in _ss_family_bits(S):
        yield {"a": list(elements_of(a))}


def _ss_pairs(S, ctx):
    fam = _ss_family_bits(S)
    for a in fam:
        for b in fam:
            yield {"a": list(elements_of(a)), "b": list(elements_of(b))}


def _ss_pairs_and_whole(S, ctx):
    yield from _ss_pairs(S, ctx)
    yield {"family": [list(elements_of(a)) for a in _ss_family_bits(S)]}


def _ss_by_ideal(S, ctx):
    for a in _ss_family_bits(S):
        for b in _ideal_bits(S):
            yield {"a": list(elements_of(a)), "b": list(elements_of(b))}


def _colon_combos(S, ctx):
    ss, ids = _ss_family_bits(S), _ideal_bits(S)
    for a in ss:
        for a2 in ss:
            for b in ids:
                for c in ids:
                    yield {"a": list(elements_of(a)), "a2": list(elements_of(a2)),
                           "b": list(elements_of(b)), "c": list(elements_of(c))}


def _nonempty_subsets(S, ctx):
    for X in range(1, S.full + 1):
        yield {"X": list(elements_of(X))}


def _family(w, S) -> list[int]:
    if "family" in w:
        return [bits_of(a) for a in w["family"]]
    return [bits_of(w["a"]), bits_of(w["b"])]


@claim("bpss.1", "strongly subtractive and subtractive ideals are semisubtractive",
       status=PROVEN, instances=_each_ideal, kinds={"a": SET})
def _bpss1(S, w):
    a = bits_of(w["a"])
    if not _is_ideal_bits(S, a):
        return False
    ss, sub = is_strongly_subtractive(S, w["a"]), is_subtractive(S, w["a"])
    if not (ss or sub):
        return None
    return (not ss or sub) and _ss_bits(S, a)


@claim("bpss.2", "prime ideals are semisubtractive", status=PROVEN, instances=_each_ideal,
       kinds={"a": SET})
def _bpss2(S, w):
    a = bits_of(w["a"])
    if a == S.full or not _prime_elementwise_bits(S, a):
        return None
    return _ss_bits(S, a)


@claim("bpss.3", "intersections of semisubtractive ideals are semisubtractive", status=PROVEN,
       instances=_ss_pairs_and_whole, kinds={"a": SET, "b": SET, "family": SETS})
def _bpss3(S, w):
    out = S.full
    for a in _family(w, S):
        out &= a
    return _is_ideal_bits(S, out) and _ss_bits(S, out)


@claim("bpss.4", "sums of semisubtractive ideals are semisubtractive", status=PROVEN,
       instances=_ss_pairs_and_whole, kinds={"a": SET, "b": SET, "family": SETS})
def _bpss4(S, w):
    bits = 0
    for a in _family(w, S):
        bits |= a
    return _ss_bits(S, _gen_bits(S, bits))


@claim("bpss.5", "products of semisubtractive ideals are semisubtractive", status=PROVEN,
       instances=_ss_pairs, kinds={"a": SET, "b": SET})
def _bpss5(S, w):
    return _ss_bits(S, _product_bits(S, bits_of(w["a"]), bits_of(w["b"])))


@claim("bpss.6", "(a:b) is semisubtractive for semisubtractive a and any ideal b", status=PROVEN,
       instances=_ss_by_ideal, kinds={"a": SET, "b": SET})
def _bpss6(S, w):
    c = _colon_bits(S, bits_of(w["a"]), bits_of(w["b"]))
    return _is_ideal_bits(S, c) and _ss_bits(S, c)


@functools.lru_cache(maxsize=1 << 18)
def _ss_ideal(S, bits: int) -> bool:
    return _is_ideal_bits(S, bits) and _ss_bits(S, bits)


@claim("bpss.7", "the eight colon/intersection combinations are semisubtractive", status=PROVEN,
       instances=_colon_combos, kinds={"a": SET, "a2": SET, "b": SET, "c": SET})
def _bpss7(S, w):
    a, a2, b, c = (bits_of(w[k]) for k in ("a", "a2", "b", "c"))
    col = functools.partial(_colon_bits, S)
    results = [
        col(a, b),
        col(col(a, b), c),
        col(a, _product_bits(S, b, c)),
        col(col(a, c), b),
        col(a & a2, b),
        col(a, b) & col(a2, b),
        col(a, _gen_bits(S, b | c)),
        col(a, b) & col(a, c),
    ]
    return all(_ss_ideal(S, r) for r in results)


@claim("bpss.8", "annihilators of nonempty subsets are semisubtractive", status=PROVEN,
       instances=_nonempty_subsets, kinds={"X": SET})
def _bpss8(S, w):
    ann = _colon_bits(S, 1, bits_of(w["X"]))
    return _is_ideal_bits(S, ann) and _ss_bits(S, ann)


def _radical_notes(S, ctx):
    return {"radical_of_whole": "whole semiring (empty intersection convention)"}


@claim("bpss.9", "radicals of ideals are semisubtractive", status=PROVEN, instances=_each_ideal,
       kinds={"a": SET}, notes=_radical_notes)
def _bpss9(S, w):
    r = _radical_bits(S, bits_of(w["a"]))
    return _is_ideal_bits(S, r) and _ss_bits(S, r)


@claim("bpss.10", "a semisubtractive => a & nilradical semisubtractive", status=PROVEN,
       instances=_each_ss, kinds={"a": SET})
def _bpss10(S, w):
    r = bits_of(w["a"]) & nilradical(S).bits
    return _is_ideal_bits(S, r) and _ss_bits(S, r)


# homomorphism claims

def _hom_ss_target(S, ctx):
    for w in hom_instances(S, ctx):
        T = hom_from_witness(S, w["hom"]).target
        for b in _ss_family_bits(T):
            yield {"hom": w["hom"], "b": list(elements_of(b))}


def _hom_ss_target_pairs(S, ctx):
    for w in hom_instances(S, ctx):
        T = hom_from_witness(S, w["hom"]).target
        fam = _ss_family_bits(T)
        for b1 in fam:
            for b2 in fam:
                yield {"hom": w["hom"], "b1": list(elements_of(b1)), "b2": list(elements_of(b2))}


def _hom_each(S, ctx):
    yield from hom_instances(S, ctx)


def _hom_ss_source(S, ctx):
    for w in hom_instances(S, ctx):
        for a in _ss_family_bits(S):
            yield {"hom": w["hom"], "a": list(elements_of(a))}


def _hom(S, w) -> SemiringHom:
    return hom_from_witness(S, w["hom"])


def _pre(phi: SemiringHom, b: int) -> int:
    out = 0
    for x, fx in enumerate(phi.map):
        if b >> fx & 1:
            out |= 1 << x
    return out


@claim("cep.1", "preimages of semisubtractive ideals are semisubtractive", status=PROVEN,
       instances=_hom_ss_target, kinds={"hom": HOM, "b": RAW})
def _cep1(S, w):
    c = _pre(_hom(S, w), bits_of(w["b"]))
    return _is_ideal_bits(S, c) and _ss_bits(S, c)


@claim("cep.2", "the kernel of a homomorphism is semisubtractive", status=PROVEN,
       instances=_hom_each, kinds={"hom": HOM})
def _cep2(S, w):
    k = _pre(_hom(S, w), 1)
    return _is_ideal_bits(S, k) and _ss_bits(S, k)


@claim("cep.3", "contraction commutes with meets and bounds products and colons", status=PROVEN,
       instances=_hom_ss_target_pairs, kinds={"hom": HOM, "b1": RAW, "b2": RAW})
def _cep3(S, w):
    phi = _hom(S, w)
    T = phi.target
    b1, b2 = bits_of(w["b1"]), bits_of(w["b2"])
    c1, c2 = _pre(phi, b1), _pre(phi, b2)
    meet = _pre(phi, b1 & b2) == c1 & c2
    prod_ = _product_bits(S, c1, c2) & ~_pre(phi, _product_bits(T, b1, b2)) == 0
    col = _pre(phi, _colon_bits(T, b1, b2)) & ~_colon_bits(S, c1, c2) == 0
    return meet and prod_ and col


@claim("cep.4", "surjective images of semisubtractive ideals are semisubtractive", status=PROVEN,
       instances=_hom_ss_source, kinds={"hom": HOM, "a": SET})
def _cep4(S, w):
    phi = _hom(S, w)
    if not phi.is_surjective:
        return None
    img = bits_of(phi.map[x] for x in w["a"])
    return _is_ideal_bits(phi.target, img) and _ss_bits(phi.target, img)
