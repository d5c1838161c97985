"""Q-ideals and the coset quotient semiring S/a."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .claims import AUDIT, ELEMENT, PROVEN, SET, claim
from .enumerator import canonical_form
from .errors import AxiomViolation, NoRep, NotAHom, QuotientInvalid, ZeroEqualsOne
from .ideals import (Ideal, _gen_bits, _ideal_bits, _is_ideal_bits,
                     _prime_elementwise_bits, _ss_bits, _ss_family_bits, as_bits)
from .kernel import (ElementSet, FiniteSemiring, _inverse_bits, bits_of, elements_of, validate,
                     validate_hom)


@dataclass(frozen=True)
class QPartition:
    ideal: Ideal
    Q: ElementSet

    @property
    def owner(self) -> FiniteSemiring:
        return self.ideal.owner


@dataclass(frozen=True)
class QuotientSemiring:
    base: FiniteSemiring
    witness: QPartition
    semiring: FiniteSemiring
    projection: tuple[int, ...]   # base element -> quotient index
    reps: tuple[int, ...]         # quotient index -> representative in Q

    def to_json(self) -> dict:
        return {"semiring": self.semiring.to_json(), "projection": list(self.projection),
                "reps": list(self.reps)}


def _coset(S: FiniteSemiring, q: int, a: int) -> int:
    row = S.add[q]
    out = 0
    for x in elements_of(a):
        out |= 1 << row[x]
    return out


def _is_q_bits(S: FiniteSemiring, a: int, Q: int) -> bool:
    covered = 0
    for q in elements_of(Q):
        c = _coset(S, q, a)
        if covered & c:
            return False
        covered |= c
    return covered == S.full


def is_Q_ideal(S: FiniteSemiring, a: ElementSet | Iterable[int], Q: ElementSet | Iterable[int]) -> bool:
    """Do the cosets q + a (q in Q) partition S?"""
    a_bits = as_bits(S, a)
    return _is_ideal_bits(S, a_bits) and _is_q_bits(S, a_bits, as_bits(S, Q))


def _q_search(S: FiniteSemiring, a: int) -> Iterator[int]:
    """Every Q witness for ``a``, in lexicographic order of sorted element tuples."""
    cosets = [_coset(S, x, a) for x in S.elements]

    def rec(chosen: int, covered: int, start: int):
        if covered == S.full:
            yield chosen
            return
        for x in range(start, S.order):
            if not cosets[x] & covered:
                yield from rec(chosen | 1 << x, covered | cosets[x], x + 1)

    yield from rec(0, 0, 0)


@functools.lru_cache(maxsize=None)
def _find_q_bits(S: FiniteSemiring, a: int) -> int | None:
    return next(_q_search(S, a), None)


@functools.lru_cache(maxsize=None)
def _all_q_bits(S: FiniteSemiring, a: int) -> tuple[int, ...]:
    return tuple(_q_search(S, a))


def find_Q(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> ElementSet | None:
    """Lexicographically least Q witnessing that ``a`` is a Q-ideal, or None."""
    a_bits = as_bits(S, a)
    if not _is_ideal_bits(S, a_bits):
        return None
    q = _find_q_bits(S, a_bits)
    return None if q is None else ElementSet(S, q)


def find_all_Q(S: FiniteSemiring, a: ElementSet | Iterable[int]) -> list[ElementSet]:
    a_bits = as_bits(S, a)
    if not _is_ideal_bits(S, a_bits):
        return []
    return [ElementSet(S, q) for q in _all_q_bits(S, a_bits)]


def q_partition(S: FiniteSemiring, a: ElementSet | Iterable[int],
                Q: ElementSet | Iterable[int] | None = None) -> QPartition | None:
    a_bits = as_bits(S, a)
    if Q is None:
        found = find_Q(S, a_bits)
        if found is None:
            return None
        q_bits = found.bits
    else:
        q_bits = as_bits(S, Q)
        if not is_Q_ideal(S, a_bits, q_bits):
            return None
    return QPartition(Ideal(S, a_bits), ElementSet(S, q_bits))


def _rep_bits(S: FiniteSemiring, a: int, Q: int, x: int) -> int:
    xa = _coset(S, x, a)
    found = [q for q in elements_of(Q) if xa & ~_coset(S, q, a) == 0]
    if len(found) != 1:
        raise NoRep(f"element {x} has {len(found)} coset representatives")
    return found[0]


def coset_rep(P: QPartition, x: int) -> int:
    """The unique q in Q with x + a contained in q + a."""
    return _rep_bits(P.owner, P.ideal.bits, P.Q.bits, x)


@functools.lru_cache(maxsize=4096)
def _quotient(S: FiniteSemiring, a: int, Q: int) -> tuple[FiniteSemiring, tuple[int, ...], tuple[int, ...]]:
    rep = [_rep_bits(S, a, Q, x) for x in S.elements]
    zero, one = rep[0], rep[1]
    qs = elements_of(Q)
    if len(qs) < 2:
        raise QuotientInvalid("quotient has a single element", ZeroEqualsOne("0 = 1 in the quotient"))
    if zero == one:
        raise QuotientInvalid("zero and one fall into the same coset")
    reps = (zero, one, *(q for q in qs if q not in (zero, one)))
    index = {q: i for i, q in enumerate(reps)}
    add = [[index[rep[S.add[p][q]]] for q in reps] for p in reps]
    mul = [[index[rep[S.mul[p][q]]] for q in reps] for p in reps]
    try:
        T = validate(add, mul)
    except AxiomViolation as exc:
        raise QuotientInvalid(f"quotient tables violate {exc.axiom}", exc) from exc
    proj = tuple(index[rep[x]] for x in S.elements)
    return T, proj, reps


def quotient(P: QPartition) -> QuotientSemiring:
    """S/a over the representatives in Q; zero-rep at index 0, one-rep at 1."""
    S = P.owner
    T, proj, reps = _quotient(S, P.ideal.bits, P.Q.bits)
    try:
        validate_hom(S, T, proj)
    except NotAHom as exc:
        raise QuotientInvalid("projection onto the quotient is not a homomorphism", exc) from exc
    return QuotientSemiring(S, P, T, proj, reps)


def is_semifield(S: FiniteSemiring) -> bool:
    return all(1 in S.mul[x] for x in S.elements if x != 0)


def quotient_ideal(Qs: QuotientSemiring, a: ElementSet | Iterable[int]) -> ElementSet:
    """a/i: the classes of the representatives lying in ``a``."""
    bits = as_bits(Qs.base, a)
    return ElementSet(Qs.semiring, bits_of(i for i, q in enumerate(Qs.reps) if bits >> q & 1))


def audit_q_propositions(S: FiniteSemiring, ctx=None) -> list:
    from .claims import REGISTRY, evaluate

    return [evaluate(REGISTRY[cid], S, ctx) for cid in Q_CLAIMS]


# -- claims ------------------------------------------------------------------------

Q_CLAIMS = ("qlemma", "qsemiring", "qsub", "qai", "iqs", "iqss", "qiji", "pqss")


def _q_witnesses(S, ctx) -> Iterator[tuple[int, int]]:
    every = getattr(ctx, "all_q_witnesses", False)
    for a in _ideal_bits(S):
        if every:
            for q in _all_q_bits(S, a):
                yield a, q
        else:
            q = _find_q_bits(S, a)
            if q is not None:
                yield a, q


def _w(i: int, q: int, **extra) -> dict:
    out = {"i": list(elements_of(i)), "Q": list(elements_of(q))}
    out.update({k: list(elements_of(v)) for k, v in extra.items()})
    return out


def _each_q(S, ctx):
    for a, q in _q_witnesses(S, ctx):
        yield _w(a, q)


def _each_q_elements(S, ctx):
    for a, q in _q_witnesses(S, ctx):
        for x in S.elements:
            yield {**_w(a, q), "x": x}


def _q_with_ss_above(S, ctx):
    for a, q in _q_witnesses(S, ctx):
        for b in _ss_family_bits(S):
            if a & ~b == 0:
                yield _w(a, q, a=b)


def _q_with_ss(S, ctx):
    for a, q in _q_witnesses(S, ctx):
        for b in _ss_family_bits(S):
            yield _w(a, q, j=b)


def _q_with_quotient_ss(S, ctx):
    for a, q in _q_witnesses(S, ctx):
        try:
            T, _, reps = _quotient(S, a, q)
        except QuotientInvalid:
            continue
        for c in _ss_family_bits(T):
            yield _w(a, q, c=bits_of(reps[i] for i in elements_of(c)))


def _unpack(S, w) -> tuple[int, int] | None:
    a, q = bits_of(w["i"]), bits_of(w["Q"])
    if not _is_ideal_bits(S, a) or not _is_q_bits(S, a, q):
        return None
    return a, q


def _quot(S, a, q):
    try:
        return _quotient(S, a, q)
    except QuotientInvalid:
        return None


def _image(reps, bits: int) -> int:
    return bits_of(i for i, r in enumerate(reps) if bits >> r & 1)


def _quotient_notes(S, ctx):
    multi = []
    for a in _ideal_bits(S):
        qs = _all_q_bits(S, a)
        if len(qs) < 2:
            continue
        classes = set()
        for q in qs:
            got = _quot(S, a, q)
            classes.add(canonical_form(got[0]).encoding() if got else None)
        multi.append({"ideal": list(elements_of(a)), "witnesses": len(qs), "quotient_classes": len(classes)})
    return {"multi_witness_ideals": multi} if multi else None


@claim("qlemma", "each x has a unique q in Q with x + i inside q + i", status=PROVEN,
       instances=_each_q_elements, kinds={"i": SET, "Q": SET, "x": ELEMENT})
def _qlemma(S, w):
    got = _unpack(S, w)
    if got is None:
        return None
    a, q = got
    xa = _coset(S, w["x"], a)
    return sum(1 for r in elements_of(q) if xa & ~_coset(S, r, a) == 0) == 1


@claim("qsemiring", "S/i is a semiring for every proper Q-ideal i", status=AUDIT,
       instances=_each_q, kinds={"i": SET, "Q": SET}, notes=_quotient_notes)
def _qsemiring(S, w):
    got = _unpack(S, w)
    if got is None or got[0] == S.full:
        return None
    a, q = got
    res = _quot(S, a, q)
    if res is None:
        return False
    T, proj, _ = res
    try:
        validate_hom(S, T, proj)
    except NotAHom:
        return False
    return True


@claim("qsub", "every Q-ideal is subtractive", status=AUDIT, instances=_each_q,
       kinds={"i": SET, "Q": SET})
def _qsub(S, w):
    got = _unpack(S, w)
    if got is None:
        return None
    a = got[0]
    for x in elements_of(a):
        for y in S.elements:
            if a >> S.add[x][y] & 1 and not a >> y & 1:
                return False
    return True


@claim("qai", "a/i is a semisubtractive ideal of S/i when Q is closed under inverses",
       status=AUDIT, instances=_q_with_ss_above, kinds={"i": SET, "Q": SET, "a": SET})
def _qai(S, w):
    got = _unpack(S, w)
    if got is None:
        return None
    i, q = got
    a = bits_of(w["a"])
    if i & ~a or not _is_ideal_bits(S, a) or not _ss_bits(S, a):
        return None
    for x in elements_of(q & _inverse_bits(S)):
        if not q >> S.add[x].index(0) & 1:
            return None
    res = _quot(S, i, q)
    if res is None:
        return None
    T, _, reps = res
    img = _image(reps, a)
    return _is_ideal_bits(T, img) and _ss_bits(T, img)


@claim("iqs", "semisubtractive ideals of S/i are of the form j/i", status=AUDIT,
       instances=_q_with_quotient_ss, kinds={"i": SET, "Q": SET, "c": SET})
def _iqs(S, w):
    got = _unpack(S, w)
    if got is None:
        return None
    i, q = got
    res = _quot(S, i, q)
    if res is None:
        return None
    T, _, reps = res
    c_base = bits_of(w["c"])
    if c_base & ~q:
        return None
    c = _image(reps, c_base)
    if not _is_ideal_bits(T, c) or not _ss_bits(T, c):
        return None
    return any(_image(reps, j) == c for j in _ss_family_bits(S))


@claim("iqss", "S/i a semifield implies i maximal semisubtractive", status=AUDIT,
       instances=_each_q, kinds={"i": SET, "Q": SET})
def _iqss(S, w):
    got = _unpack(S, w)
    if got is None or got[0] == S.full:
        return None
    i, q = got
    res = _quot(S, i, q)
    if res is None or not is_semifield(res[0]):
        return None
    if not _ss_bits(S, i):
        return False
    return not any(b != i and b != S.full and i & ~b == 0 for b in _ss_family_bits(S))


@claim("qiji", "(i + j)/i is a semisubtractive ideal of S/i", status=AUDIT,
       instances=_q_with_ss, kinds={"i": SET, "Q": SET, "j": SET})
def _qiji(S, w):
    got = _unpack(S, w)
    if got is None:
        return None
    i, q = got
    j = bits_of(w["j"])
    if not _ss_bits(S, i) or not _is_ideal_bits(S, j) or not _ss_bits(S, j):
        return None
    res = _quot(S, i, q)
    if res is None:
        return None
    T, _, reps = res
    img = _image(reps, _gen_bits(S, i | j))
    return _is_ideal_bits(T, img) and _ss_bits(T, img)


def _prime_in(T: FiniteSemiring, bits: int) -> bool:
    return bits != T.full and _is_ideal_bits(T, bits) and _prime_elementwise_bits(T, bits)


@claim("pqss", "p prime iff p/i prime, for semisubtractive p containing i", status=AUDIT,
       instances=_q_with_ss_above, kinds={"i": SET, "Q": SET, "a": SET})
def _pqss(S, w):
    got = _unpack(S, w)
    if got is None:
        return None
    i, q = got
    p = bits_of(w["a"])
    if i & ~p or not _is_ideal_bits(S, p) or not _ss_bits(S, p):
        return None
    res = _quot(S, i, q)
    if res is None:
        return None
    T, _, reps = res
    p_prime = p != S.full and _prime_elementwise_bits(S, p)
    return p_prime == _prime_in(T, _image(reps, p))
