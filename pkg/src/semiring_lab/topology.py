"""The semisubtractive space: Id_s(S) with subbasic closed sets h(a) = {b : b >= a}.

Points are indexed by their position in ``semisubtractive_family(S)``;
sets of points are bitmasks over those indices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .claims import AUDIT, HOM, PROVEN, SET, SETS, claim, single
from .errors import NotAHom
from .ideals import _gen_bits, _ss_family_bits
from .kernel import (FiniteSemiring, SemiringHom, bits_of, elements_of, hom_from_witness, hom_instances,
                     validate_hom)
from .order import IdealFamily, _cz_bits, semisubtractive_family


@dataclass(frozen=True)
class SemisubtractiveSpace:
    owner: FiniteSemiring
    points: IdealFamily
    subbasis: tuple[int, ...]        # h(a) for each point a, as a point mask
    closed_sets: tuple[int, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def whole(self) -> int:
        return (1 << self.size) - 1

    def point_of(self, ideal_bits: int) -> int:
        return self.points.bits().index(ideal_bits)

    def mask_of(self, ideals) -> int:
        return bits_of(self.point_of(b) for b in ideals)

    def ideals_of(self, mask: int) -> list[list[int]]:
        bits = self.points.bits()
        return [list(elements_of(bits[i])) for i in elements_of(mask)]

    def to_json(self) -> dict:
        return {"points": [m.to_json() for m in self.points],
                "closed_sets": [list(elements_of(c)) for c in self.closed_sets]}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None
    notes: dict | None = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness, "notes": self.notes}


def _h(fam: tuple[int, ...], a: int) -> int:
    return bits_of(j for j, b in enumerate(fam) if a & ~b == 0)


@functools.lru_cache(maxsize=None)
def build_space(S: FiniteSemiring) -> SemisubtractiveSpace:
    points = semisubtractive_family(S)
    fam = points.bits()
    subbasis = tuple(_h(fam, a) for a in fam)
    # finite unions of subbasic sets (the empty union gives the empty set)
    unions = {0}
    stack = [0]
    while stack:
        c = stack.pop()
        for s in subbasis:
            d = c | s
            if d not in unions:
                unions.add(d)
                stack.append(d)
    # then all intersections (the empty intersection gives the whole space)
    whole = (1 << len(fam)) - 1
    closed = set(unions) | {whole}
    frontier = list(closed)
    while frontier:
        new = []
        for c in frontier:
            for d in list(closed):
                e = c & d
                if e not in closed:
                    closed.add(e)
                    new.append(e)
        frontier = new
    return SemisubtractiveSpace(S, points, subbasis, tuple(sorted(closed)))


def closure(space: SemisubtractiveSpace, mask: int) -> int:
    out = space.whole
    for c in space.closed_sets:
        if mask & ~c == 0:
            out &= c
    return out


def _point_closures(space: SemisubtractiveSpace) -> list[int]:
    return [closure(space, 1 << i) for i in range(space.size)]


def check_T0(space: SemisubtractiveSpace) -> Verdict:
    """Distinct points have distinct closures."""
    cl = _point_closures(space)
    seen: dict[int, int] = {}
    for i, c in enumerate(cl):
        if c in seen:
            return Verdict(False, {"points": space.ideals_of(1 << seen[c] | 1 << i)})
        seen[c] = i
    return Verdict(True)


def _is_irreducible_closed(space: SemisubtractiveSpace, D: int) -> bool:
    if D == 0:
        return False
    # largest closed subset of D avoiding each point
    avoid = {x: 0 for x in elements_of(D)}
    for C in space.closed_sets:
        if C & ~D == 0 and C != D:
            for x in elements_of(D & ~C):
                avoid[x] |= C
    xs = list(avoid)
    return not any(avoid[x] | avoid[y] == D for x in xs for y in xs)


def generic_points(space: SemisubtractiveSpace, D: int) -> list[int]:
    cl = _point_closures(space)
    return [x for x in elements_of(D) if cl[x] == D]


def scir_holds(space: SemisubtractiveSpace, i: int) -> bool:
    """h(a) is the closure of {a}, and it is irreducible."""
    h = space.subbasis[i]
    return closure(space, 1 << i) == h and _is_irreducible_closed(space, h)


def check_sober(space: SemisubtractiveSpace) -> Verdict:
    """Every nonempty irreducible closed set has exactly one generic point."""
    for i in range(space.size):
        if not scir_holds(space, i):
            return Verdict(False, {"subbasic": space.ideals_of(1 << i)}, {"part": "h(a) = cl{a}"})
    for D in space.closed_sets:
        if _is_irreducible_closed(space, D) and len(generic_points(space, D)) != 1:
            return Verdict(False, {"D": space.ideals_of(D)})
    return Verdict(True)


def check_connected(space: SemisubtractiveSpace) -> Verdict:
    closed = set(space.closed_sets)
    for C in space.closed_sets:
        if C not in (0, space.whole) and space.whole & ~C in closed:
            return Verdict(False, {"clopen": space.ideals_of(C)})
    return Verdict(True)


def check_quasi_compact(space: SemisubtractiveSpace) -> Verdict:
    """Every open cover has a finite subcover (extracted greedily).

    Also records whether any subbasic closed set is empty; since S lies in
    every h(a), none ever is.
    """
    opens = [space.whole & ~c for c in space.closed_sets]
    covered, used = 0, 0
    for o in sorted(opens, key=lambda m: -bin(m).count("1")):
        if o & ~covered:
            covered |= o
            used += 1
    notes = {"subbasic_never_empty": all(space.subbasis), "subcover_size": used}
    return Verdict(covered == space.whole, None, notes)


# -- induced maps -------------------------------------------------------------------

@dataclass(frozen=True)
class InducedMap:
    hom: SemiringHom
    point_map: tuple[int | None, ...]    # target point -> source point (None if not a point)
    well_defined: bool
    continuous: bool
    subbasic_mismatches: tuple[tuple[int, ...], ...]
    homeomorphism: bool | None
    dense: bool
    density_criterion: bool

    def to_json(self) -> dict:
        return {"point_map": list(self.point_map), "well_defined": self.well_defined,
                "continuous": self.continuous,
                "subbasic_mismatches": [list(a) for a in self.subbasic_mismatches],
                "homeomorphism": self.homeomorphism, "dense": self.dense,
                "density_criterion": self.density_criterion}


def _preimage_bits(phi: SemiringHom, b: int) -> int:
    return bits_of(x for x, fx in enumerate(phi.map) if b >> fx & 1)


def induced_map(phi: SemiringHom) -> InducedMap:
    """b -> phi^{-1}(b) from the target's space to the source's, with audits."""
    S, T = phi.source, phi.target
    validate_hom(S, T, phi.map)
    X, Y = build_space(S), build_space(T)
    xfam, yfam = X.points.bits(), Y.points.bits()
    pmap = []
    for b in yfam:
        pre = _preimage_bits(phi, b)
        pmap.append(xfam.index(pre) if pre in xfam else None)
    well = None not in pmap
    if not well:
        return InducedMap(phi, tuple(pmap), False, False, (), None, False, False)

    def pull(mask: int) -> int:
        return bits_of(j for j, i in enumerate(pmap) if mask >> i & 1)

    def push(mask: int) -> int:
        return bits_of(pmap[j] for j in elements_of(mask))

    yclosed = set(Y.closed_sets)
    continuous = all(pull(C) in yclosed for C in X.closed_sets)

    # compare pullbacks of subbasic sets with h of the closed ideal generated by phi(a)
    mismatches = []
    for i, a in enumerate(xfam):
        img = bits_of(phi.map[x] for x in elements_of(a))
        expected = _h(yfam, _cz_bits(T, _gen_bits(T, img)))
        if pull(X.subbasis[i]) != expected:
            mismatches.append(elements_of(a))

    ker = _preimage_bits(phi, 1)
    h_ker = _h(xfam, ker)
    homeo = None
    if phi.is_surjective:
        injective = len(set(pmap)) == len(pmap)
        onto = push(Y.whole) == h_ker
        sub_closed = {C & h_ker for C in X.closed_sets}
        closed_map = all(push(D) in sub_closed for D in Y.closed_sets)
        homeo = injective and onto and closed_map and continuous
    dense = closure(X, push(Y.whole)) == X.whole
    meet = S.full
    for a in xfam:
        meet &= a
    criterion = ker & ~meet == 0
    return InducedMap(phi, tuple(pmap), True, continuous, tuple(mismatches), homeo, dense, criterion)


@functools.lru_cache(maxsize=4096)
def _induced_cached(S: FiniteSemiring, T: FiniteSemiring, m: tuple[int, ...]) -> InducedMap:
    return induced_map(SemiringHom(S, T, m))


def _induced(S, w) -> InducedMap | None:
    try:
        phi = hom_from_witness(S, w["hom"])
    except NotAHom:
        return None
    return _induced_cached(S, phi.target, phi.map)


# -- claims ------------------------------------------------------------------------

@claim("t0", "the semisubtractive space is T0", status=PROVEN, instances=single)
def _t0(S, w):
    return check_T0(build_space(S)).holds


def _each_point(S, ctx):
    for a in _ss_family_bits(S):
        yield {"a": list(elements_of(a))}


@claim("scir", "h(a) is the closure of the point a and is irreducible", status=PROVEN,
       instances=_each_point, kinds={"a": SET})
def _scir(S, w):
    X = build_space(S)
    a = bits_of(w["a"])
    if a not in X.points.bits():
        return None
    return scir_holds(X, X.point_of(a))


def _each_closed(S, ctx):
    X = build_space(S)
    for D in X.closed_sets:
        if D:
            yield {"D": X.ideals_of(D)}


@claim("sober", "every nonempty irreducible closed set has a unique generic point", status=AUDIT,
       instances=_each_closed, kinds={"D": SETS})
def _sober(S, w):
    X = build_space(S)
    try:
        D = X.mask_of(bits_of(a) for a in w["D"])
    except ValueError:
        return None
    if D not in X.closed_sets or not _is_irreducible_closed(X, D):
        return None
    return len(generic_points(X, D)) == 1


@claim("connected", "the semisubtractive space is connected", status=AUDIT, instances=single)
def _connected(S, w):
    return check_connected(build_space(S)).holds


def _qcompact_notes(S, ctx):
    return check_quasi_compact(build_space(S)).notes


@claim("qcompact", "the semisubtractive space is quasi-compact", status=AUDIT, instances=single,
       notes=_qcompact_notes)
def _qcompact(S, w):
    return check_quasi_compact(build_space(S)).holds


def _homs(S, ctx):
    yield from hom_instances(S, ctx)


@claim("conmap.1", "the induced map on semisubtractive spaces is continuous", status=AUDIT,
       instances=_homs, kinds={"hom": HOM})
def _conmap1(S, w):
    m = _induced(S, w)
    if m is None:
        return None
    return m.well_defined and m.continuous


@claim("conmap.2", "a surjection induces a homeomorphism onto h(ker)", status=AUDIT,
       instances=_homs, kinds={"hom": HOM})
def _conmap2(S, w):
    m = _induced(S, w)
    if m is None or not m.hom.is_surjective:
        return None
    return bool(m.homeomorphism)


@claim("conmap.3", "the image is dense iff the kernel lies in every semisubtractive ideal",
       status=AUDIT, instances=_homs, kinds={"hom": HOM})
def _conmap3(S, w):
    m = _induced(S, w)
    if m is None or not m.well_defined:
        return None
    return m.dense == m.density_criterion
