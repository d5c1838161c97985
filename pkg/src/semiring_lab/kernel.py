"""Finite commutative semirings with identity, stored as operation tables.

Elements are the indices ``0..n-1``; index 0 is always the additive
identity (zero) and index 1 the multiplicative identity (one).  Subsets of
elements are Python ints used as bitsets (bit ``x`` set <=> ``x`` present).
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .claims import ELEMENT, PROVEN, claim, single
from .errors import AxiomViolation, BadParams, BadTables, NotAHom, ZeroEqualsOne

Table = tuple[tuple[int, ...], ...]


def bits_of(elements: Iterable[int]) -> int:
    bits = 0
    for x in elements:
        bits |= 1 << x
    return bits


def elements_of(bits: int) -> tuple[int, ...]:
    out = []
    x = 0
    while bits:
        if bits & 1:
            out.append(x)
        bits >>= 1
        x += 1
    return tuple(out)


@dataclass(frozen=True)
class FiniteSemiring:
    """A validated commutative semiring with zero at index 0 and one at index 1.

    Build instances with :func:`validate`; the constructor does not check
    the axioms.  ``name`` and ``labels`` are cosmetic and excluded from
    equality and hashing.
    """

    add: Table
    mul: Table
    name: str | None = field(default=None, compare=False)
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.add, self.mul)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def full(self) -> int:
        """Bitset of all elements."""
        return (1 << self.order) - 1

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def encoding(self) -> tuple[int, ...]:
        """Flat row-major add table followed by the mul table."""
        return tuple(itertools.chain(*self.add, *self.mul))

    def to_json(self) -> dict:
        out: dict = {"order": self.order, "add": [list(r) for r in self.add],
                     "mul": [list(r) for r in self.mul]}
        if self.name:
            out["name"] = self.name
        return out

    def __repr__(self) -> str:
        tag = self.name or "semiring"
        return f"<FiniteSemiring {tag} order={self.order}>"


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of the elements of ``owner``."""

    owner: FiniteSemiring
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.owner.order:
            raise BadParams(f"element set {self.bits:#b} out of range for order {self.owner.order}")

    def __iter__(self) -> Iterator[int]:
        return iter(elements_of(self.bits))

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 0 and bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.bits == other.bits and self.owner == other.owner

    def __hash__(self) -> int:
        return hash((self.bits, self.owner))

    def __le__(self, other: "ElementSet") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.bits != other.bits

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    def to_json(self) -> list[int]:
        return list(self.elements)

    def __repr__(self) -> str:
        body = ",".join(self.owner.label(x) for x in self)
        return f"{{{body}}}"


def validate(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], *,
             name: str | None = None, labels: Sequence[str] | None = None) -> FiniteSemiring:
    """Check every semiring axiom exhaustively and return the semiring.

    Raises :class:`AxiomViolation` naming the first failed axiom together
    with the elements that witness the failure.
    """
    n = len(add)
    if len(mul) != n or any(len(r) != n for r in add) or any(len(r) != n for r in mul):
        raise BadTables("add and mul must be square tables of equal order")
    for t in (add, mul):
        for row in t:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise BadTables(f"table entry {v!r} outside 0..{n - 1}")
    if n < 2:
        raise ZeroEqualsOne("a semiring needs 0 != 1, so order >= 2")
    A: Table = tuple(tuple(r) for r in add)
    M: Table = tuple(tuple(r) for r in mul)
    axiom, witness = first_violation(A, M)
    if axiom is not None:
        raise AxiomViolation(axiom, witness)
    return FiniteSemiring(A, M, name=name, labels=tuple(labels) if labels else None)


def first_violation(A: Table, M: Table) -> tuple[str | None, tuple[int, ...]]:
    n = len(A)
    E = range(n)
    for x in E:
        if A[0][x] != x or A[x][0] != x:
            return "add_identity", (x,)
    for x, y in itertools.combinations(E, 2):
        if A[x][y] != A[y][x]:
            return "add_commutative", (x, y)
    for x, y, z in itertools.product(E, repeat=3):
        if A[A[x][y]][z] != A[x][A[y][z]]:
            return "add_associative", (x, y, z)
    for x in E:
        if M[1][x] != x or M[x][1] != x:
            return "mul_identity", (x,)
    for x, y in itertools.combinations(E, 2):
        if M[x][y] != M[y][x]:
            return "mul_commutative", (x, y)
    for x, y, z in itertools.product(E, repeat=3):
        if M[M[x][y]][z] != M[x][M[y][z]]:
            return "mul_associative", (x, y, z)
    for x in E:
        if M[0][x] != 0 or M[x][0] != 0:
            return "zero_absorbing", (x,)
    for x, y, z in itertools.product(E, repeat=3):
        if M[x][A[y][z]] != A[M[x][y]][M[x][z]]:
            return "distributive", (x, y, z)
    return None, ()


def witness_violates(A: Table, M: Table, axiom: str, w: Sequence[int]) -> bool:
    """Independently re-evaluate a reported violation; True if it is genuine."""
    if axiom == "add_identity":
        (x,) = w
        return A[0][x] != x or A[x][0] != x
    if axiom == "add_commutative":
        x, y = w
        return A[x][y] != A[y][x]
    if axiom == "add_associative":
        x, y, z = w
        return A[A[x][y]][z] != A[x][A[y][z]]
    if axiom == "mul_identity":
        (x,) = w
        return M[1][x] != x or M[x][1] != x
    if axiom == "mul_commutative":
        x, y = w
        return M[x][y] != M[y][x]
    if axiom == "mul_associative":
        x, y, z = w
        return M[M[x][y]][z] != M[x][M[y][z]]
    if axiom == "zero_absorbing":
        (x,) = w
        return M[0][x] != 0 or M[x][0] != 0
    if axiom == "distributive":
        x, y, z = w
        return M[x][A[y][z]] != A[M[x][y]][M[x][z]]
    raise BadParams(f"unknown axiom {axiom!r}")


def from_json(obj: dict) -> FiniteSemiring:
    """Load the JSON semiring format.

    Optional ``zero``/``one`` keys name the input indices of the identities;
    the tables are then permuted so that zero lands on 0 and one on 1.
    """
    try:
        add, mul = obj["add"], obj["mul"]
    except (KeyError, TypeError) as exc:
        raise BadTables("semiring JSON needs 'add' and 'mul'") from exc
    if "order" in obj and obj["order"] != len(add):
        raise BadTables(f"declared order {obj['order']} != table size {len(add)}")
    zero, one = obj.get("zero", 0), obj.get("one", 1)
    if (zero, one) != (0, 1):
        n = len(add)
        if zero == one or not (0 <= zero < n and 0 <= one < n):
            raise BadTables("zero and one must be distinct valid indices")
        rest = [x for x in range(n) if x not in (zero, one)]
        perm = [0] * n
        for new, old in enumerate([zero, one, *rest]):
            perm[old] = new
        add = _permute(add, perm)
        mul = _permute(mul, perm)
    return validate(add, mul, name=obj.get("name"), labels=obj.get("labels"))


def _permute(T: Sequence[Sequence[int]], perm: Sequence[int]) -> Table:
    n = len(T)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[perm[x]][perm[y]] = perm[T[x][y]]
    return tuple(tuple(r) for r in out)


def relabel(S: FiniteSemiring, perm: Sequence[int]) -> FiniteSemiring:
    """Image of ``S`` under the bijection ``x -> perm[x]`` (must fix 0 and 1)."""
    if sorted(perm) != list(S.elements) or perm[0] != 0 or perm[1] != 1:
        raise BadParams("perm must be a permutation fixing 0 and 1")
    labels = None
    if S.labels:
        new = [""] * S.order
        for x, lab in enumerate(S.labels):
            new[perm[x]] = lab
        labels = tuple(new)
    return FiniteSemiring(_permute(S.add, perm), _permute(S.mul, perm), name=S.name, labels=labels)


def additive_inverse(S: FiniteSemiring, x: int) -> int | None:
    found = [y for y in S.elements if S.add[x][y] == 0]
    assert len(found) <= 1, f"additive inverse of {x} not unique: {found}"
    return found[0] if found else None


def invertible_set(S: FiniteSemiring) -> ElementSet:
    """V(S): elements with an additive inverse."""
    return ElementSet(S, _inverse_bits(S))


def _inverse_bits(S: FiniteSemiring) -> int:
    bits = 0
    for x in S.elements:
        if 0 in S.add[x]:
            bits |= 1 << x
    return bits


def neg(S: FiniteSemiring, x: int) -> int:
    """The additive inverse of ``x``; ``x`` must lie in V(S)."""
    y = additive_inverse(S, x)
    if y is None:
        raise BadParams(f"{x} has no additive inverse")
    return y


def is_ring(S: FiniteSemiring) -> bool:
    return _inverse_bits(S) == S.full


# -- fixtures -----------------------------------------------------------------

def bool2() -> FiniteSemiring:
    return validate([[0, 1], [1, 1]], [[0, 0], [0, 1]], name="bool2")


def zmod(n: int) -> FiniteSemiring:
    if not isinstance(n, int) or n < 2:
        raise BadParams("zmod needs n >= 2")
    return validate([[(x + y) % n for y in range(n)] for x in range(n)],
                    [[(x * y) % n for y in range(n)] for x in range(n)], name=f"zmod({n})")


def trunc(k: int) -> FiniteSemiring:
    """{0..k} with saturating addition and multiplication capped at k."""
    if not isinstance(k, int) or k < 1:
        raise BadParams("trunc needs k >= 1")
    n = k + 1
    return validate([[min(x + y, k) for y in range(n)] for x in range(n)],
                    [[min(x * y, k) for y in range(n)] for x in range(n)], name=f"trunc({k})")


def prod(A: FiniteSemiring, B: FiniteSemiring) -> FiniteSemiring:
    """Componentwise product; pairs (0,0) and (1,1) take indices 0 and 1."""
    pairs = [(0, 0), (1, 1)] + [p for p in itertools.product(A.elements, B.elements)
                                if p not in ((0, 0), (1, 1))]
    index = {p: i for i, p in enumerate(pairs)}
    add = [[index[(A.add[a][c], B.add[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[index[(A.mul[a][c], B.mul[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({A.label(a)},{B.label(b)})" for a, b in pairs]
    return validate(add, mul, name=f"prod({A.name or '?'},{B.name or '?'})", labels=labels)


_FIXTURE_RE = re.compile(r"\s*(\w+)\s*(?:\((.*)\))?\s*$")


def fixture(name: str, *params) -> FiniteSemiring:
    """Named fixture semiring: ``bool2``, ``zmod(n)``, ``trunc(k)``, ``prod(A, B)``.

    ``name`` may also be a full expression such as ``"prod(zmod(2),bool2)"``.
    """
    if not params and "(" in name:
        return _parse_fixture(name)
    if name == "bool2" and not params:
        return bool2()
    if name == "zmod" and len(params) == 1:
        return zmod(params[0])
    if name == "trunc" and len(params) == 1:
        return trunc(params[0])
    if name == "prod" and len(params) == 2:
        a, b = (p if isinstance(p, FiniteSemiring) else fixture(p) for p in params)
        return prod(a, b)
    raise BadParams(f"unknown fixture {name}{params or ''}")


def _split_args(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    if cur.strip():
        out.append(cur)
    return [a.strip() for a in out]


def _parse_fixture(expr: str) -> FiniteSemiring:
    m = _FIXTURE_RE.match(expr)
    if not m:
        raise BadParams(f"cannot parse fixture {expr!r}")
    head, args = m.group(1), _split_args(m.group(2) or "")
    if head == "prod":
        if len(args) != 2:
            raise BadParams("prod takes two semirings")
        return prod(_parse_fixture(args[0]), _parse_fixture(args[1]))
    try:
        params = [int(a) for a in args]
    except ValueError as exc:
        raise BadParams(f"bad parameters in {expr!r}") from exc
    return fixture(head, *params)


FIXTURE_NAMES = (
    "bool2", "zmod(2)", "zmod(3)", "zmod(4)", "zmod(5)", "zmod(6)",
    "trunc(1)", "trunc(2)", "trunc(3)",
    "prod(bool2,bool2)", "prod(zmod(2),bool2)", "prod(zmod(2),zmod(2))",
    "prod(bool2,zmod(3))", "prod(zmod(2),zmod(3))",
    "prod(bool2,trunc(2))", "prod(zmod(2),trunc(2))",
)


def all_fixtures() -> list[FiniteSemiring]:
    """Every named fixture of order <= 6, in a fixed order."""
    return [fixture(n) for n in FIXTURE_NAMES]


# -- homomorphisms --------------------------------------------------------------

@dataclass(frozen=True)
class SemiringHom:
    source: FiniteSemiring
    target: FiniteSemiring
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_surjective(self) -> bool:
        return set(self.map) == set(self.target.elements)

    def to_json(self) -> dict:
        return {"target": self.target.to_json(), "map": list(self.map)}


def validate_hom(source: FiniteSemiring, target: FiniteSemiring, mapping: Sequence[int]) -> SemiringHom:
    f = tuple(mapping)
    if len(f) != source.order or any(not 0 <= v < target.order for v in f):
        raise NotAHom("shape", ())
    if f[0] != 0:
        raise NotAHom("zero", (0,))
    if f[1] != 1:
        raise NotAHom("one", (1,))
    for x in source.elements:
        for y in source.elements:
            if f[source.add[x][y]] != target.add[f[x]][f[y]]:
                raise NotAHom("add", (x, y))
            if f[source.mul[x][y]] != target.mul[f[x]][f[y]]:
                raise NotAHom("mul", (x, y))
    return SemiringHom(source, target, f)


def all_homs(source: FiniteSemiring, target: FiniteSemiring) -> list[SemiringHom]:
    """Every homomorphism ``source -> target``, in lexicographic map order."""
    out = []
    n, m = source.order, target.order
    for rest in itertools.product(range(m), repeat=n - 2):
        f = (0, 1, *rest)
        if _is_hom(source, target, f):
            out.append(SemiringHom(source, target, f))
    return out


def _is_hom(S: FiniteSemiring, T: FiniteSemiring, f: tuple[int, ...]) -> bool:
    if T.order < 2:
        return False
    for x in S.elements:
        ax, mx, fx = S.add[x], S.mul[x], f[x]
        tax, tmx = T.add[fx], T.mul[fx]
        for y in S.elements:
            if f[ax[y]] != tax[f[y]] or f[mx[y]] != tmx[f[y]]:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _homs_cached(source: FiniteSemiring, target: FiniteSemiring) -> tuple[SemiringHom, ...]:
    return tuple(all_homs(source, target))


def hom_targets(S: FiniteSemiring, ctx) -> list[FiniteSemiring]:
    out = [S]
    for T in getattr(ctx, "hom_targets", ()) or ():
        if T not in out:
            out.append(T)
    return out


def hom_instances(S: FiniteSemiring, ctx):
    for T in hom_targets(S, ctx):
        for phi in _homs_cached(S, T):
            yield {"hom": phi.to_json()}


@functools.lru_cache(maxsize=256)
def _target_cached(add: Table, mul: Table) -> FiniteSemiring:
    return validate(add, mul)


def hom_from_witness(S: FiniteSemiring, obj: dict) -> SemiringHom:
    t = obj["target"]
    T = _target_cached(tuple(map(tuple, t["add"])), tuple(map(tuple, t["mul"])))
    return validate_hom(S, T, obj["map"])


# -- claims ------------------------------------------------------------------------

def _pairs(S, ctx):
    for x in S.elements:
        for y in S.elements:
            yield {"x": x, "y": y}


@claim("epvs.1", "V(S) is nonempty (contains 0)", status=PROVEN, instances=single)
def _epvs1(S, w):
    return bool(_inverse_bits(S) & 1)


@claim("epvs.2", "V(S) is a submonoid of (S,+)", status=PROVEN, instances=_pairs,
       kinds={"x": ELEMENT, "y": ELEMENT})
def _epvs2(S, w):
    v = _inverse_bits(S)
    x, y = w["x"], w["y"]
    if not (v >> x & 1 and v >> y & 1):
        return None
    return bool(v & 1) and bool(v >> S.add[x][y] & 1)


@claim("epvs.3", "s+s' in V(S) implies s, s' in V(S)", status=PROVEN, instances=_pairs,
       kinds={"x": ELEMENT, "y": ELEMENT})
def _epvs3(S, w):
    v = _inverse_bits(S)
    x, y = w["x"], w["y"]
    if not v >> S.add[x][y] & 1:
        return None
    return bool(v >> x & 1 and v >> y & 1)


@claim("epvs.4", "S is a ring iff V(S) = S", status=PROVEN, instances=single)
def _epvs4(S, w):
    # independent ring test: every row of the addition table is a permutation
    group = all(sorted(row) == list(S.elements) for row in S.add)
    return group == is_ring(S)
