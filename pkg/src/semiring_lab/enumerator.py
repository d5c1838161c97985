"""Enumeration of finite commutative semirings with identity, up to isomorphism.

The search is orderly: additive monoids are generated by backtracking and
kept only when their table is the least in its orbit under permutations
fixing 0 and 1; for each such monoid the multiplication tables are
backtracked with associativity/distributivity checks, and a pair is emitted
only when its multiplication table is least under the automorphisms of the
additive table.  The result is exactly one canonical form per class.
"""

from __future__ import annotations

import itertools
import json
import logging
from pathlib import Path
from typing import Iterator

from .errors import OrderTooLarge
from .kernel import FiniteSemiring, first_violation, relabel

log = logging.getLogger(__name__)

GENERATOR_VERSION = 1
SOFT_MAX_ORDER = 6


def _perms(n: int) -> list[tuple[int, ...]]:
    return [(0, 1, *p) for p in itertools.permutations(range(2, n))]


def _apply(T, perm, n):
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        px = perm[x]
        row = T[x]
        for y in range(n):
            out[px][perm[y]] = perm[row[y]]
    return out


def _flat(T) -> tuple[int, ...]:
    return tuple(itertools.chain.from_iterable(T))


def canonical_form(S: FiniteSemiring) -> FiniteSemiring:
    """Relabelling of ``S`` with the least (add, mul) encoding, 0 and 1 fixed."""
    n = S.order
    best, best_perm = None, None
    for p in _perms(n):
        enc = _flat(_apply(S.add, p, n)) + _flat(_apply(S.mul, p, n))
        if best is None or enc < best:
            best, best_perm = enc, p
    return relabel(S, best_perm)


def are_isomorphic(A: FiniteSemiring, B: FiniteSemiring) -> bool:
    if A.order != B.order:
        return False
    return canonical_form(A).encoding() == canonical_form(B).encoding()


def _assoc_ok(T, n, i, j) -> bool:
    """Associativity on every determined triple whose lookups touch cell (i, j)."""

    def triple(x, y, z):
        a = T[x][y]
        if a < 0:
            return True
        b = T[y][z]
        if b < 0:
            return True
        lhs = T[a][z]
        rhs = T[x][b]
        return lhs < 0 or rhs < 0 or lhs == rhs

    R = range(n)
    for (p, q) in ((i, j), (j, i)):
        for t in R:
            if not triple(p, q, t) or not triple(t, p, q):
                return False
        for x in R:
            row = T[x]
            for y in R:
                if row[y] == p and not triple(x, y, q):
                    return False
                if row[y] == q and not triple(p, x, y):
                    return False
    return True


def _monoids(n: int) -> Iterator[list[list[int]]]:
    """Commutative monoid tables on 0..n-1 with identity 0 (labelled)."""
    T = [[-1] * n for _ in range(n)]
    for x in range(n):
        T[0][x] = T[x][0] = x
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]

    def rec(k):
        if k == len(cells):
            yield T
            return
        i, j = cells[k]
        for v in range(n):
            T[i][j] = T[j][i] = v
            if _assoc_ok(T, n, i, j):
                yield from rec(k + 1)
        T[i][j] = T[j][i] = -1

    yield from rec(0)


def _distrib_ok(M, A, sums_to, n, i, j) -> bool:
    """x(y+z) = xy + xz on every determined triple touching cell (i, j)."""

    def triple(x, y, z):
        a = M[x][A[y][z]]
        if a < 0:
            return True
        b, c = M[x][y], M[x][z]
        return b < 0 or c < 0 or a == A[b][c]

    R = range(n)
    for (p, q) in ((i, j), (j, i)):
        for y, z in sums_to[q]:
            if not triple(p, y, z):
                return False
        for t in R:
            if not triple(p, q, t) or not triple(p, t, q):
                return False
    return True


def _multiplications(A, n: int) -> Iterator[list[list[int]]]:
    M = [[-1] * n for _ in range(n)]
    for x in range(n):
        M[0][x] = M[x][0] = 0
        M[1][x] = M[x][1] = x
    sums_to = [[] for _ in range(n)]
    for y in range(n):
        for z in range(n):
            sums_to[A[y][z]].append((y, z))
    # rows 0 and 1 are fixed; they must already be consistent with A
    for x in range(n):
        if not _distrib_ok(M, A, sums_to, n, x, 0) or not _distrib_ok(M, A, sums_to, n, x, 1):
            return
    cells = [(i, j) for i in range(2, n) for j in range(i, n)]

    def rec(k):
        if k == len(cells):
            yield M
            return
        i, j = cells[k]
        for v in range(n):
            M[i][j] = M[j][i] = v
            if _assoc_ok(M, n, i, j) and _distrib_ok(M, A, sums_to, n, i, j):
                yield from rec(k + 1)
        M[i][j] = M[j][i] = -1

    yield from rec(0)


def _check_order(n: int, allow_large: bool) -> None:
    if n > SOFT_MAX_ORDER and not allow_large:
        raise OrderTooLarge(f"order {n} exceeds the soft cap {SOFT_MAX_ORDER}; pass allow_large=True")


def enumerate_semirings(n: int, allow_large: bool = False) -> list[FiniteSemiring]:
    """One canonical representative per isomorphism class of order ``n``.

    Sorted by ascending canonical encoding; empty for ``n < 2``.
    """
    _check_order(n, allow_large)
    if n < 2:
        return []
    perms = _perms(n)
    found = []
    for A in _monoids(n):
        flatA = _flat(A)
        images = [(p, _flat(_apply(A, p, n))) for p in perms]
        if any(img < flatA for _, img in images):
            continue
        autos = [p for p, img in images if img == flatA]
        A_t = tuple(tuple(r) for r in A)
        for M in _multiplications(A, n):
            flatM = _flat(M)
            if any(_flat(_apply(M, p, n)) < flatM for p in autos):
                continue
            M_t = tuple(tuple(r) for r in M)
            found.append(FiniteSemiring(A_t, M_t))
    found.sort(key=FiniteSemiring.encoding)
    return _named(found)


def _named(items: list[FiniteSemiring]) -> list[FiniteSemiring]:
    return [FiniteSemiring(S.add, S.mul, name=f"S{S.order}_{k}") for k, S in enumerate(items)]


def enumerate_semirings_naive(n: int) -> list[FiniteSemiring]:
    """Filter every table pair with the identity rows and symmetry imposed.

    Independent of the backtracking search; only practical for n <= 4.
    """
    if n < 2:
        return []
    add_cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    mul_cells = [(i, j) for i in range(2, n) for j in range(i, n)]
    seen = set()
    for avals in itertools.product(range(n), repeat=len(add_cells)):
        A = [[x if y == 0 else (y if x == 0 else 0) for y in range(n)] for x in range(n)]
        for (i, j), v in zip(add_cells, avals):
            A[i][j] = A[j][i] = v
        At = tuple(tuple(r) for r in A)
        for mvals in itertools.product(range(n), repeat=len(mul_cells)):
            M = [[0] * n for _ in range(n)]
            for x in range(n):
                M[1][x] = M[x][1] = x
            M[0][1] = M[1][0] = 0
            for (i, j), v in zip(mul_cells, mvals):
                M[i][j] = M[j][i] = v
            Mt = tuple(tuple(r) for r in M)
            axiom, _ = first_violation(At, Mt)
            if axiom is None:
                seen.add(canonical_form(FiniteSemiring(At, Mt)).encoding())
    out = []
    half = n * n
    for enc in sorted(seen):
        A = tuple(tuple(enc[r * n:(r + 1) * n]) for r in range(n))
        M = tuple(tuple(enc[half + r * n: half + (r + 1) * n]) for r in range(n))
        out.append(FiniteSemiring(A, M))
    return _named(out)


def enumerate_upto(n: int, allow_large: bool = False) -> list[FiniteSemiring]:
    """All classes of orders 2..n, order by order."""
    out = []
    for k in range(2, n + 1):
        out.extend(enumerate_semirings(k, allow_large))
    return out


# -- corpus files ---------------------------------------------------------------

def write_corpus(items, path: str | Path) -> None:
    with open(path, "w") as fh:
        for S in items:
            fh.write(json.dumps(S.to_json(), separators=(",", ":")) + "\n")


def read_corpus(path: str | Path) -> list[FiniteSemiring]:
    from .kernel import from_json

    out = []
    with open(path) as fh:
        for line in fh:
            if line.strip():
                out.append(from_json(json.loads(line)))
    return out


def cached_corpus(n: int, cache_dir: str | Path | None = None, allow_large: bool = False) -> list[FiniteSemiring]:
    """Order-``n`` classes, read from/written to a cache keyed by order and generator version."""
    if cache_dir is None:
        return enumerate_semirings(n, allow_large)
    path = Path(cache_dir) / f"corpus-v{GENERATOR_VERSION}-n{n}.jsonl"
    if path.exists():
        return read_corpus(path)
    items = enumerate_semirings(n, allow_large)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_corpus(items, path)
    log.info("wrote %d semirings of order %d to %s", len(items), n, path)
    return items
