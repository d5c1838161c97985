"""Brute-force reference implementations working on raw tables only.

Nothing here imports the package, so agreement with it is meaningful.
"""

from itertools import combinations


def subsets(n):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            yield frozenset(c)


def is_ideal(A, M, X):
    n = len(A)
    return (0 in X and all(A[x][y] in X for x in X for y in X)
            and all(M[s][x] in X for s in range(n) for x in X))


def ideals(A, M):
    return [X for X in subsets(len(A)) if is_ideal(A, M, X)]


def inverses(A):
    return {x: y for x in range(len(A)) for y in range(len(A)) if A[x][y] == 0}


def semisubtractive(A, M, X):
    inv = inverses(A)
    return all(inv[x] in X for x in X if x in inv)


def ss_ideals(A, M):
    return [X for X in ideals(A, M) if semisubtractive(A, M, X)]


def closure(A, M, X):
    out = frozenset(range(len(A)))
    for Y in ss_ideals(A, M):
        if X <= Y:
            out &= Y
    return out


def prime_elementwise(A, M, P):
    n = len(A)
    return len(P) < n and all(x in P or y in P for x in range(n) for y in range(n) if M[x][y] in P)


def product(A, M, X, Y):
    # ideal generated by all products
    gens = {M[x][y] for x in X for y in Y}
    return min((Z for Z in ideals(A, M) if gens <= Z), key=len)


def prime_idealwise(A, M, P):
    n = len(A)
    if len(P) == n:
        return False
    ids = ideals(A, M)
    return all(X <= P or Y <= P for X in ids for Y in ids if product(A, M, X, Y) <= P)


def homs(A, M, B, N):
    from itertools import product as cart

    n, m = len(A), len(B)
    out = []
    for rest in cart(range(m), repeat=n - 2):
        f = (0, 1) + rest
        if all(f[A[x][y]] == B[f[x]][f[y]] and f[M[x][y]] == N[f[x]][f[y]]
               for x in range(n) for y in range(n)):
            out.append(f)
    return out
