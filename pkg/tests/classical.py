"""Textbook ring checks on explicit Cayley tables, used as an oracle.

Nothing here imports the package under test.  Rings are built from their
usual descriptions (residues, polynomial quotients, products) rather than
from the enumeration code in ``approxring.search``.
"""

from itertools import product


class Ring:
    def __init__(self, name, labels, add, mul):
        self.name = name
        self.labels = list(labels)
        self.n = len(self.labels)
        self.add = add
        self.mul = mul

    def rows(self, t):
        return [[self.labels[t[i][j]] for j in range(self.n)] for i in range(self.n)]


def _tables(elems, plus, times):
    idx = {e: k for k, e in enumerate(elems)}
    add = [[idx[plus(a, b)] for b in elems] for a in elems]
    mul = [[idx[times(a, b)] for b in elems] for a in elems]
    return add, mul


def zmod(n):
    add, mul = _tables(list(range(n)), lambda a, b: (a + b) % n, lambda a, b: (a * b) % n)
    return Ring(f"Z{n}", [str(k) for k in range(n)], add, mul)


def f2_poly_quotient(name, modulus):
    """F2[x]/(x^2 + c1 x + c0) on pairs (a0, a1) meaning a0 + a1 x."""
    c0, c1 = modulus
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def times(a, b):
        # (a0 + a1 x)(b0 + b1 x), then x^2 = c0 + c1 x
        lo = a[0] * b[0]
        mid = a[0] * b[1] + a[1] * b[0]
        hi = a[1] * b[1]
        return ((lo + hi * c0) % 2, (mid + hi * c1) % 2)

    add, mul = _tables(elems, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2), times)
    return Ring(name, ["0", "1", "x", "x+1"], add, mul)


def direct(r, s):
    elems = list(product(range(r.n), range(s.n)))
    add, mul = _tables(
        elems,
        lambda a, b: (r.add[a[0]][b[0]], s.add[a[1]][b[1]]),
        lambda a, b: (r.mul[a[0]][b[0]], s.mul[a[1]][b[1]]),
    )
    labels = [f"{r.labels[i]}|{s.labels[j]}" for i, j in elems]
    return Ring(f"{r.name}x{s.name}", labels, add, mul)


def commutative_unital_rings():
    """One representative of every commutative ring with 1 of order <= 4."""
    return [
        zmod(1), zmod(2), zmod(3), zmod(4),
        direct(zmod(2), zmod(2)),
        f2_poly_quotient("F4", (1, 1)),          # x^2 = x + 1
        f2_poly_quotient("F2[x]/x^2", (0, 0)),   # x^2 = 0
    ]


# -- checks on a subset S (indices) of a ring ------------------------------------

def is_ring(r, S):
    S = sorted(S)
    if not S:
        return False
    a, m = r.add, r.mul
    if any(a[x][y] not in S or m[x][y] not in S for x in S for y in S):
        return False
    zeros = [e for e in S if all(a[e][x] == x and a[x][e] == x for x in S)]
    if not zeros:
        return False
    z = zeros[0]
    return (
        all(any(a[x][y] == z for y in S) for x in S)
        and all(a[x][y] == a[y][x] for x in S for y in S)
        and all(a[a[x][y]][w] == a[x][a[y][w]] for x in S for y in S for w in S)
        and all(m[m[x][y]][w] == m[x][m[y][w]] for x in S for y in S for w in S)
        and all(m[x][a[y][w]] == a[m[x][y]][m[x][w]] and m[a[y][w]][x] == a[m[y][x]][m[w][x]]
                for x in S for y in S for w in S)
    )


def zero_of(r, S):
    for e in S:
        if all(r.add[e][x] == x for x in S):
            return e
    return None


def is_ideal(r, S, I):
    if not I or not set(I) <= set(S):
        return False
    z = zero_of(r, S)
    a, m = r.add, r.mul
    return (
        all(a[x][y] in I for x in I for y in I)
        and all(any(a[x][y] == z for y in I) for x in I)
        and all(m[s][x] in I and m[x][s] in I for s in S for x in I)
    )


def is_prime_ideal(r, S, P, proper=True):
    if not is_ideal(r, S, P):
        return False
    if proper and set(P) == set(S):
        return False
    return all(x in P or y in P for x in S for y in S if r.mul[x][y] in P)


def unity_of(r, S):
    for e in S:
        if all(r.mul[e][x] == x and r.mul[x][e] == x for x in S):
            return e
    return None


def is_integral_domain(r, S):
    if not is_ring(r, S):
        return False
    z, one = zero_of(r, S), unity_of(r, S)
    if one is None or one == z:
        return False
    if any(r.mul[x][y] != r.mul[y][x] for x in S for y in S):
        return False
    return all(r.mul[x][y] != z for x in S for y in S if x != z and y != z)


def is_field(r, S):
    if not is_integral_domain(r, S):
        return False
    z, one = zero_of(r, S), unity_of(r, S)
    return all(any(r.mul[x][y] == one for y in S) for x in S if x != z)


def relabel(r, perm):
    """Same ring with element k renamed to position perm[k]."""
    inv = [0] * r.n
    for k, p in enumerate(perm):
        inv[p] = k
    add = [[perm[r.add[inv[i]][inv[j]]] for j in range(r.n)] for i in range(r.n)]
    mul = [[perm[r.mul[inv[i]][inv[j]]] for j in range(r.n)] for i in range(r.n)]
    return Ring(f"{r.name}{list(perm)}", [r.labels[inv[i]] for i in range(r.n)], add, mul)


def all_encodings():
    from itertools import permutations
    return [relabel(r, p) for r in commutative_unital_rings() for p in permutations(range(r.n))]


# -- magmas ---------------------------------------------------------------------

def is_closed(t, S):
    return all(t[x][y] in S for x in S for y in S)


def is_semigroup(t, S):
    return is_closed(t, S) and all(t[t[x][y]][z] == t[x][t[y][z]] for x in S for y in S for z in S)


def is_group(t, S):
    if not S or not is_semigroup(t, S):
        return False
    ids = [e for e in S if all(t[e][x] == x == t[x][e] for x in S)]
    return bool(ids) and all(any(t[x][y] == ids[0] == t[y][x] for y in S) for x in S)
