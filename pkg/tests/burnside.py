"""Orbit counts of small structures under relabeling, by Burnside's lemma.

A structure is a feature partition of {0..n-1} with at most ``k`` blocks,
two binary tables and a non-empty subset.  Written independently of the
enumeration code, which picks canonical representatives instead.
"""

from fractions import Fraction
from itertools import permutations, product


def cycles(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x)
            x = perm[x]
        out.append(c)
    return out


def set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[head]] + p
        for i in range(len(p)):
            yield p[:i] + [[head] + p[i]] + p[i + 1:]


def fixed_partitions(perm, k):
    n = len(perm)
    count = 0
    for p in set_partitions(list(range(n))):
        if len(p) > k:
            continue
        blocks = {frozenset(b) for b in p}
        if {frozenset(perm[x] for x in b) for b in blocks} == blocks:
            count += 1
    return count


def fixed_tables(perm):
    """Tables t with perm(t(x, y)) = t(perm x, perm y)."""
    n = len(perm)
    lengths = [len(c) for c in cycles(perm)]
    seen, total = set(), 1
    for x, y in product(range(n), repeat=2):
        if (x, y) in seen:
            continue
        L, a, b = 0, x, y
        while (a, b) not in seen:
            seen.add((a, b))
            a, b = perm[a], perm[b]
            L += 1
        total *= sum(m for m in lengths if L % m == 0)
    return total


def fixed_constant_tables(perm):
    return sum(1 for c in range(len(perm)) if perm[c] == c)


def fixed_subsets(perm):
    return 2 ** len(cycles(perm)) - 1


def orbits(n, k, tables=fixed_tables):
    total = Fraction(0)
    perms = list(permutations(range(n)))
    for p in perms:
        total += fixed_partitions(p, k) * tables(p) ** 2 * fixed_subsets(p)
    total /= len(perms)
    assert total.denominator == 1
    return int(total)
