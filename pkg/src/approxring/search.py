"""Bounded enumeration of small structures and counterexample search.

A *structure* is a carrier of ``n`` elements with a feature partition, an
addition table, a multiplication table and a designated subset ``R``.
Structures are canonical under relabeling of the carrier: each one is the
lexicographically least encoding among all ``n!`` relabelings.
"""

from __future__ import annotations

import random
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import ApproxError
from .ideals import is_approx_ideal, is_approx_prime_ideal
from .optables import OpTable
from .proximity import DescriptiveSpace, Subset, all_subsets
from .structures import RingContext, is_approx_ring
from .theorems import REGISTRY, Bundle, TheoremReport, verify_theorem

FAMILIES = ("all", "grid", "classical", "perturbed", "random")
SAMPLED = ("perturbed", "random")


@dataclass(frozen=True)
class Budget:
    max_carrier: int = 3
    max_feature_classes: int = 2
    op_families: tuple[str, ...] = ("all", "grid", "classical", "perturbed", "random")
    # per op family; 0 means nothing is examined
    max_candidates: int = 1000
    seed: int = 0
    # "all": every non-empty R; "full": R is the whole carrier
    subsets: str = "all"
    # only the discrete feature partition (classical collapse)
    injective: bool = False

    def __post_init__(self):
        unknown = set(self.op_families) - set(FAMILIES)
        if unknown:
            raise ValueError(f"unknown op families {sorted(unknown)}; choose from {FAMILIES}")
        if self.max_carrier < 1 or self.max_feature_classes < 1 or self.max_candidates < 0:
            raise ValueError("budget bounds must be positive")
        if self.subsets not in ("all", "full"):
            raise ValueError("subsets must be 'all' or 'full'")


@dataclass(frozen=True)
class Structure:
    n: int
    classes: tuple[int, ...]
    add: tuple[int, ...]
    mul: tuple[int, ...]
    R: int
    family: str = field(default="", compare=False)

    def key(self) -> tuple:
        return (self.n, self.classes, self.add, self.mul, self.R)

    def relabel(self, perm: Sequence[int]) -> Structure:
        n = self.n
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cls = _rgs([self.classes[inv[i]] for i in range(n)])
        add = tuple(perm[self.add[inv[i] * n + inv[j]]] for i in range(n) for j in range(n))
        mul = tuple(perm[self.mul[inv[i] * n + inv[j]]] for i in range(n) for j in range(n))
        R = sum(1 << perm[i] for i in range(n) if self.R >> i & 1)
        return Structure(n, cls, add, mul, R, self.family)

    def canonical(self) -> Structure:
        return min((self.relabel(p) for p in permutations(range(self.n))), key=Structure.key)

    def is_canonical(self) -> bool:
        k = self.key()
        return all(self.relabel(p).key() >= k for p in permutations(range(self.n)))

    def context(self) -> RingContext:
        n = self.n
        labels = list(string.ascii_lowercase[:n])
        space = DescriptiveSpace(labels, [(c,) for c in self.classes])
        add = OpTable(space, tuple(tuple(self.add[i * n: (i + 1) * n]) for i in range(n)), "add")
        mul = OpTable(space, tuple(tuple(self.mul[i * n: (i + 1) * n]) for i in range(n)), "mul")
        R = Subset(space, frozenset(i for i in range(n) if self.R >> i & 1))
        return RingContext(R, add, mul, "R")


def _rgs(labels: Sequence[int]) -> tuple[int, ...]:
    """Renumber class ids by first occurrence (restricted growth string)."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen)) for c in labels)


def partitions(n: int, max_classes: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of n points with at most ``max_classes`` blocks, as RGS."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(min(top + 2, max_classes)):
            yield from rec(prefix + [c], max(top, c))
    yield from rec([0], 0) if n else iter(())


def _masks(n: int, mode: str) -> list[int]:
    full = (1 << n) - 1
    return [full] if mode == "full" else list(range(1, full + 1))


# -- op families ----------------------------------------------------------------

def _grid_tables(n: int):
    # grids fitting n elements whose mod-2 / min images stay inside the grid
    shapes = {1: [(1, 1)], 2: [(1, 2), (2, 1)], 4: [(2, 2)]}.get(n, [])
    for h, w in shapes:
        coords = [(i, j) for i in range(h) for j in range(w)]
        at = {c: k for k, c in enumerate(coords)}
        add = tuple(at[((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)] for a in coords for b in coords)
        mul = tuple(at[(min(a[0], b[0]), min(a[1], b[1]))] for a in coords for b in coords)
        yield add, mul


def _classical_tables(n: int):
    """Addition and multiplication tables of classical rings of order n."""
    out = []
    zn_add = tuple((a + b) % n for a in range(n) for b in range(n))
    for c in range(n):
        out.append((zn_add, tuple((a * b * c) % n for a in range(n) for b in range(n))))
    if n == 4:
        vec = [(0, 0), (0, 1), (1, 0), (1, 1)]
        idx = {v: k for k, v in enumerate(vec)}
        kadd = tuple(idx[((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)] for a in vec for b in vec)
        for img in product(range(4), repeat=4):
            basis = {(0, 0): vec[img[0]], (0, 1): vec[img[1]], (1, 0): vec[img[2]], (1, 1): vec[img[3]]}

            def mul(a, b):
                r0 = r1 = 0
                for i in range(2):
                    for j in range(2):
                        if a[i] and b[j]:
                            r0 ^= basis[i, j][0]
                            r1 ^= basis[i, j][1]
                return (r0, r1)

            t = tuple(idx[mul(a, b)] for a in vec for b in vec)
            if all(t[t[x * 4 + y] * 4 + z] == t[x * 4 + t[y * 4 + z]] for x in range(4) for y in range(4) for z in range(4)):
                out.append((kadd, t))
    return out


class StructureStream:
    """Iterable over canonical structures within a budget.

    After iteration ``count``, ``per_family`` and ``truncated`` describe what
    was produced.  ``truncated`` means an exhaustive family was cut short;
    sampled families draw ``max_candidates`` times and skip repeats.
    """

    def __init__(self, budget: Budget):
        self.budget = budget
        self.count = 0
        self.per_family: dict[str, int] = {}
        self.truncated = False

    def __iter__(self) -> Iterator[Structure]:
        b = self.budget
        seen: set[tuple] = set()
        self.count = 0
        self.truncated = False
        for fam in b.op_families:
            produced = 0
            if b.max_candidates == 0:
                self.truncated = True
                continue
            sampled = fam in SAMPLED
            for draws, s in enumerate(self._family(fam), 1):
                # sampled families spend the budget on draws, exhaustive ones on distinct results
                if sampled and draws > b.max_candidates:
                    break
                k = s.key()
                if k in seen:
                    continue
                if not sampled and produced >= b.max_candidates:
                    self.truncated = True
                    break
                seen.add(k)
                produced += 1
                self.count += 1
                yield s
            self.per_family[fam] = produced

    def _partitions(self, n: int):
        if self.budget.injective:
            return iter([tuple(range(n))])
        return partitions(n, self.budget.max_feature_classes)

    def _random_partition(self, rng: random.Random, n: int) -> tuple[int, ...]:
        if self.budget.injective:
            return tuple(range(n))
        return _rgs([rng.randrange(self.budget.max_feature_classes) for _ in range(n)])

    def _family(self, fam: str) -> Iterator[Structure]:
        b = self.budget
        rng = random.Random(f"{b.seed}:{fam}")
        sizes = range(1, b.max_carrier + 1)
        if fam == "all":
            for n in sizes:
                for cls in self._partitions(n):
                    for R in _masks(n, b.subsets):
                        for add in product(range(n), repeat=n * n):
                            for mul in product(range(n), repeat=n * n):
                                s = Structure(n, cls, add, mul, R, fam)
                                if s.is_canonical():
                                    yield s
        elif fam in ("grid", "classical"):
            for n in sizes:
                tables = _grid_tables(n) if fam == "grid" else _classical_tables(n)
                for add, mul in tables:
                    for cls in self._partitions(n):
                        for R in _masks(n, b.subsets):
                            yield Structure(n, cls, add, mul, R, fam).canonical()
        elif fam == "perturbed":
            rings = [(n, t) for n in sizes for t in _classical_tables(n) if n > 1]
            if not rings:
                return
            while True:
                n, (add, mul) = rng.choice(rings)
                add, mul = list(add), list(mul)
                target = add if rng.random() < 0.5 else mul
                target[rng.randrange(n * n)] = rng.randrange(n)
                cls = self._random_partition(rng, n)
                R = rng.choice(_masks(n, b.subsets))
                yield Structure(n, cls, tuple(add), tuple(mul), R, fam).canonical()
        elif fam == "random":
            while True:
                n = rng.choice(list(sizes))
                add = tuple(rng.randrange(n) for _ in range(n * n))
                mul = tuple(rng.randrange(n) for _ in range(n * n))
                cls = self._random_partition(rng, n)
                R = rng.choice(_masks(n, b.subsets))
                yield Structure(n, cls, add, mul, R, fam).canonical()


def enumerate_structures(budget: Budget) -> StructureStream:
    return StructureStream(budget)


# -- counterexample search -------------------------------------------------------

@dataclass
class SearchResult:
    theorem: str
    findings: list[TheoremReport]
    structures: int
    bundles: int
    truncated: bool

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "structures": self.structures,
            "bundles": self.bundles,
            "truncated": self.truncated,
            "findings": [f.to_dict() for f in self.findings],
        }


def _zero_ring() -> RingContext:
    return Structure(1, (0,), (0,), (0,), 1).context()


def _f2() -> RingContext:
    return Structure(2, (0, 1), (0, 1, 1, 0), (0, 0, 0, 1), 3).context()


def _try(f, *args) -> bool:
    try:
        return f(*args).verdict
    except ApproxError:
        return False


def bundles_for(theorem_id: str, ctx: RingContext) -> Iterator[Bundle]:
    """Expand one ring context into the bundles a theorem quantifies over."""
    needs = REGISTRY[theorem_id].needs
    space = ctx.space
    if needs == ("ctx",):
        yield Bundle(ctx=ctx)
    elif needs == ("ctx", "I"):
        for S in all_subsets(ctx.R.members):
            yield Bundle(ctx=ctx, I=Subset(space, S))
    elif needs == ("ctx", "p"):
        for p in sorted(ctx.R.members):
            yield Bundle(ctx=ctx, p=p)
    elif needs[:3] == ("ctx", "A", "B"):
        ideals = [Subset(space, S) for S in all_subsets(ctx.R.members) if _try(is_approx_ideal, Subset(space, S), ctx)]
        if needs == ("ctx", "A", "B"):
            for A in ideals:
                for B in ideals:
                    yield Bundle(ctx=ctx, A=A, B=B)
        else:
            primes = [A for A in ideals if _try(is_approx_prime_ideal, A, ctx)]
            for A in primes:
                for B in ideals:
                    for C in ideals:
                        yield Bundle(ctx=ctx, A=A, B=B, C=C)
    elif needs == ("left", "right"):
        for right in (ctx, _f2(), _zero_ring()):
            yield Bundle(left=ctx, right=right)


def _search_one(args) -> tuple[list[TheoremReport], int]:
    theorem_id, structure = args
    try:
        ctx = structure.context()
        if not is_approx_ring(ctx).verdict:
            # every hypothesis demands an approximate ring
            return [], 0
    except ApproxError:
        return [], 0
    found, count = [], 0
    for bundle in bundles_for(theorem_id, ctx):
        count += 1
        rep = verify_theorem(theorem_id, bundle, keep_bundle=False)
        if rep.classification == "counterexample":
            rep.bundle = bundle.to_document()
            rep.details["structure"] = {"family": structure.family, "key": list(map(list, _key_json(structure)))}
            found.append(rep)
    return found, count


def _key_json(s: Structure):
    return ([s.n], list(s.classes), list(s.add), list(s.mul), [s.R])


def search_counterexamples(theorem_id: str, budget: Budget, workers: int = 1, on_finding=None) -> SearchResult:
    """Run one theorem over every structure in the budget; keep counterexamples.

    Output order follows the structure stream, so results are deterministic
    for a given budget regardless of ``workers``.
    """
    if theorem_id not in REGISTRY:
        raise KeyError(f"unknown theorem {theorem_id!r}")
    stream = enumerate_structures(budget)
    findings: list[TheoremReport] = []
    bundles = 0
    jobs = ((theorem_id, s) for s in stream)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = pool.map(_search_one, jobs, chunksize=64)
            for found, count in results:
                bundles += count
                for f in found:
                    findings.append(f)
                    if on_finding:
                        on_finding(f)
    else:
        for job in jobs:
            found, count = _search_one(job)
            bundles += count
            for f in found:
                findings.append(f)
                if on_finding:
                    on_finding(f)
    return SearchResult(theorem_id, findings, stream.count, bundles, stream.truncated)
