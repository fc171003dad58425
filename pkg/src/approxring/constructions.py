"""Quotients R/rho S and direct products R1 x R2."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .ideals import is_approx_ideal
from .optables import OpTable
from .proximity import DescriptiveSpace, Subset
from .reports import AxiomResult, CheckReport
from .structures import RingContext, is_approx_ring

RHO_CHOICES = ("descriptive", "set")


@dataclass(frozen=True)
class CosetSpace:
    """Cosets of ``S`` in the base context, grouped by the equivalence ``rho``.

    ``rho="set"`` identifies x and y when the coset sets x+S and y+S are
    equal.  ``rho="descriptive"`` identifies them when the two cosets carry
    the same set of feature vectors.  Each class becomes one element of a
    lifted space whose description is the feature set of its cosets.
    """

    base: RingContext
    S: Subset
    rho: str
    space: DescriptiveSpace
    classes: tuple[frozenset[int], ...]
    reps: tuple[int, ...]
    ring: RingContext
    upper_quotient: Subset
    audit: CheckReport
    _class_of: tuple[int, ...] = field(repr=False, compare=False)

    def class_of(self, x) -> int:
        return self._class_of[self.base.space.index_of(x)]

    def coset_of(self, x) -> Subset:
        i = self.base.space.index_of(x)
        a = self.base.add.table
        return Subset(self.base.space, frozenset(a[i][s] for s in self.S.members))

    @property
    def well_defined(self) -> bool:
        return self.audit.verdict

    def to_dict(self) -> dict:
        bl = self.base.space.labels
        return {
            "rho": self.rho,
            "classes": [
                {"label": self.space.labels[k], "members": [bl[i] for i in sorted(c)],
                 "coset": list(self.coset_of(self.reps[k]).labels)}
                for k, c in enumerate(self.classes)
            ],
            "ring": list(self.ring.R.labels),
            "upper_quotient": list(self.upper_quotient.labels),
            "audit": self.audit.to_dict(),
        }


def quotient(ctx: RingContext, S: Subset, rho: str = "descriptive", name: str = "S") -> CosetSpace:
    if rho not in RHO_CHOICES:
        raise ValueError(f"rho must be one of {RHO_CHOICES}")
    ideal = is_approx_ideal(S, ctx)
    if not ideal.verdict:
        raise PreconditionError("quotients need an approximate ideal", ideal)
    X = ctx.space
    a, m = ctx.add.table, ctx.mul.table
    n = len(X)
    cosets = [frozenset(a[x][s] for s in S.members) for x in range(n)]
    if rho == "set":
        keys = cosets
    else:
        keys = [X.features_of(c) for c in cosets]

    groups: dict = {}
    for x in range(n):
        groups.setdefault(keys[x], []).append(x)
    up = ctx.upper
    # representatives are taken inside the upper approximation of R when possible
    reps_by_key = {k: min((x for x in xs if x in up), default=xs[0]) for k, xs in groups.items()}
    order = sorted(groups, key=lambda k: reps_by_key[k])
    classes = tuple(frozenset(groups[k]) for k in order)
    reps = tuple(reps_by_key[k] for k in order)
    class_of = [0] * n
    for k, c in enumerate(classes):
        for x in c:
            class_of[x] = k

    labels = [f"[{X.labels[r]}]+{name}" for r in reps]
    space = DescriptiveSpace(labels, feature_sets=[X.features_of(cosets[r]) for r in reps])
    q = len(classes)
    add_q = OpTable(space, tuple(tuple(class_of[a[reps[i]][reps[j]]] for j in range(q)) for i in range(q)), "add")
    mul_q = OpTable(space, tuple(tuple(class_of[m[reps[i]][reps[j]]] for j in range(q)) for i in range(q)), "mul")

    rows = []
    for tag, t in (("add-well-defined", a), ("mul-well-defined", m)):
        seen: dict[tuple[int, int], tuple[int, int, int]] = {}
        bad = []
        for x in sorted(up):
            for y in sorted(up):
                key = (class_of[x], class_of[y])
                val = class_of[t[x][y]]
                if key not in seen:
                    seen[key] = (x, y, val)
                elif seen[key][2] != val:
                    x0, y0, _ = seen[key]
                    bad.append((X.labels[x0], X.labels[y0], X.labels[x], X.labels[y]))
        rows.append(AxiomResult.of(tag, bad))
    audit = CheckReport("quotient-audit", rows, ["representatives range over the upper approximation of R"])

    Rq = Subset(space, frozenset(class_of[x] for x in ctx.R.members))
    ring = RingContext(Rq, add_q, mul_q, f"{ctx.name or 'R'}/{name}")
    upper_q = Subset(space, frozenset(class_of[x] for x in up))
    return CosetSpace(ctx, S, rho, space, classes, reps, ring, upper_q, audit, tuple(class_of))


@dataclass(frozen=True)
class ProductContext(RingContext):
    """Direct product ring context; zero and unity come from fresh scans."""

    left: RingContext | None = None
    right: RingContext | None = None
    upper_law: bool = False

    def pair(self, a, b) -> int:
        i = self.left.space.index_of(a)
        j = self.right.space.index_of(b)
        return i * len(self.right.space) + j

    def split(self, k: int) -> tuple[int, int]:
        return divmod(k, len(self.right.space))


def product_space(X1: DescriptiveSpace, X2: DescriptiveSpace) -> DescriptiveSpace:
    labels = [f"({a},{b})" for a in X1.labels for b in X2.labels]
    if not X1.lifted and not X2.lifted:
        probe = [X1.probe(i) + X2.probe(j) for i in range(len(X1)) for j in range(len(X2))]
        return DescriptiveSpace(labels, probe)
    sets = [
        [f + g for f in X1.description(i) for g in X2.description(j)]
        for i in range(len(X1))
        for j in range(len(X2))
    ]
    return DescriptiveSpace(labels, feature_sets=sets)


def direct_product(left: RingContext, right: RingContext, name: str = "") -> ProductContext:
    for side, ctx in (("left", left), ("right", right)):
        rep = is_approx_ring(ctx)
        if not rep.verdict:
            raise PreconditionError(f"{side} factor is not an approximate ring", rep)
    X1, X2 = left.space, right.space
    n2 = len(X2)
    space = product_space(X1, X2)
    N = len(space)

    def componentwise(t1, t2, opname):
        rows = []
        for k in range(N):
            i, j = divmod(k, n2)
            rows.append(tuple(t1[i][l // n2] * n2 + t2[j][l % n2] for l in range(N)))
        return OpTable(space, tuple(rows), opname)

    add = componentwise(left.add.table, right.add.table, "add")
    mul = componentwise(left.mul.table, right.mul.table, "mul")
    R = Subset(space, frozenset(i * n2 + j for i in left.R.members for j in right.R.members))
    expected = frozenset(i * n2 + j for i in left.upper for j in right.upper)
    law = space.upper_idx(R.members) == expected
    label = name or f"{left.name or 'R1'}x{right.name or 'R2'}"
    return ProductContext(R, add, mul, label, left=left, right=right, upper_law=law)
