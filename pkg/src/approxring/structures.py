"""Checkers for approximate groupoids, semigroups, groups, rings and fields.

Every equation is evaluated with the ambient total tables and compared as
elements of the carrier.  Values may escape the subset, which is the point
of the approximate definitions; closure is only demanded inside the upper
approximation.  Scans iterate in element-index order so witness lists are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    AmbiguityError,
    ContainmentError,
    DegenerateInputError,
    DomainMismatchError,
    MissingUnityError,
    MissingZeroError,
)
from .optables import OpTable
from .proximity import DescriptiveSpace, Subset
from .reports import AxiomResult, CheckReport


@dataclass(frozen=True)
class RingContext:
    """A designated subset ``R`` with addition and multiplication tables.

    ``zero`` and ``one`` are located by scanning the upper approximation of
    ``R``; they are ``None`` when no candidate exists and raise
    :class:`AmbiguityError` when several do.
    """

    R: Subset
    add: OpTable
    mul: OpTable
    name: str = ""
    upper: frozenset[int] = field(init=False, compare=False, repr=False)
    zero_candidates: tuple[int, ...] = field(init=False, compare=False, repr=False)
    one_candidates: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        space = self.R.space
        for op in (self.add, self.mul):
            if op.space is not space and op.space != space:
                raise DomainMismatchError(f"operation {op.name!r} lives on another space")
        if not self.R.members:
            raise DegenerateInputError("ring context needs a non-empty subset")
        up = space.upper_idx(self.R.members)
        object.__setattr__(self, "upper", up)
        members = sorted(self.R.members)
        object.__setattr__(self, "zero_candidates", tuple(_identities(members, up, self.add.table)))
        object.__setattr__(self, "one_candidates", tuple(_identities(members, up, self.mul.table)))

    @property
    def space(self) -> DescriptiveSpace:
        return self.R.space

    @property
    def upper_subset(self) -> Subset:
        return Subset(self.space, self.upper)

    @property
    def zero(self) -> int | None:
        return self._unique(self.zero_candidates, "additive identity")

    @property
    def one(self) -> int | None:
        return self._unique(self.one_candidates, "unity")

    def _unique(self, cands, what):
        if len(cands) > 1:
            labels = [self.space.labels[c] for c in cands]
            raise AmbiguityError(f"several {what} candidates in upper approximation: {labels}")
        return cands[0] if cands else None

    def require_zero(self) -> int:
        z = self.zero
        if z is None:
            raise MissingZeroError("no additive identity in the upper approximation of R")
        return z

    def require_one(self) -> int:
        o = self.one
        if o is None:
            raise MissingUnityError("no unity in the upper approximation of R")
        return o

    def restrict(self, S: Subset, name: str = "") -> RingContext:
        return RingContext(S, self.add, self.mul, name)

    def labels(self, *idx: int) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in idx)


def _identities(G, up, t) -> list[int]:
    return [e for e in sorted(up) if all(t[x][e] == x and t[e][x] == x for x in G)]


def _w(space: DescriptiveSpace, *idx: int) -> tuple[str, ...]:
    return tuple(space.labels[i] for i in idx)


def _members(G: Subset) -> list[int]:
    if not G.members:
        raise DegenerateInputError("checker needs a non-empty subset")
    return sorted(G.members)


def _same_space(G: Subset, op: OpTable) -> None:
    if op.space is not G.space and op.space != G.space:
        raise DomainMismatchError(f"operation {op.name!r} and subset come from different spaces")


# -- row builders over raw indices -------------------------------------------

def _ag1(space, G, up, t):
    return AxiomResult.of("AG1", (_w(space, x, y, t[x][y]) for x in G for y in G if t[x][y] not in up))


def _ag2(space, G, up, t):
    bad, phi_only, escaped = [], 0, 0
    for x, y, z in product(G, repeat=3):
        lhs = t[t[x][y]][z]
        rhs = t[x][t[y][z]]
        if lhs not in up or rhs not in up:
            escaped += 1
        if lhs != rhs:
            bad.append(_w(space, x, y, z))
            if space.phi_equal(lhs, rhs):
                phi_only += 1
    info = {"values_outside_upper": escaped, "phi_equal_violations": phi_only}
    return AxiomResult.of("AG2", bad), info


def _group_rows(space, G, up, t):
    """AG1-AG4 rows, the identity found (or None) and the abelian flag."""
    rows = [_ag1(space, G, up, t)]
    ag2, info = _ag2(space, G, up, t)
    rows.append(ag2)
    cands = _identities(G, up, t)
    if len(cands) > 1:
        raise AmbiguityError(f"several identities act on G: {[space.labels[c] for c in cands]}")
    notes = []
    e = cands[0] if cands else None
    if e is None:
        ws = []
        for cand in sorted(up):
            x = next(x for x in G if t[x][cand] != x or t[cand][x] != x)
            ws.append(_w(space, cand, x))
        rows.append(AxiomResult.of("AG3", ws))
        notes.append("AG4 not evaluated: no identity in the upper approximation")
    else:
        rows.append(AxiomResult("AG3", True))
        no_inv = [_w(space, x) for x in G if not any(t[x][y] == e and t[y][x] == e for y in G)]
        rows.append(AxiomResult.of("AG4", no_inv))
    abelian = all(t[x][y] == t[y][x] for x in G for y in G)
    info["identity"] = None if e is None else space.labels[e]
    info["abelian"] = abelian
    return rows, e, info, notes


# -- public checkers -----------------------------------------------------------

def is_approx_groupoid(G: Subset, op: OpTable) -> CheckReport:
    _same_space(G, op)
    members = _members(G)
    up = G.space.upper_idx(G.members)
    return CheckReport("groupoid", [_ag1(G.space, members, up, op.table)])


def is_approx_semigroup(G: Subset, op: OpTable) -> CheckReport:
    _same_space(G, op)
    members = _members(G)
    up = G.space.upper_idx(G.members)
    ag2, info = _ag2(G.space, members, up, op.table)
    rep = CheckReport("semigroup", [_ag1(G.space, members, up, op.table), ag2], info=info)
    if info["phi_equal_violations"]:
        rep.notes.append(f"{info['phi_equal_violations']} AG2 violations are descriptively equal sides")
    return rep


def is_approx_group(G: Subset, op: OpTable) -> CheckReport:
    _same_space(G, op)
    members = _members(G)
    up = G.space.upper_idx(G.members)
    rows, _, info, notes = _group_rows(G.space, members, up, op.table)
    return CheckReport("group", rows, notes, info)


def _comm_pairs(space, G, t):
    return [_w(space, x, y) for x in G for y in G if x < y and t[x][y] != t[y][x]]


def is_commutative(ctx: RingContext) -> bool:
    t = ctx.mul.table
    return all(t[x][y] == t[y][x] for x in ctx.R.members for y in ctx.R.members)


def is_approx_ring(ctx: RingContext) -> CheckReport:
    """AR1-AR3 verdict; AR4 (commutativity) and AR5 (unity) are reported in ``info``."""
    space = ctx.space
    G = sorted(ctx.R.members)
    up = ctx.upper
    a, m = ctx.add.table, ctx.mul.table

    rows, zero, ginfo, notes = _group_rows(space, G, up, a)
    rows = [AxiomResult(f"AR1:{r.tag}", r.holds, r.witnesses, r.count) for r in rows]
    rows.append(AxiomResult.of("AR1:abelian", _comm_pairs(space, G, a)))
    ag1 = _ag1(space, G, up, m)
    ag2, sinfo = _ag2(space, G, up, m)
    rows.append(AxiomResult(f"AR2:{ag1.tag}", ag1.holds, ag1.witnesses, ag1.count))
    rows.append(AxiomResult(f"AR2:{ag2.tag}", ag2.holds, ag2.witnesses, ag2.count))

    left, right = [], []
    for x, y, z in product(G, repeat=3):
        if m[x][a[y][z]] != a[m[x][y]][m[x][z]]:
            left.append(_w(space, x, y, z))
        if m[a[x][y]][z] != a[m[x][z]][m[y][z]]:
            right.append(_w(space, x, y, z))
    rows.append(AxiomResult.of("AR3:left", left))
    rows.append(AxiomResult.of("AR3:right", right))

    commutative = not _comm_pairs(space, G, m)
    try:
        one = ctx.one
        unity = None if one is None else space.labels[one]
    except AmbiguityError:
        unity = "ambiguous"
        notes.append("several unity candidates in the upper approximation")
    info = {
        "zero": ginfo["identity"],
        "commutative": commutative,
        "unity": unity,
        "add_assoc_phi_equal_violations": ginfo["phi_equal_violations"],
        "mul_assoc_phi_equal_violations": sinfo["phi_equal_violations"],
    }
    return CheckReport("ring", rows, notes, info)


def is_approx_subring(S: Subset, ctx: RingContext) -> CheckReport:
    if not S.members <= ctx.R.members:
        raise ContainmentError("subring candidate is not contained in R")
    if not S.members:
        raise DegenerateInputError("subring candidate must be non-empty")
    rep = is_approx_ring(ctx.restrict(S))
    rep.check = "subring"
    return rep


@dataclass
class Invertibility:
    element: str
    left: bool
    right: bool
    left_inverses: list[str]
    right_inverses: list[str]

    @property
    def unit(self) -> bool:
        return self.left and self.right


def invertibility(x, ctx: RingContext) -> Invertibility:
    one = ctx.require_one()
    i = ctx.space.index_of(x)
    if i not in ctx.R.members:
        raise ContainmentError(f"{ctx.space.labels[i]} is not in R")
    m = ctx.mul.table
    R = sorted(ctx.R.members)
    lefts = [y for y in R if m[y][i] == one]
    rights = [z for z in R if m[i][z] == one]
    lab = ctx.space.labels
    return Invertibility(lab[i], bool(lefts), bool(rights), [lab[y] for y in lefts], [lab[z] for z in rights])


def units(ctx: RingContext) -> frozenset[int]:
    """Approximate units of R; empty when no unity exists."""
    one = ctx.one
    if one is None:
        return frozenset()
    m = ctx.mul.table
    R = ctx.R.members
    return frozenset(
        x for x in R if any(m[y][x] == one for y in R) and any(m[x][z] == one for z in R)
    )


def is_approx_field(ctx: RingContext, S: Subset | None = None) -> CheckReport:
    """Ring axioms plus: (R minus zero, mul) is a commutative approximate group.

    With ``S`` given, the subfield variant runs the same check on ``S``.
    """
    if S is not None:
        if not S.members <= ctx.R.members:
            raise ContainmentError("subfield candidate is not contained in R")
        ctx = ctx.restrict(S)
    zero = ctx.require_zero()
    nonzero = ctx.R.members - {zero}
    if not nonzero:
        raise DegenerateInputError("R consists of the zero element only")
    ring = is_approx_ring(ctx)
    space = ctx.space
    G = sorted(nonzero)
    up = space.upper_idx(nonzero)
    mrows, e, minfo, notes = _group_rows(space, G, up, ctx.mul.table)
    rows = ring.axioms + [AxiomResult(f"mul*:{r.tag}", r.holds, r.witnesses, r.count) for r in mrows]
    rows.append(AxiomResult.of("mul*:abelian", _comm_pairs(space, G, ctx.mul.table)))
    info = {"zero": space.labels[zero], "multiplicative_identity": minfo["identity"]}
    return CheckReport("field" if S is None else "subfield", rows, ring.notes + notes, info)


def is_approx_irreducible(a, ctx: RingContext) -> CheckReport:
    ctx.require_one()
    space = ctx.space
    i = space.index_of(a)
    if i not in ctx.R.members:
        raise ContainmentError(f"{space.labels[i]} is not in R")
    u = units(ctx)
    m = ctx.mul.table
    R = sorted(ctx.R.members)
    rows = [AxiomResult.of("non-unit", [_w(space, i)] if i in u else [])]
    factorizations = [(b, c) for b in R for c in R if m[b][c] == i and m[b][c] in ctx.upper]
    bad = [_w(space, b, c) for b, c in factorizations if b not in u and c not in u]
    rows.append(AxiomResult.of("factorizations", bad))
    info = {"factorizations": len(factorizations), "units": [space.labels[x] for x in sorted(u)]}
    notes = [] if factorizations else ["no factorization inside R; irreducible vacuously"]
    return CheckReport("irreducible", rows, notes, info)
