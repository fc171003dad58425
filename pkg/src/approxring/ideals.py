"""Ideals, prime ideals, principal ideals, ideal products and the ring
properties defined through them (integral domains, prime rings)."""

from __future__ import annotations

from itertools import product

from .errors import (
    ContainmentError,
    DegenerateInputError,
    PreconditionError,
    StructureError,
)
from .proximity import Subset
from .reports import AxiomResult, CheckReport
from .structures import RingContext, _w, is_approx_ring, is_commutative, units

SIDES = ("left", "right", "two-sided")


def _check_inside(I: Subset, ctx: RingContext) -> list[int]:
    if I.space is not ctx.space and I.space != ctx.space:
        raise ContainmentError("subset lives on another space")
    if not I.members:
        raise DegenerateInputError("ideal candidates must be non-empty")
    if not I.members <= ctx.R.members:
        raise ContainmentError("ideal candidate is not contained in R")
    return sorted(I.members)


def additive_inverses(x: int, ctx: RingContext) -> list[int]:
    zero = ctx.zero
    if zero is None:
        return []
    a = ctx.add.table
    return [y for y in sorted(ctx.R.members) if a[x][y] == zero and a[y][x] == zero]


def is_approx_ideal(I: Subset, ctx: RingContext, side: str = "two-sided") -> CheckReport:
    """x+y and r.x (or x.r) land in the upper approximation of I, and some
    additive inverse of each x lies in I itself."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    members = _check_inside(I, ctx)
    space = ctx.space
    up = space.upper_idx(I.members)
    a, m = ctx.add.table, ctx.mul.table
    R = sorted(ctx.R.members)
    notes = []

    rows = [AxiomResult.of("sum", (_w(space, x, y, a[x][y]) for x in members for y in members if a[x][y] not in up))]
    if ctx.zero is None:
        notes.append("no additive identity in the upper approximation of R; negation fails")
    neg = [_w(space, x) for x in members if not any(y in I.members for y in additive_inverses(x, ctx))]
    rows.append(AxiomResult.of("negation", neg))
    if side in ("left", "two-sided"):
        rows.append(AxiomResult.of("left-absorb", (_w(space, r, x, m[r][x]) for r in R for x in members if m[r][x] not in up)))
    if side in ("right", "two-sided"):
        rows.append(AxiomResult.of("right-absorb", (_w(space, x, r, m[x][r]) for x in members for r in R if m[x][r] not in up)))
    info = {"side": side, "improper": I.members == ctx.R.members}
    return CheckReport("ideal", rows, notes, info)


def is_approx_prime_ideal(P: Subset, ctx: RingContext, strict: bool = False) -> CheckReport:
    """For all a, b in R: a.b in the upper approximation of P forces a or b into P.

    ``strict`` additionally demands P != R.
    """
    ideal = is_approx_ideal(P, ctx)
    if not ideal.verdict:
        raise PreconditionError("candidate is not an approximate ideal", ideal)
    space = ctx.space
    up = space.upper_idx(P.members)
    m = ctx.mul.table
    R = sorted(ctx.R.members)
    Pm = P.members
    bad = [_w(space, x, y, m[x][y]) for x, y in product(R, repeat=2)
           if m[x][y] in up and x not in Pm and y not in Pm]
    rows = [AxiomResult.of("prime", bad)]
    improper = Pm == ctx.R.members
    if strict:
        rows.append(AxiomResult.of("proper", [_w(space, *R)] if improper else []))
    notes = ["improper ideal (P = R) is prime vacuously"] if improper and not strict else []
    return CheckReport("prime-ideal", rows, notes, {"improper": improper, "strict": strict})


def upper_is_groupoid(ctx: RingContext) -> tuple[bool, bool]:
    """Whether the upper approximation of R is closed under + and under the product."""
    up = ctx.upper
    a, m = ctx.add.table, ctx.mul.table
    return (all(a[x][y] in up for x in up for y in up), all(m[x][y] in up for x in up for y in up))


def principal_ideal(p, ctx: RingContext) -> Subset:
    """(p) = { p.k : k in R, p.k in R }.  May be empty; callers flag that."""
    space = ctx.space
    i = space.index_of(p)
    if i not in ctx.R.members:
        raise ContainmentError(f"{space.labels[i]} is not in R")
    if not is_commutative(ctx):
        raise PreconditionError("principal ideals need a commutative context")
    add_ok, mul_ok = upper_is_groupoid(ctx)
    if not (add_ok and mul_ok):
        raise StructureError("the upper approximation of R is not a groupoid under both operations")
    if i in units(ctx):
        raise PreconditionError(f"{space.labels[i]} is an approximate unit")
    m = ctx.mul.table
    return Subset(space, frozenset(m[i][k] for k in ctx.R.members if m[i][k] in ctx.R.members))


def is_principal_prime(p, ctx: RingContext) -> CheckReport:
    space = ctx.space
    i = space.index_of(p)
    Pp = principal_ideal(i, ctx)
    info = {"principal_ideal": list(Pp.labels)}
    if not Pp.members:
        return CheckReport("principal-prime", [AxiomResult.of("non-empty", [_w(space, i)])],
                           ["(p) is empty: degenerate"], {**info, "degenerate": True})
    zero = ctx.zero
    zero_only = zero is not None and Pp.members <= {zero}
    rows = [AxiomResult.of("non-zero", [_w(space, i)] if zero_only else [])]
    ideal = is_approx_ideal(Pp, ctx)
    rows += ideal.prefixed("ideal:")
    notes = []
    if ideal.verdict:
        rows += is_approx_prime_ideal(Pp, ctx).axioms
    else:
        notes.append("(p) is not an ideal; primality not evaluated")
    return CheckReport("principal-prime", rows, notes, info)


def product_sums(A: Subset, B: Subset, ctx: RingContext) -> frozenset[int]:
    """All finite sums of products a.b (each product in the upper approximation
    of R), folded one term at a time.  The result may leave R."""
    for S in (A, B):
        rep = is_approx_ideal(S, ctx)
        if not rep.verdict:
            raise PreconditionError("ideal product needs two approximate ideals", rep)
    a, m = ctx.add.table, ctx.mul.table
    terms = frozenset(m[x][y] for x in A.members for y in B.members if m[x][y] in ctx.upper)
    sums = set(terms)
    frontier = set(terms)
    while frontier:
        new = {a[s][t] for s in frontier for t in terms} - sums
        sums |= new
        frontier = new
    return frozenset(sums)


def ideal_product(A: Subset, B: Subset, ctx: RingContext) -> Subset:
    return Subset(ctx.space, product_sums(A, B, ctx) & ctx.R.members)


def is_mult_closed(S: Subset, ctx: RingContext) -> CheckReport:
    zero = ctx.require_zero()
    space = ctx.space
    if not S.members <= ctx.R.members:
        raise ContainmentError("multiplicative set must lie in R")
    rows = [AxiomResult.of("non-empty", [()] if not S.members else [])]
    rows.append(AxiomResult.of("zero-free", [_w(space, zero)] if zero in S.members else []))
    up = space.upper_idx(S.members)
    m = ctx.mul.table
    Sm = sorted(S.members)
    rows.append(AxiomResult.of("closure", (_w(space, x, y, m[x][y]) for x in Sm for y in Sm if m[x][y] not in up)))
    return CheckReport("mult-closed", rows)


def is_approx_integral_domain(ctx: RingContext) -> CheckReport:
    """Commutative non-zero approximate ring without zero divisors.

    Raises PreconditionError on a non-commutative context.
    """
    zero = ctx.require_zero()
    if not is_commutative(ctx):
        raise PreconditionError("integral domains are defined for commutative contexts")
    space = ctx.space
    ring = is_approx_ring(ctx)
    rows = ring.prefixed("ring:")
    nonzero = sorted(ctx.R.members - {zero})
    rows.append(AxiomResult.of("non-zero-ring", [] if nonzero else [_w(space, zero)]))
    m = ctx.mul.table
    divisors = [(x, y) for x in nonzero for y in nonzero if m[x][y] == zero]
    rows.append(AxiomResult.of("no-zero-divisors", (_w(space, x, y) for x, y in divisors)))
    info = {
        "zero": space.labels[zero],
        "zero_in_R": zero in ctx.R.members,
        "divisor_products_in_upper": sum(1 for x, y in divisors if m[x][y] in ctx.upper),
    }
    return CheckReport("integral-domain", rows, ring.notes, info)


def zero_ideal(ctx: RingContext) -> Subset:
    """Carrier of (0): the zero element if it lies in R, else empty."""
    zero = ctx.require_zero()
    return Subset(ctx.space, frozenset({zero}) & ctx.R.members)


def _prime_zero_rows(ctx: RingContext, up: frozenset[int]):
    zero = ctx.zero
    m = ctx.mul.table
    R = sorted(ctx.R.members)
    return [_w(ctx.space, x, y, m[x][y]) for x, y in product(R, repeat=2)
            if m[x][y] in up and x != zero and y != zero]


def is_approx_prime_ring(ctx: RingContext) -> CheckReport:
    """(0) is an approximate prime ideal.

    Membership a.b in the upper approximation of (0) is read as membership
    in the upper approximation of {0}, which stays meaningful when the zero
    element lies outside R.  The literal reading (upper approximation of
    {0} intersected with R) is reported in ``info``.
    """
    zero = ctx.require_zero()
    space = ctx.space
    ring = is_approx_ring(ctx)
    rows = ring.prefixed("ring:")
    notes = list(ring.notes)
    rows.append(AxiomResult.of("non-zero-ring", [] if ctx.R.members - {zero} else [_w(space, zero)]))
    Z = zero_ideal(ctx)
    if Z.members:
        rows += is_approx_ideal(Z, ctx).prefixed("zero-ideal:")
    else:
        notes.append("zero lies outside R: (0) has an empty carrier")
    rows.append(AxiomResult.of("prime", _prime_zero_rows(ctx, space.upper_idx({zero}))))
    literal = not _prime_zero_rows(ctx, space.upper_idx(Z.members))
    try:
        criterion = elementwise_prime_criterion(ctx).verdict
    except DegenerateInputError:
        criterion = None
    info = {"zero": space.labels[zero], "literal_reading": literal, "elementwise_criterion": criterion}
    return CheckReport("prime-ring", rows, notes, info)


def elementwise_prime_criterion(ctx: RingContext) -> CheckReport:
    """For all a, b in R: a.r.b = 0 for every non-zero r in R implies a = 0 or b = 0.

    Products associate to the left: (a.r).b.
    """
    zero = ctx.require_zero()
    nonzero = sorted(ctx.R.members - {zero})
    if not nonzero:
        raise DegenerateInputError("R has no non-zero element")
    m = ctx.mul.table
    R = sorted(ctx.R.members)
    bad = [_w(ctx.space, x, y) for x, y in product(R, repeat=2)
           if x != zero and y != zero and all(m[m[x][r]][y] == zero for r in nonzero)]
    return CheckReport("prime-criterion", [AxiomResult.of("annihilation", bad)])
