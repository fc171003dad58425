"""Executable registry of the fourteen results on approximate prime ideals.

Each entry evaluates a hypothesis and a conclusion on a :class:`Bundle`
using the checker modules and classifies the outcome:

* ``confirmed``       hypothesis and conclusion both hold
* ``vacuous``         hypothesis fails
* ``counterexample``  hypothesis holds, conclusion fails
* ``not-applicable``  the bundle lacks parts, a checker cannot decide
                      (e.g. ambiguous identities) or a quotient is not well defined

Theorems are never asserted; a counterexample is a finding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .constructions import ProductContext, direct_product, quotient
from .errors import (
    ApproxError,
    BudgetError,
    DegenerateInputError,
    MissingZeroError,
    PreconditionError,
)
from .fixtures import context_document, load_fixture
from .ideals import (
    elementwise_prime_criterion,
    ideal_product,
    is_approx_ideal,
    is_approx_integral_domain,
    is_approx_prime_ideal,
    is_approx_prime_ring,
    is_mult_closed,
    is_principal_prime,
    principal_ideal,
    product_sums,
    upper_is_groupoid,
)
from .proximity import Subset, all_subsets
from .structures import (
    RingContext,
    is_approx_field,
    is_approx_irreducible,
    is_approx_ring,
    is_commutative,
    units,
)

CLASSIFICATIONS = ("confirmed", "vacuous", "counterexample", "not-applicable")
# all-ideals enumeration for T5/T6 walks 2^|R| subsets
MAX_IDEAL_ENUM = 12


@dataclass
class Bundle:
    """Inputs for one theorem check.  ``I``/``A``/``B``/``C`` are subsets of ``ctx``'s space."""

    ctx: RingContext | None = None
    I: Subset | None = None
    A: Subset | None = None
    B: Subset | None = None
    C: Subset | None = None
    p: int | None = None
    left: RingContext | None = None
    right: RingContext | None = None

    def to_document(self) -> dict:
        doc: dict = {}
        if self.ctx is not None:
            extra = {k: getattr(self, k) for k in "IABC" if getattr(self, k) is not None}
            doc["ctx"] = context_document(self.ctx, extra)
            if self.p is not None:
                doc["p"] = self.ctx.space.labels[self.p]
        for side in ("left", "right"):
            c = getattr(self, side)
            if c is not None:
                doc[side] = context_document(c)
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> Bundle:
        b = cls()
        if "ctx" in doc:
            fx = load_fixture(doc["ctx"])
            b.ctx = fx.context("R")
            for k in "IABC":
                if k in fx.subsets:
                    setattr(b, k, fx.subsets[k])
            if "p" in doc:
                b.p = fx.space.index_of(doc["p"])
        for side in ("left", "right"):
            if side in doc:
                setattr(b, side, load_fixture(doc[side]).context("R"))
        return b


@dataclass
class TheoremReport:
    id: str
    statement: str
    hypothesis_holds: bool | None
    conclusion_holds: bool | None
    classification: str
    witnesses: list[tuple[str, ...]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    bundle: dict | None = None

    def to_dict(self, include_bundle: bool = True) -> dict:
        d = {
            "id": self.id,
            "statement": self.statement,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "classification": self.classification,
            "witnesses": [list(w) for w in self.witnesses],
            "notes": list(self.notes),
            "details": self.details,
        }
        if include_bundle:
            d["bundle"] = self.bundle
        return d

    @classmethod
    def from_dict(cls, d: dict) -> TheoremReport:
        return cls(
            d["id"], d["statement"], d["hypothesis_holds"], d["conclusion_holds"], d["classification"],
            [tuple(w) for w in d["witnesses"]], list(d["notes"]), dict(d["details"]), d.get("bundle"),
        )

    def to_text(self, max_witnesses: int = 10) -> str:
        hyp = {True: "holds", False: "fails", None: "n/a"}[self.hypothesis_holds]
        con = {True: "holds", False: "fails", None: "n/a"}[self.conclusion_holds]
        lines = [f"{self.id} [{self.classification}] {self.statement}",
                 f"  hypothesis {hyp}; conclusion {con}"]
        for w in self.witnesses[:max_witnesses]:
            lines.append("  witness (" + ", ".join(w) + ")")
        if len(self.witnesses) > max_witnesses:
            lines.append(f"  ... {len(self.witnesses) - max_witnesses} more")
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


class _Stop(Exception):
    def __init__(self, classification: str, note: str):
        super().__init__(note)
        self.classification = classification
        self.note = note


class _Run:
    """Scratch state for one evaluation: sub-reports and helpers."""

    def __init__(self, bundle: Bundle):
        self.b = bundle
        self.details: dict = {}
        self.notes: list[str] = []

    def need(self, *names: str):
        missing = [n for n in names if getattr(self.b, n) is None]
        if missing:
            raise _Stop("not-applicable", f"bundle lacks {', '.join(missing)}")
        return [getattr(self.b, n) for n in names]

    def hyp(self, cond: bool, note: str) -> None:
        if not cond:
            raise _Stop("vacuous", note)

    def ring(self, ctx: RingContext, key: str = "ring") -> None:
        rep = is_approx_ring(ctx)
        self.details[key] = rep.to_dict()
        self.hyp(rep.verdict, f"{key} is not an approximate ring (fails {rep.failed()})")

    def ideal(self, ctx, S, key) -> bool:
        rep = is_approx_ideal(S, ctx)
        self.details[key] = rep.to_dict()
        return rep.verdict

    def prime(self, ctx, S, key) -> bool:
        if not self.ideal(ctx, S, f"{key}:ideal"):
            return False
        # prime ideals are proper, as classically
        rep = is_approx_prime_ideal(S, ctx, strict=True)
        self.details[key] = rep.to_dict()
        return rep.verdict

    def domain(self, ctx, key) -> tuple[bool, list]:
        try:
            rep = is_approx_integral_domain(ctx)
        except (PreconditionError, MissingZeroError) as exc:
            self.details[key] = {"error": str(exc)}
            return False, []
        self.details[key] = rep.to_dict()
        return rep.verdict, rep.witnesses()

    def prime_ring(self, ctx, key) -> tuple[bool, list]:
        try:
            rep = is_approx_prime_ring(ctx)
        except MissingZeroError as exc:
            self.details[key] = {"error": str(exc)}
            return False, []
        self.details[key] = rep.to_dict()
        return rep.verdict, rep.witnesses()

    def quotient(self, ctx, I, key="quotient"):
        q = quotient(ctx, I, name="I")
        self.details[key] = q.to_dict()
        if not q.well_defined:
            raise _Stop("not-applicable", "quotient operations depend on the representatives")
        return q

    def side_quotient(self, ctx, I, check: Callable) -> None:
        """Informational: the same conclusion under coset-set equality."""
        q = quotient(ctx, I, rho="set", name="I")
        entry = {"well_defined": q.well_defined}
        if q.well_defined:
            entry["conclusion"] = check(q.ring)
        self.details["set_rho"] = entry

    def product(self) -> ProductContext:
        left, right = self.need("left", "right")
        self.ring(left, "left")
        self.ring(right, "right")
        return direct_product(left, right)


def _nonzero(ctx: RingContext) -> frozenset[int]:
    return ctx.R.members - {ctx.require_zero()}


def _all_ideals_prime(run: _Run, ctx: RingContext) -> bool:
    n = len(ctx.R.members)
    if n > MAX_IDEAL_ENUM:
        raise BudgetError(f"|R| = {n} exceeds the ideal-enumeration limit {MAX_IDEAL_ENUM}")
    ideals, bad = 0, []
    for S in all_subsets(ctx.R.members):
        if S == ctx.R.members:
            continue
        sub = Subset(ctx.space, S)
        if not is_approx_ideal(sub, ctx).verdict:
            continue
        ideals += 1
        if not is_approx_prime_ideal(sub, ctx).verdict:
            bad.append(list(sub.labels))
    run.details["proper_ideals"] = {"count": ideals, "non_prime": bad}
    return not bad


# -- the registry ---------------------------------------------------------------

def _t1(run: _Run):
    ctx, I = run.need("ctx", "I")
    run.ring(ctx)
    run.hyp(run.prime(ctx, I, "I"), "I is not an approximate prime ideal")
    q = run.quotient(ctx, I)
    run.side_quotient(ctx, I, lambda r: run.domain(r, "set_rho:domain")[0])
    return run.domain(q.ring, "quotient:domain")


def _t2(run: _Run):
    ctx, I = run.need("ctx", "I")
    run.ring(ctx)
    run.hyp(run.prime(ctx, I, "I"), "I is not an approximate prime ideal")
    S = Subset(ctx.space, ctx.R.members - ctx.space.upper_idx(I.members))
    run.hyp(bool(S.members), "R minus the upper approximation of I is empty")
    rep = is_mult_closed(S, ctx)
    run.details["S"] = {"members": list(S.labels), "report": rep.to_dict()}
    return rep.verdict, rep.witnesses()


def _principal_hyp(run: _Run, ctx: RingContext, p: int):
    run.hyp(p in ctx.R.members, "p is not in R")
    run.hyp(is_commutative(ctx), "R is not commutative")
    add_ok, mul_ok = upper_is_groupoid(ctx)
    run.hyp(add_ok and mul_ok, "upper approximation of R is not a groupoid under both operations")
    run.hyp(p not in units(ctx), "p is an approximate unit")


def _t3(run: _Run):
    ctx, p = run.need("ctx", "p")
    run.ring(ctx)
    _principal_hyp(run, ctx, p)
    P = principal_ideal(p, ctx)
    run.details["principal_ideal"] = list(P.labels)
    run.hyp(bool(P.members) and not P.members <= {ctx.zero}, "(p) is empty or zero")
    rep = is_approx_ideal(P, ctx)
    run.details["ideal"] = rep.to_dict()
    return rep.verdict, rep.witnesses()


def _t4(run: _Run):
    ctx, p = run.need("ctx", "p")
    run.ring(ctx)
    dom, _ = run.domain(ctx, "domain")
    run.hyp(dom, "R is not an approximate integral domain")
    run.hyp(ctx.one is not None, "R has no unity")
    _principal_hyp(run, ctx, p)
    pp = is_principal_prime(p, ctx)
    run.details["principal_prime"] = pp.to_dict()
    run.hyp(pp.verdict, "p is not an approximate principal prime")
    rep = is_approx_irreducible(p, ctx)
    run.details["irreducible"] = rep.to_dict()
    return rep.verdict, rep.witnesses()


def _t5(run: _Run):
    (ctx,) = run.need("ctx")
    run.ring(ctx)
    run.hyp(is_commutative(ctx), "R is not commutative")
    run.hyp(bool(_nonzero(ctx)), "R has no non-zero element")
    run.hyp(_all_ideals_prime(run, ctx), "some proper approximate ideal is not prime")
    return run.domain(ctx, "domain")


def _t6(run: _Run):
    (ctx,) = run.need("ctx")
    run.ring(ctx)
    dom, _ = run.domain(ctx, "domain")
    run.hyp(dom, "R is not an approximate integral domain")
    run.hyp(ctx.one is not None, "R has no unity")
    run.hyp(_all_ideals_prime(run, ctx), "some proper approximate ideal is not prime")
    rep = is_approx_field(ctx)
    run.details["field"] = rep.to_dict()
    return rep.verdict, rep.witnesses()


def _t7(run: _Run):
    ctx, A, B = run.need("ctx", "A", "B")
    run.ring(ctx)
    run.hyp(is_commutative(ctx), "R is not commutative")
    run.hyp(ctx.one is not None, "R has no unity")
    run.hyp(run.ideal(ctx, A, "A") and run.ideal(ctx, B, "B"), "A or B is not an approximate ideal")
    AB = ideal_product(A, B, ctx)
    run.details["AB"] = list(AB.labels)
    # sums formed along the way that leave R
    run.details["AB_escapes"] = [ctx.space.labels[x] for x in sorted(product_sums(A, B, ctx) - ctx.R.members)]
    if not AB.members:
        run.notes.append("AB is empty")
        return False, []
    rep = is_approx_ideal(AB, ctx)
    run.details["AB:ideal"] = rep.to_dict()
    return rep.verdict, rep.witnesses()


def _t8(run: _Run):
    ctx, A, B, C = run.need("ctx", "A", "B", "C")
    run.ring(ctx)
    run.hyp(run.prime(ctx, A, "A"), "A is not an approximate prime ideal")
    run.hyp(run.ideal(ctx, B, "B") and run.ideal(ctx, C, "C"), "B or C is not an approximate ideal")
    BC = ideal_product(B, C, ctx)
    run.details["BC"] = list(BC.labels)
    run.hyp(BC.members == A.members, "A differs from BC")
    ok = B.members <= A.members or C.members <= A.members
    lab = ctx.space.labels
    wit = [] if ok else [tuple(lab[x] for x in sorted(B.members - A.members)),
                         tuple(lab[x] for x in sorted(C.members - A.members))]
    return ok, wit


def _t9(run: _Run):
    (ctx,) = run.need("ctx")
    run.ring(ctx)
    if not _nonzero(ctx):
        raise _Stop("not-applicable", "R has no non-zero element")
    prime, pw = run.prime_ring(ctx, "prime_ring")
    crit = elementwise_prime_criterion(ctx)
    run.details["criterion"] = crit.to_dict()
    agree = prime == crit.verdict
    return agree, [] if agree else (pw or crit.witnesses())


def _t10a(run: _Run):
    ctx, I = run.need("ctx", "I")
    run.ring(ctx)
    run.hyp(run.ideal(ctx, I, "I:ideal"), "I is not an approximate ideal")
    q = run.quotient(ctx, I)
    pr, _ = run.prime_ring(q.ring, "quotient:prime_ring")
    run.hyp(pr, "R/I is not an approximate prime ring")
    rep = is_approx_prime_ideal(I, ctx, strict=True)
    run.details["I"] = rep.to_dict()
    return rep.verdict, rep.witnesses()


def _t10b(run: _Run):
    ctx, I = run.need("ctx", "I")
    run.ring(ctx)
    run.hyp(run.prime(ctx, I, "I"), "I is not an approximate prime ideal")
    q = run.quotient(ctx, I)
    run.side_quotient(ctx, I, lambda r: run.prime_ring(r, "set_rho:prime_ring")[0])
    return run.prime_ring(q.ring, "quotient:prime_ring")


def _t11(run: _Run):
    left, right = run.need("left", "right")
    run.ring(left, "left")
    run.ring(right, "right")
    for side, c in (("left", left), ("right", right)):
        add_ok, mul_ok = upper_is_groupoid(c)
        run.hyp(add_ok and mul_ok, f"upper approximation of {side} is not a groupoid")
    P = direct_product(left, right)
    run.details["upper_law"] = P.upper_law
    run.hyp(P.upper_law, "upper approximation of the product is not the product of upper approximations")
    rep = is_approx_ring(P)
    run.details["product"] = rep.to_dict()
    return rep.verdict, rep.witnesses()


def _nonzero_factors(run: _Run) -> ProductContext:
    P = run.product()
    for side in ("left", "right"):
        run.hyp(bool(_nonzero(getattr(P, side))), f"{side} factor has no non-zero element")
    return P


def _t12(run: _Run):
    P = _nonzero_factors(run)
    prime, pw = run.prime_ring(P, "product:prime_ring")
    wit = []
    try:
        crit = elementwise_prime_criterion(P)
        run.details["criterion"] = crit.to_dict()
        wit = crit.witnesses()
    except DegenerateInputError:
        run.notes.append("product has no non-zero element")
    return not prime, wit + pw


def _t13(run: _Run):
    P = _nonzero_factors(run)
    dom, wit = run.domain(P, "product:domain")
    if not dom and not wit:
        wit = [("non-commutative or no zero",)]
    return not dom, wit


def _t14(run: _Run):
    P = run.product()
    zero = P.require_zero()
    _, z2 = P.split(zero)
    if z2 not in P.right.R.members:
        raise _Stop("not-applicable", "the zero of the right factor lies outside R2")
    Pset = Subset(P.space, frozenset(P.pair(a, z2) for a in P.left.R.members))
    run.details["P"] = list(Pset.labels)
    run.hyp(run.prime(P, Pset, "P"), "R1 x {0} is not an approximate prime ideal")
    return run.domain(P.right, "right:domain")


@dataclass(frozen=True)
class TheoremEntry:
    id: str
    statement: str
    needs: tuple[str, ...]
    fn: Callable = field(repr=False)


REGISTRY: dict[str, TheoremEntry] = {
    e.id: e
    for e in [
        TheoremEntry("T1", "I approximately prime => R/I is an approximate integral domain", ("ctx", "I"), _t1),
        TheoremEntry("T2", "I approximately prime => R minus the upper approximation of I is multiplicatively closed", ("ctx", "I"), _t2),
        TheoremEntry("T3", "p a non-unit of a commutative R with closed upper approximation => (p) is an approximate ideal", ("ctx", "p"), _t3),
        TheoremEntry("T4", "p a principal prime in an integral domain with unity => p is irreducible", ("ctx", "p"), _t4),
        TheoremEntry("T5", "every proper ideal of commutative R is prime => R is an integral domain", ("ctx",), _t5),
        TheoremEntry("T6", "integral domain with unity whose proper ideals are all prime => R is a field", ("ctx",), _t6),
        TheoremEntry("T7", "A, B ideals of a commutative R with unity => AB is an ideal", ("ctx", "A", "B"), _t7),
        TheoremEntry("T8", "A prime and A = BC => B within A or C within A", ("ctx", "A", "B", "C"), _t8),
        TheoremEntry("T9", "R is a prime ring <=> aRb = 0 forces a = 0 or b = 0", ("ctx",), _t9),
        TheoremEntry("T10a", "R/I a prime ring => I is a prime ideal", ("ctx", "I"), _t10a),
        TheoremEntry("T10b", "I a prime ideal => R/I is a prime ring", ("ctx", "I"), _t10b),
        TheoremEntry("T11", "closed factors with distributing upper approximation => R1 x R2 is an approximate ring", ("left", "right"), _t11),
        TheoremEntry("T12", "a direct product R1 x R2 is never a prime ring", ("left", "right"), _t12),
        TheoremEntry("T13", "a direct product R1 x R2 is never an integral domain", ("left", "right"), _t13),
        TheoremEntry("T14", "R1 x {0} prime in R1 x R2 => R2 is an integral domain", ("left", "right"), _t14),
    ]
}
THEOREM_IDS = tuple(REGISTRY)


def verify_theorem(theorem_id: str, bundle: Bundle, keep_bundle: bool = True) -> TheoremReport:
    try:
        entry = REGISTRY[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {list(REGISTRY)}") from None
    run = _Run(bundle)
    hyp: bool | None
    con: bool | None
    witnesses: list = []
    try:
        con, witnesses = entry.fn(run)
        hyp = True
        cls = "confirmed" if con else "counterexample"
    except _Stop as stop:
        cls = stop.classification
        hyp = False if cls == "vacuous" else None
        con = None
        run.notes.append(stop.note)
    except BudgetError:
        raise
    except ApproxError as exc:
        hyp, con, cls = None, None, "not-applicable"
        run.notes.append(f"{type(exc).__name__}: {exc}")
    doc = bundle.to_document() if keep_bundle else None
    return TheoremReport(theorem_id, entry.statement, hyp, con, cls,
                         [tuple(w) for w in witnesses], run.notes, run.details, doc)


def replay(report: TheoremReport) -> TheoremReport:
    """Re-run a report from its serialized bundle."""
    if report.bundle is None:
        raise ValueError("report carries no bundle")
    return verify_theorem(report.id, Bundle.from_document(report.bundle))


def same_outcome(a: TheoremReport, b: TheoremReport) -> bool:
    return (a.id, a.classification, a.hypothesis_holds, a.conclusion_holds, a.witnesses) == (
        b.id, b.classification, b.hypothesis_holds, b.conclusion_holds, b.witnesses)


# -- bundles for the builtin fixtures ----------------------------------------------

def default_bundles(fixture_name: str) -> dict[str, Bundle]:
    """The bundle each theorem uses on a builtin fixture."""
    if fixture_name == "image16":
        fx = load_fixture("builtin:image16")
        R1, R2 = fx.context("R1"), fx.context("R2")
        Ip, In = fx.subset("I_prime"), fx.subset("I_notprime")
        x01 = fx.space.index_of("x01")
        return {
            "T1": Bundle(ctx=R1, I=Ip), "T2": Bundle(ctx=R1, I=Ip),
            "T3": Bundle(ctx=R2, p=x01), "T4": Bundle(ctx=R2, p=x01),
            "T5": Bundle(ctx=R1), "T6": Bundle(ctx=R1),
            "T7": Bundle(ctx=R2, A=In, B=In), "T8": Bundle(ctx=R2, A=In, B=In, C=In),
            "T9": Bundle(ctx=R1), "T10a": Bundle(ctx=R1, I=Ip), "T10b": Bundle(ctx=R1, I=Ip),
            "T11": Bundle(left=R1, right=R1), "T12": Bundle(left=R1, right=R1),
            "T13": Bundle(left=R1, right=R1), "T14": Bundle(left=R1, right=R1),
        }
    if fixture_name == "f2":
        fx = load_fixture("builtin:f2")
        F = fx.context("F2")
        Z = fx.subset("Zero")
        return {
            "T1": Bundle(ctx=F, I=Z), "T2": Bundle(ctx=F, I=Z),
            "T3": Bundle(ctx=F, p=fx.space.index_of("0")), "T4": Bundle(ctx=F, p=fx.space.index_of("0")),
            "T5": Bundle(ctx=F), "T6": Bundle(ctx=F),
            "T7": Bundle(ctx=F, A=Z, B=Z), "T8": Bundle(ctx=F, A=Z, B=Z, C=Z),
            "T9": Bundle(ctx=F), "T10a": Bundle(ctx=F, I=Z), "T10b": Bundle(ctx=F, I=Z),
            "T11": Bundle(left=F, right=F), "T12": Bundle(left=F, right=F),
            "T13": Bundle(left=F, right=F), "T14": Bundle(left=F, right=F),
        }
    raise KeyError(f"no default bundles for fixture {fixture_name!r}")
