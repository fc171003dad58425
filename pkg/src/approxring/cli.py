"""Command-line front end.

    approxring approx SUBSET
    approxring check KIND TARGET [--in CONTEXT] [--op NAME] [--strict]
    approxring verify T1 [T2 ...|all] [--bundle key=value ...]
    approxring search T5 --max-carrier 3 --seed 0
    approxring report

Exit status: 0 verdict true / confirmed, 1 verdict false / counterexample,
2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .errors import ApproxError, PreconditionError
from .fixtures import BUILTINS, Fixture, load_fixture
from .ideals import (
    is_approx_ideal,
    is_approx_integral_domain,
    is_approx_prime_ideal,
    is_approx_prime_ring,
    is_mult_closed,
    is_principal_prime,
)
from .reports import CheckReport
from .search import FAMILIES, Budget, search_counterexamples
from .structures import (
    RingContext,
    is_approx_field,
    is_approx_group,
    is_approx_groupoid,
    is_approx_irreducible,
    is_approx_ring,
    is_approx_semigroup,
    is_approx_subring,
)
from .theorems import THEOREM_IDS, Bundle, TheoremReport, default_bundles, verify_theorem

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2
DEFAULT_FIXTURE = "builtin:image16"

# kind -> (what TARGET names, whether --in is required)
CHECK_KINDS = {
    "groupoid": ("subset", False),
    "semigroup": ("subset", False),
    "group": ("subset", False),
    "ring": ("context", False),
    "subring": ("subset", True),
    "ideal": ("subset", True),
    "prime-ideal": ("subset", True),
    "field": ("context", False),
    "integral-domain": ("context", False),
    "prime-ring": ("context", False),
    "mult-closed": ("subset", True),
    "irreducible": ("element", True),
    "principal-prime": ("element", True),
}
BUNDLE_KEYS = ("ctx", "I", "A", "B", "C", "p", "left", "right")


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixture", default=DEFAULT_FIXTURE,
                   help="fixture path, JSON text or builtin:NAME (default %(default)s)")
    p.add_argument("--output", choices=("text", "structured"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="approxring", description="Approximate rings over descriptive proximity spaces.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("approx", help="print the upper approximation of a subset")
    p.add_argument("subset")
    _common(p)

    p = sub.add_parser("check", help="run one structure checker")
    p.add_argument("kind", choices=list(CHECK_KINDS))
    p.add_argument("target", help="subset, context or element label, depending on KIND")
    p.add_argument("--in", dest="context", help="ring context the target lives in")
    p.add_argument("--op", help="operation for groupoid/semigroup/group (default: the context's addition, else 'add')")
    p.add_argument("--strict", action="store_true", help="prime-ideal: also require P != R")
    _common(p)

    p = sub.add_parser("verify", help="verify theorems on a bundle")
    p.add_argument("theorems", nargs="+", help=f"theorem ids ({', '.join(THEOREM_IDS)}) or 'all'")
    p.add_argument("--bundle", action="append", default=[], metavar="KEY=NAME",
                   help=f"bundle part; keys {', '.join(BUNDLE_KEYS)}")
    _common(p)

    p = sub.add_parser("search", help="bounded counterexample search")
    p.add_argument("theorem")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-carrier", type=int, default=3)
    p.add_argument("--max-classes", type=int, default=2, help="max feature classes")
    p.add_argument("--max-candidates", type=int, default=1000, help="per op family")
    p.add_argument("--families", default=",".join(FAMILIES), help="comma-separated op families")
    p.add_argument("--subsets", choices=("all", "full"), default="all")
    p.add_argument("--workers", type=int, default=1)
    _common(p)

    p = sub.add_parser("report", help="approximations, ring checks and theorem table for a fixture")
    _common(p)
    return parser


# -- resolution -------------------------------------------------------------------

def _fixture_name(source: str) -> str | None:
    if source.startswith("builtin:") and source.split(":", 1)[1] in BUILTINS:
        return source.split(":", 1)[1]
    return None


def _context(fx: Fixture, name: str | None) -> RingContext:
    if name is None:
        raise UsageError("this check needs --in CONTEXT")
    return fx.context(name)


def _ctx_for(fx: Fixture, target: str, context: str | None) -> RingContext:
    """A named context, or a subset viewed with the operations of ``--in``."""
    if target in fx.contexts:
        return fx.contexts[target]
    if target in fx.subsets:
        host = _context(fx, context)
        return host.restrict(fx.subset(target), target)
    raise UsageError(f"{target!r} is neither a context nor a subset")


def _run_check(args, fx: Fixture) -> CheckReport:
    kind, target = args.kind, args.target
    if kind in ("groupoid", "semigroup", "group"):
        S = fx.subset(target)
        if args.op is not None:
            op = fx.ops.get(args.op)
            if op is None:
                raise UsageError(f"unknown operation {args.op!r}; known: {sorted(fx.ops)}")
        elif args.context is not None:
            op = fx.context(args.context).add
        elif "add" in fx.ops:
            op = fx.ops["add"]
        else:
            raise UsageError("give --op or --in")
        f: Callable = {"groupoid": is_approx_groupoid, "semigroup": is_approx_semigroup, "group": is_approx_group}[kind]
        return f(S, op)
    if kind in ("ring", "integral-domain", "prime-ring"):
        ctx = _ctx_for(fx, target, args.context)
        return {"ring": is_approx_ring, "integral-domain": is_approx_integral_domain,
                "prime-ring": is_approx_prime_ring}[kind](ctx)
    if kind == "field":
        if target in fx.contexts and args.context is None:
            return is_approx_field(fx.contexts[target])
        return is_approx_field(_context(fx, args.context), fx.subset(target))
    ctx = _context(fx, args.context)
    if kind == "subring":
        return is_approx_subring(fx.subset(target), ctx)
    if kind == "ideal":
        return is_approx_ideal(fx.subset(target), ctx)
    if kind == "prime-ideal":
        return is_approx_prime_ideal(fx.subset(target), ctx, strict=args.strict)
    if kind == "mult-closed":
        return is_mult_closed(fx.subset(target), ctx)
    if kind == "irreducible":
        return is_approx_irreducible(target, ctx)
    return is_principal_prime(target, ctx)


def parse_bundle(fx: Fixture, items: list[str]) -> Bundle:
    b = Bundle()
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in BUNDLE_KEYS:
            raise UsageError(f"bad --bundle {item!r}; expected KEY=NAME with KEY in {BUNDLE_KEYS}")
        if key in ("ctx", "left", "right"):
            setattr(b, key, fx.context(value))
        elif key == "p":
            b.p = fx.space.index_of(value)
        else:
            setattr(b, key, fx.subset(value))
    return b


def _theorem_ids(names: list[str]) -> list[str]:
    if names == ["all"]:
        return list(THEOREM_IDS)
    unknown = [n for n in names if n not in THEOREM_IDS]
    if unknown:
        raise UsageError(f"unknown theorem ids {unknown}; known: {list(THEOREM_IDS)}")
    return names


def _bundles(args, fx: Fixture, ids: list[str]) -> dict[str, Bundle]:
    if args.bundle:
        b = parse_bundle(fx, args.bundle)
        return {t: b for t in ids}
    name = _fixture_name(args.fixture)
    if name is None:
        raise UsageError("non-builtin fixtures need --bundle KEY=NAME parts")
    defaults = default_bundles(name)
    return {t: defaults[t] for t in ids}


# -- output -----------------------------------------------------------------------

def _emit(doc: dict, text: str, mode: str, out) -> None:
    if mode == "structured":
        out.write(json.dumps(doc, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")
    out.flush()


def _fmt(labels) -> str:
    return "{" + ", ".join(labels) + "}"


def cmd_approx(args, fx: Fixture, out) -> int:
    if args.subset in fx.subsets:
        S = fx.subsets[args.subset]
    elif args.subset in fx.contexts:
        S = fx.contexts[args.subset].R
    else:
        raise UsageError(f"unknown subset {args.subset!r}; known: {sorted(fx.subsets)}")
    up = S.upper()
    doc = {"subset": args.subset, "members": list(S.labels), "upper": list(up.labels)}
    _emit(doc, f"Φ*({args.subset}) = {_fmt(up.labels)}", args.output, out)
    return EXIT_TRUE


def cmd_check(args, fx: Fixture, out) -> int:
    rep = _run_check(args, fx)
    doc = {"target": args.target, "context": args.context, **rep.to_dict()}
    _emit(doc, rep.to_text(), args.output, out)
    return EXIT_TRUE if rep.verdict else EXIT_FALSE


def _theorem_exit(reports: list[TheoremReport]) -> int:
    return EXIT_FALSE if any(r.classification == "counterexample" for r in reports) else EXIT_TRUE


def cmd_verify(args, fx: Fixture, out) -> int:
    ids = _theorem_ids(args.theorems)
    bundles = _bundles(args, fx, ids)
    reports = [verify_theorem(t, bundles[t]) for t in ids]
    doc = {"reports": [r.to_dict() for r in reports]}
    _emit(doc, "\n".join(r.to_text() for r in reports), args.output, out)
    return _theorem_exit(reports)


def cmd_search(args, fx: Fixture, out) -> int:
    if args.theorem not in THEOREM_IDS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; known: {list(THEOREM_IDS)}")
    try:
        budget = Budget(args.max_carrier, args.max_classes, tuple(f for f in args.families.split(",") if f),
                        args.max_candidates, args.seed, args.subsets)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    def on_finding(rep: TheoremReport) -> None:
        if args.output == "structured":
            out.write(json.dumps({"finding": rep.to_dict()}, ensure_ascii=False) + "\n")
        else:
            key = rep.details.get("structure", {}).get("key")
            out.write(f"counterexample {rep.id} structure={key} witnesses={[list(w) for w in rep.witnesses[:3]]}\n")
        out.flush()

    res = search_counterexamples(args.theorem, budget, workers=args.workers, on_finding=on_finding)
    summary = {"theorem": res.theorem, "structures": res.structures, "bundles": res.bundles,
               "findings": len(res.findings), "truncated": res.truncated}
    text = (f"{res.theorem}: {len(res.findings)} counterexamples over {res.structures} structures "
            f"/ {res.bundles} bundles{' (truncated)' if res.truncated else ''}")
    _emit({"summary": summary}, text, args.output, out)
    return EXIT_FALSE if res.findings else EXIT_TRUE


def cmd_report(args, fx: Fixture, out) -> int:
    approx = {k: list(s.upper().labels) for k, s in fx.subsets.items()}
    rings = {}
    for name, ctx in fx.contexts.items():
        try:
            rings[name] = is_approx_ring(ctx).to_dict()
        except ApproxError as exc:
            rings[name] = {"error": f"{type(exc).__name__}: {exc}"}
    name = _fixture_name(args.fixture)
    theorems = [verify_theorem(t, b).to_dict(include_bundle=False) for t, b in default_bundles(name).items()] if name else []
    doc = {"fixture": args.fixture, "approximations": approx, "rings": rings, "theorems": theorems}
    lines = [f"fixture {args.fixture}"]
    lines += [f"  Φ*({k}) = {_fmt(v)}" for k, v in approx.items()]
    for k, r in rings.items():
        lines.append(f"  ring {k}: {r.get('error') or ('PASS' if r['verdict'] else 'FAIL')}")
    for t in theorems:
        lines.append(f"  {t['id']:<5} {t['classification']}")
    _emit(doc, "\n".join(lines), args.output, out)
    return EXIT_TRUE


COMMANDS = {"approx": cmd_approx, "check": cmd_check, "verify": cmd_verify, "search": cmd_search, "report": cmd_report}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    try:
        fx = load_fixture(args.fixture)
        return COMMANDS[args.verb](args, fx, out)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"error: {exc}\n")
    except PreconditionError as exc:
        err.write(f"precondition failed: {exc}\n")
        if exc.report is not None:
            _emit({"error": str(exc), "report": exc.report.to_dict()}, exc.report.to_text(), args.output, err)
    except (ApproxError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {type(exc).__name__}: {msg}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
