"""Counterexample search over every theorem; findings are written as JSON
lines (one file per theorem) and replayed before being kept."""

import argparse
import json
import time
from pathlib import Path

from approxring.search import FAMILIES, Budget, search_counterexamples
from approxring.theorems import THEOREM_IDS, replay, same_outcome


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--theorems", default=",".join(THEOREM_IDS))
    ap.add_argument("--max-carrier", type=int, default=3)
    ap.add_argument("--max-classes", type=int, default=2)
    ap.add_argument("--max-candidates", type=int, default=1000)
    ap.add_argument("--families", default=",".join(FAMILIES))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--injective", action="store_true", help="discrete probes only")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("search_out"))
    args = ap.parse_args()

    budget = Budget(args.max_carrier, args.max_classes, tuple(args.families.split(",")),
                    args.max_candidates, args.seed, injective=args.injective)
    args.out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for tid in args.theorems.split(","):
        t = time.perf_counter()
        res = search_counterexamples(tid, budget, workers=args.workers)
        bad = [f for f in res.findings if not same_outcome(f, replay(f))]
        with open(args.out / f"{tid}.jsonl", "w") as fh:
            for f in res.findings:
                fh.write(json.dumps(f.to_dict()) + "\n")
        summary[tid] = {"structures": res.structures, "bundles": res.bundles, "findings": len(res.findings),
                        "replay_failures": len(bad), "truncated": res.truncated,
                        "seconds": round(time.perf_counter() - t, 2)}
        print(tid, summary[tid], flush=True)
    (args.out / "summary.json").write_text(json.dumps({"budget": budget.__dict__, "theorems": summary}, indent=2))


if __name__ == "__main__":
    main()
