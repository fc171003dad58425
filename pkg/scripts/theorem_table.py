"""Classification table of every theorem on the builtin fixtures."""

import argparse

from approxring.theorems import THEOREM_IDS, default_bundles, verify_theorem


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixtures", default="image16,f2")
    args = ap.parse_args()
    names = args.fixtures.split(",")
    reports = {n: {t: verify_theorem(t, b) for t, b in default_bundles(n).items()} for n in names}
    print("| id | " + " | ".join(names) + " | statement |")
    print("|---|" + "---|" * len(names) + "---|")
    for t in THEOREM_IDS:
        cells = [reports[n][t].classification for n in names]
        print(f"| {t} | " + " | ".join(cells) + f" | {reports[names[0]][t].statement} |")


if __name__ == "__main__":
    main()
