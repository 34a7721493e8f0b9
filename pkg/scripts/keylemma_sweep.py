#!/usr/bin/env python3
"""Sweep the induction identity for dbv and write a JSON report.

    python3 scripts/keylemma_sweep.py --max-size 16 --max-b 6 --max-d 3 --jobs 4 --out sweep.json
"""

import argparse
import json
import sys
import time

from orbitkit.duality import key_lemma_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=14)
    ap.add_argument("--max-b", type=int, default=5)
    ap.add_argument("--max-d", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="write the JSON report here")
    args = ap.parse_args()

    start = time.perf_counter()
    summary = key_lemma_sweep(args.max_size, args.max_b, args.max_d, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    report = dict(summary.to_json(), exceptional_cases=summary.exceptional_cases,
                  bounds={"max_size": args.max_size, "max_b": args.max_b, "max_d": args.max_d},
                  seconds=round(elapsed, 3))
    print(f"{summary} ({summary.exceptional_cases} exceptional) in {elapsed:.2f}s")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
