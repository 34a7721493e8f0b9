#!/usr/bin/env python3
"""Run every exhaustive and randomized checker, optionally at larger bounds.

    python3 scripts/run_verification.py --scale 2 --out verification.json

``--scale`` adds that many to each size bound (randomized sample counts are
multiplied by it instead).
"""

import argparse
import json
import sys
import time

from orbitkit import verify


def checks(scale: int, seed: int):
    k = scale
    m = max(scale, 1)
    return [
        ("collapse_oracle", lambda: verify.check_collapse_oracle(14 + k)),
        ("collapse_splitting", lambda: verify.check_collapse_splitting(14 + k)),
        ("dbv_cube", lambda: verify.check_dbv_cube(16 + k)),
        ("dbv_order_reversal", lambda: verify.check_dbv_order_reversal(12 + k)),
        ("injectivity", lambda: verify.check_injectivity(12 + k, 3)),
        ("strict_inequality", lambda: verify.check_strict_inequality(12 + k, 4, 2)),
        ("transpose_involution", lambda: verify.check_transpose_involution(16 + k)),
        ("union_transpose", lambda: verify.check_union_transpose(14 + k)),
        ("p_psi_identity", lambda: verify.check_p_psi_identity(10_000 * m, 12, seed)),
        ("gl_speh", lambda: verify.check_gl_speh(4 + k, 4 + k, 4 + k)),
        ("gl_wavefront", lambda: verify.check_gl_wavefront(1000 * m, seed)),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description="run the verification checkers")
    ap.add_argument("--scale", type=int, default=0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args()

    rows, ok = [], True
    for name, fn in checks(args.scale, args.seed):
        start = time.perf_counter()
        res = fn()
        elapsed = time.perf_counter() - start
        ok &= res.ok
        print(f"{'PASS' if res.ok else 'FAIL'}  {res}  ({elapsed:.2f}s)")
        rows.append({"check": name, "cases": res.cases, "failures": res.failure_count,
                     "witnesses": [repr(w) for w in res.failures], "seconds": round(elapsed, 3)})
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
