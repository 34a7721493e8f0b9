#!/usr/bin/env python3
"""Recompute the worked examples and print a PASS/FAIL table (or JSON with --json)."""

import sys

from orbitkit.conjectures import examples_report, reproduce_paper_examples


def main(argv) -> int:
    results = reproduce_paper_examples()
    if "--json" in argv:
        print(examples_report(results))
    else:
        width = max(len(r.example_id) for r in results)
        for r in results:
            flag = "PASS" if r.passed else "FAIL"
            print(f"{flag}  {r.example_id:<{width}}  expected {r.expected:<18} got {r.computed}")
        print(f"{sum(r.passed for r in results)}/{len(results)} examples reproduced")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
