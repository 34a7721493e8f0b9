"""Command-line front end: ``orbitkit VERB [flags] ARGS``.

Exit status is 0 on success, 1 when a bound check fails or a sweep finds a
counterexample, and 2 on usage or input errors.  Sweep bounds can be
preset in a key=value file named by ``ORBITKIT_CONFIG``::

    keylemma = max_size=12, max_b=4, jobs=4
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from typing import Optional, Sequence

from .conjectures import (
    bound_from_arthur,
    bound_from_dual_lparam,
    check_bound,
    dbv_by_oracle,
    examples_report,
    reproduce_paper_examples,
    sharper_chain_check,
)
from .duality import dbv, dual_type, key_lemma_sweep
from .errors import OrbitError
from .induction import induce_levi, parse_levi
from .params import (
    Context,
    format_parameter,
    hat,
    p_A_of_phi,
    p_of_phi,
    p_of_psi,
    parse_parameter,
    phi_of_psi,
)
from .partition import collapse, collapse_oracle, dominates, format_partition, parse_partition, transpose

CONFIG_ENV = "ORBITKIT_CONFIG"


@dataclass
class SweepConfig:
    max_size: int = 14
    max_b: int = 5
    max_d: int = 3
    jobs: int = 1


class UsageError(Exception):
    pass


def load_config(path: Optional[str] = None) -> dict[str, dict[str, int]]:
    """Read ``verb = key=value, key=value`` lines; '#' starts a comment."""
    path = path if path is not None else os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    out: dict[str, dict[str, int]] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        verb, sep, rest = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected 'verb = key=value, ...'")
        entries = out.setdefault(verb.strip(), {})
        for item in filter(None, (s.strip() for s in rest.split(","))):
            key, sep, value = item.partition("=")
            try:
                entries[key.strip().replace("-", "_")] = int(value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad override {item!r}") from None
            if not sep:
                raise UsageError(f"{path}:{lineno}: bad override {item!r}")
    return out


def sweep_config(args, config: dict[str, dict[str, int]]) -> SweepConfig:
    """Defaults, then the config file, then explicit flags."""
    cfg = SweepConfig()
    known = {f.name for f in fields(SweepConfig)}
    for key, value in config.get("keylemma", {}).items():
        if key not in known:
            raise UsageError(f"unknown keylemma setting {key!r}")
        setattr(cfg, key, value)
    for name in known:
        flag = getattr(args, name, None)
        if flag is not None:
            setattr(cfg, name, flag)
    return cfg


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload, ensure_ascii=False) if args.json else text)


def _partition_arg(text: str):
    return parse_partition(text)


# ----------------------------------------------------------------- verbs

def cmd_collapse(args, config) -> int:
    p = _partition_arg(args.partition)
    out = (collapse_oracle if args.oracle else collapse)(p, args.type)
    _emit(args, format_partition(out), {"input": format_partition(p), "type": args.type,
                                        "collapse": format_partition(out)})
    return 0


def cmd_transpose(args, config) -> int:
    p = _partition_arg(args.partition)
    out = transpose(p)
    _emit(args, format_partition(out), {"input": format_partition(p), "transpose": format_partition(out)})
    return 0


def cmd_dbv(args, config) -> int:
    p = _partition_arg(args.partition)
    out = (dbv_by_oracle if args.oracle else dbv)(p, args.type)
    _emit(args, format_partition(out), {"input": format_partition(p), "type": args.type,
                                        "dual_type": dual_type(args.type).value,
                                        "dbv": format_partition(out)})
    return 0


def cmd_dominates(args, config) -> int:
    p, q = _partition_arg(args.p), _partition_arg(args.q)
    result = dominates(p, q)
    _emit(args, "true" if result else "false",
          {"p": format_partition(p), "q": format_partition(q), "dominates": result})
    return 0


def cmd_induce(args, config) -> int:
    levi, X = parse_levi(args.levi)
    out = induce_levi(levi, X)
    _emit(args, format_partition(out), {"levi": args.levi, "type": X.value, "induced": format_partition(out)})
    return 0


def cmd_keylemma(args, config) -> int:
    cfg = sweep_config(args, config)
    summary = key_lemma_sweep(cfg.max_size, cfg.max_b, cfg.max_d, jobs=cfg.jobs)
    _emit(args, str(summary), summary.to_json())
    return 0 if summary.ok else 1


def cmd_param(args, config) -> int:
    param = parse_parameter(args.parameter)
    report = {"parameter": format_parameter(param), "context": param.context.value,
              "ambient_dim": param.ambient_dim}
    lines = [f"parameter: {format_parameter(param)}"]
    if param.context is Context.L:
        report["p"] = format_partition(p_of_phi(param))
        lines.append(f"p(phi) = {report['p']}")
        if args.d_a is not None:
            report["p_A"] = format_partition(p_A_of_phi(param, args.d_a))
            lines.append(f"p_A(phi) = {report['p_A']}")
    else:
        psi_hat = hat(param)
        report["p"] = format_partition(p_of_psi(param))
        report["hat"] = format_parameter(psi_hat)
        report["phi_psi"] = format_parameter(phi_of_psi(param))
        report["p_phi_hat"] = format_partition(p_of_phi(phi_of_psi(psi_hat)))
        lines += [f"p(psi) = {report['p']}", f"psi hat: {report['hat']}",
                  f"phi_psi: {report['phi_psi']}", f"p(phi of psi hat) = {report['p_phi_hat']}"]
    if args.type is not None:
        report["dbv"] = format_partition(dbv(parse_partition(report["p"]), args.type))
        lines.append(f"dbv = {report['dbv']}")
    _emit(args, "\n".join(lines), report)
    return 0


def cmd_check(args, config) -> int:
    if args.type is None:
        raise UsageError("check needs --type")
    param = parse_parameter(args.parameter)
    if param.context is Context.L:
        bound = bound_from_dual_lparam(param, args.type)
    else:
        bound = bound_from_arthur(param, args.type)
    report = check_bound([parse_partition(c) for c in args.candidates], bound, args.type)
    payload = report.to_json()
    lines = [f"bound {format_partition(bound)}"]
    lines += [f"{format_partition(c)} {v.value}" for c, v in report.candidates]
    ok = report.all_satisfied
    if args.psi is not None:
        if param.context is not Context.L:
            raise UsageError("--psi compares against an L-parameter bound")
        chain = sharper_chain_check(param, parse_parameter(args.psi, Context.ARTHUR), args.type)
        payload["chain"] = chain
        lines.append(f"chain {'holds' if chain else 'fails'}")
        ok = ok and chain
    _emit(args, "\n".join(lines), payload)
    return 0 if ok else 1


def cmd_examples(args, config) -> int:
    results = reproduce_paper_examples()
    if args.json:
        print(examples_report(results))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.example_id}: {r.computed}")
    return 0 if all(r.passed for r in results) else 1


VERBS = {
    "collapse": cmd_collapse,
    "transpose": cmd_transpose,
    "dbv": cmd_dbv,
    "dominates": cmd_dominates,
    "induce": cmd_induce,
    "keylemma": cmd_keylemma,
    "param": cmd_param,
    "check": cmd_check,
    "examples": cmd_examples,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", choices="ABCD", type=str.upper, help="group type")

    parser = argparse.ArgumentParser(prog="orbitkit", description="Partition combinatorics of nilpotent orbits.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("collapse", parents=[common, typed], help="X-collapse of a partition")
    p.add_argument("partition")
    p.add_argument("--oracle", action="store_true", help="use the brute-force collapse")

    p = sub.add_parser("transpose", parents=[common], help="transpose partition")
    p.add_argument("partition")

    p = sub.add_parser("dbv", parents=[common, typed], help="Barbasch-Vogan dual")
    p.add_argument("partition")
    p.add_argument("--oracle", action="store_true", help="use brute-force collapses")

    p = sub.add_parser("dominates", parents=[common], help="whether P dominates Q")
    p.add_argument("p")
    p.add_argument("q")

    p = sub.add_parser("induce", parents=[common], help="induced orbit, e.g. 'GL([2])*G([2,2]):C'")
    p.add_argument("levi")

    p = sub.add_parser("keylemma", parents=[common], help="sweep the induction identity")
    p.add_argument("--max-size", type=int)
    p.add_argument("--max-b", type=int)
    p.add_argument("--max-d", type=int)
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("param", parents=[common, typed], help="partitions attached to a parameter")
    p.add_argument("parameter")
    p.add_argument("--d-a", type=int, help="division-algebra degree for p_A")

    p = sub.add_parser("check", parents=[common, typed], help="check candidates against a bound")
    p.add_argument("parameter", help="L-parameter or Arthur parameter giving the bound")
    p.add_argument("candidates", nargs="*")
    p.add_argument("--psi", help="Arthur parameter for the chain check")

    sub.add_parser("examples", parents=[common], help="recompute the worked examples")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "type", "unset") is None and args.verb in ("collapse", "dbv"):
        print(f"orbitkit {args.verb}: --type is required", file=sys.stderr)
        return 2
    try:
        return VERBS[args.verb](args, load_config())
    except (UsageError, OrbitError, ValueError) as exc:
        print(f"orbitkit {args.verb}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
