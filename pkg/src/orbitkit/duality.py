"""Barbasch-Vogan duality on partitions and its compatibility with induction.

For a type-X partition p, ``dbv(p, X)`` is a partition of the dual type X'
with (X, X') in {(A,A), (B,C), (C,B), (D,D)}.  The identity

    dbv(p ⊔ [b^(2d)], X) == collapse([(2d)^b] + dbv(p, X), X')

is checked here exhaustively over small ranges, along with the explicit
case formulas that describe the left-hand side.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import PreconditionViolated, TypeMismatch
from .partition import (
    ClassicalType,
    Partition,
    above,
    as_type,
    collapse,
    dominates,
    equal_to,
    format_partition,
    is_type,
    minus_one,
    plus_one,
    pointwise_sum,
    rectangle,
    strictly_dominates,
    transpose,
    typed_partitions,
    union,
)

A, B, C, D = ClassicalType.A, ClassicalType.B, ClassicalType.C, ClassicalType.D

DUAL_TYPE = {A: A, B: C, C: B, D: D}


@dataclass(frozen=True)
class DualityCase:
    source_type: ClassicalType
    target_type: ClassicalType

    def __post_init__(self):
        if DUAL_TYPE.get(self.source_type) is not self.target_type:
            raise ValueError(f"({self.source_type},{self.target_type}) is not a duality pair")

    @classmethod
    def of(cls, X) -> "DualityCase":
        X = as_type(X)
        return cls(X, DUAL_TYPE[X])


def dual_type(X) -> ClassicalType:
    return DUAL_TYPE[as_type(X)]


def _require_type(p: Partition, X: ClassicalType):
    if not is_type(p, X):
        raise TypeMismatch(f"{format_partition(p)} is not of type {X}")


def dbv(p: Partition, X) -> Partition:
    X = as_type(X)
    _require_type(p, X)
    if X is A:
        return transpose(p)
    if X is B:
        out = transpose(collapse(minus_one(p), C))
    elif X is C:
        out = transpose(collapse(plus_one(p), B))
    else:
        out = collapse(transpose(p), D)
    assert is_type(out, DUAL_TYPE[X]), (p, X, out)
    return out


# ------------------------------------------------------------- key lemma

def _check_lemma_args(p, X, b, d) -> ClassicalType:
    X = as_type(X)
    if X is A:
        raise ValueError("the induction identity is stated for types B, C, D")
    if b < 1 or d < 1:
        raise ValueError("b and d must be positive")
    _require_type(p, X)
    return X


def key_lemma_lhs(p: Partition, X, b: int, d: int) -> Partition:
    X = _check_lemma_args(p, X, b, d)
    return dbv(union(p, rectangle(b, 2 * d)), X)


def key_lemma_rhs(p: Partition, X, b: int, d: int) -> Partition:
    X = _check_lemma_args(p, X, b, d)
    return collapse(pointwise_sum(rectangle(2 * d, b), dbv(p, X)), DUAL_TYPE[X])


@dataclass(frozen=True)
class LhsCaseReport:
    exceptional: bool
    cond_a: bool
    cond_b: bool
    cond_c: bool
    result: Partition


def _adjust(p: Partition, X: ClassicalType) -> Partition:
    """The box shift applied before the inner collapse: p⁻ (B), p⁺ (C), p⁺⁻ (D)."""
    if X is B:
        return minus_one(p)
    if X is C:
        return plus_one(p)
    return minus_one(plus_one(p))


_INNER_TYPE = {B: C, C: B, D: C}


def inner_collapse(p: Partition, X) -> Partition:
    """collapse of the shifted partition; its transpose is dbv(p, X) (for D as well)."""
    X = as_type(X)
    return collapse(_adjust(p, X), _INNER_TYPE[X])


def lhs_direct(p: Partition, X, b: int, d: int) -> Partition:
    """inner_collapse of p ⊔ [b^(2d)], evaluated straight from the definition."""
    X = _check_lemma_args(p, X, b, d)
    return inner_collapse(union(p, rectangle(b, 2 * d)), X)


def lhs_conditions(p: Partition, X, b: int) -> tuple[bool, bool, bool]:
    X = as_type(X)
    upper = above(p, b)
    if X is B:
        a_, b_ = b % 2 == 1, upper.size % 2 == 1
    elif X is C:
        a_, b_ = b % 2 == 0, (upper.length + upper.size) % 2 == 0
    else:
        a_, b_ = b % 2 == 1, upper.size % 2 == 0
    return a_, b_, not equal_to(p, b)


def lhs_case_formula(p: Partition, X, b: int, d: int) -> LhsCaseReport:
    X = _check_lemma_args(p, X, b, d)
    ca, cb, cc = lhs_conditions(p, X, b)
    exceptional = ca and cb and cc
    if exceptional:
        block = Partition((b + 1,) + (b,) * (2 * d - 2) + (b - 1,))
    else:
        block = rectangle(b, 2 * d)
    return LhsCaseReport(exceptional, ca, cb, cc, union(inner_collapse(p, X), block))


def strict_inequality_check(p: Partition, q: Partition, X, b: int, d: int) -> bool:
    """Whether dbv(p ⊔ [b^2d]) < dbv(q ⊔ [b^2d]) given p >= q and dbv(p) < dbv(q)."""
    X = _check_lemma_args(p, X, b, d)
    if not is_type(q, X):
        raise PreconditionViolated(f"{format_partition(q)} is not of type {X}")
    if p.size != q.size or not dominates(p, q):
        raise PreconditionViolated(f"need {format_partition(p)} >= {format_partition(q)}")
    if not strictly_dominates(dbv(q, X), dbv(p, X)):
        raise PreconditionViolated("need dbv(p) strictly below dbv(q)")
    block = rectangle(b, 2 * d)
    return strictly_dominates(dbv(union(q, block), X), dbv(union(p, block), X))


# ----------------------------------------------------------------- sweep

@dataclass
class SweepSummary:
    cases_checked: int = 0
    exceptional_cases: int = 0
    counterexamples: list = field(default_factory=list)

    def merge(self, other: "SweepSummary"):
        self.cases_checked += other.cases_checked
        self.exceptional_cases += other.exceptional_cases
        self.counterexamples.extend(other.counterexamples)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {"cases_checked": self.cases_checked, "counterexamples": list(self.counterexamples)}

    def __str__(self):
        return f"{len(self.counterexamples)} counterexamples / {self.cases_checked} cases"


def _sweep_cell(args) -> SweepSummary:
    X, n, max_b, max_d = args
    out = SweepSummary()
    for p in typed_partitions(n, X):
        for b in range(1, max_b + 1):
            for d in range(1, max_d + 1):
                out.cases_checked += 1
                lhs = key_lemma_lhs(p, X, b, d)
                rhs = key_lemma_rhs(p, X, b, d)
                base = {"X": X.value, "p": format_partition(p), "b": b, "d": d}
                if lhs != rhs:
                    out.counterexamples.append(
                        dict(base, kind="key_lemma", lhs=format_partition(lhs), rhs=format_partition(rhs)))
                report = lhs_case_formula(p, X, b, d)
                direct = lhs_direct(p, X, b, d)
                out.exceptional_cases += report.exceptional
                generic = union(inner_collapse(p, X), rectangle(b, 2 * d))
                # the exceptional branch must fire exactly when the generic formula fails
                if report.result != direct or report.exceptional != (direct != generic):
                    out.counterexamples.append(
                        dict(base, kind="case_formula", lhs=format_partition(direct),
                             rhs=format_partition(report.result)))
    return out


def key_lemma_sweep(max_size: int, max_b: int, max_d: int, jobs: int = 1) -> SweepSummary:
    """Check the induction identity and the case formulas over every small input.

    Cells (X, |p|) are independent; with ``jobs > 1`` they run in a process
    pool and are merged back in the fixed (X, |p|) order.
    """
    cells = [(X, n, max_b, max_d) for X in (B, C, D) for n in range(max_size + 1)]
    summary = SweepSummary()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_cell, cells))
    else:
        results = [_sweep_cell(c) for c in cells]
    for r in results:
        summary.merge(r)
    return summary
