"""Exhaustive and randomized checkers for the combinatorial identities.

Each checker returns a ``CheckResult``; ``failures`` holds a few concrete
witnesses (capped) while ``failure_count`` counts all of them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .duality import dbv, strict_inequality_check
from .partition import (
    ClassicalType,
    Partition,
    collapse,
    collapse_oracle,
    dominates,
    format_partition,
    partitions,
    pointwise_sum,
    rectangle,
    size_parity_ok,
    strictly_dominates,
    transpose,
    typed_partitions,
    union,
)
from .params import (
    Irrep,
    Summand,
    arthur_parameter,
    gl_wavefront,
    hat,
    p_A_of_phi,
    p_of_phi,
    p_of_psi,
    phi_of_gl_standard_module,
    phi_of_psi,
)

A, B, C, D = ClassicalType.A, ClassicalType.B, ClassicalType.C, ClassicalType.D
CLASSICAL = (B, C, D)
MAX_WITNESSES = 20


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, witness=None):
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness)

    def __str__(self):
        return f"{self.name}: {self.failure_count} failures / {self.cases} cases"


def _fmt(p):
    return format_partition(p)


def _same_size_pairs(max_size: int, X) -> Iterator[tuple[Partition, Partition]]:
    for n in range(max_size + 1):
        if X is not A and not size_parity_ok(n, X):
            continue
        ps = list(typed_partitions(n, X)) if X is not A else list(partitions(n))
        for p in ps:
            for q in ps:
                yield p, q


def check_collapse_oracle(max_size: int = 14) -> CheckResult:
    res = CheckResult("collapse = collapse_oracle")
    for n in range(max_size + 1):
        for X in CLASSICAL:
            if not size_parity_ok(n, X):
                continue
            for p in partitions(n):
                fast, slow = collapse(p, X), collapse_oracle(p, X)
                res.record(fast == slow, (X.value, _fmt(p), _fmt(fast), _fmt(slow)))
    return res


def check_dbv_cube(max_size: int = 16) -> CheckResult:
    res = CheckResult("dbv^3 = dbv")
    for X in (A, B, C, D):
        Xd = {A: A, B: C, C: B, D: D}[X]
        for n in range(max_size + 1):
            if X is not A and not size_parity_ok(n, X):
                continue
            ps = partitions(n) if X is A else typed_partitions(n, X)
            for p in ps:
                once = dbv(p, X)
                thrice = dbv(dbv(once, Xd), X)
                res.record(once == thrice, (X.value, _fmt(p)))
    return res


def check_dbv_order_reversal(max_size: int = 12) -> CheckResult:
    res = CheckResult("dbv order reversal")
    for X in (A, B, C, D):
        for p, q in _same_size_pairs(max_size, X):
            if dominates(p, q):
                res.record(dominates(dbv(q, X), dbv(p, X)), (X.value, _fmt(p), _fmt(q)))
    return res


def check_injectivity(max_size: int = 12, max_d: int = 3) -> CheckResult:
    """([2d]+p)_X >= ([2d]+q)_X forces p >= q."""
    res = CheckResult("induced partition injectivity")
    for X in CLASSICAL:
        for d in range(1, max_d + 1):
            for p, q in _same_size_pairs(max_size, X):
                ip = collapse(pointwise_sum(Partition((2 * d,)), p), X)
                iq = collapse(pointwise_sum(Partition((2 * d,)), q), X)
                if dominates(ip, iq):
                    res.record(dominates(p, q), (X.value, _fmt(p), _fmt(q), d))
    return res


def check_strict_inequality(max_size: int = 12, max_b: int = 4, max_d: int = 2) -> CheckResult:
    """Strictness of dbv(p) < dbv(q) survives adding [b^(2d)] to both sides."""
    res = CheckResult("strict inequality transfer")
    for X in CLASSICAL:
        for p, q in _same_size_pairs(max_size, X):
            if not (dominates(p, q) and strictly_dominates(dbv(q, X), dbv(p, X))):
                continue
            for b in range(1, max_b + 1):
                for d in range(1, max_d + 1):
                    res.record(strict_inequality_check(p, q, X, b, d), (X.value, _fmt(p), _fmt(q), b, d))
    return res


def check_transpose_involution(max_size: int = 16) -> CheckResult:
    res = CheckResult("transpose involution")
    for n in range(max_size + 1):
        for p in partitions(n):
            res.record(transpose(transpose(p)) == p, _fmt(p))
    return res


def check_union_transpose(max_size: int = 14) -> CheckResult:
    """(p ⊔ q)* = p* + q* for unordered pairs with |p| + |q| <= max_size."""
    res = CheckResult("(p ⊔ q)* = p* + q*")
    for total in range(max_size + 1):
        for k in range(total // 2 + 1):
            for p in partitions(k):
                for q in partitions(total - k):
                    res.record(transpose(union(p, q)) == pointwise_sum(transpose(p), transpose(q)),
                               (_fmt(p), _fmt(q)))
    return res


def random_arthur_parameter(rng: random.Random, max_dim: int = 12):
    """A random Arthur parameter of ambient dimension between 1 and ``max_dim``."""
    budget = rng.randint(1, max_dim)
    terms = []
    while budget > 0:
        dim = rng.randint(1, min(3, budget))
        a = rng.randint(1, max(1, budget // dim))
        b = rng.randint(1, max(1, budget // (dim * a)))
        paired = 2 * dim * a * b <= budget and rng.random() < 0.4
        x = Fraction(rng.randint(-4, 4), rng.choice((1, 2))) if paired else Fraction(0)
        rho = Irrep(rng.choice(("rho", "sigma")), dim)
        s = Summand(rho, x, a, b, paired)
        if s.dimension > budget:
            continue
        terms.append(s)
        budget -= s.dimension
    return arthur_parameter(terms)


def check_p_psi_identity(samples: int = 10_000, max_dim: int = 12, seed: int = 0) -> CheckResult:
    """p(psi) = p(phi of psi hat) on random Arthur parameters."""
    rng = random.Random(seed)
    res = CheckResult("p(psi) = p(phi_psi_hat)")
    for _ in range(samples):
        psi = random_arthur_parameter(rng, max_dim)
        res.record(p_of_psi(psi) == p_of_phi(phi_of_psi(hat(psi))), str(psi))
    return res


def check_gl_speh(max_k: int = 4, max_n: int = 4, max_d_A: int = 4) -> CheckResult:
    """A single Speh factor gives the rectangle [k^(n d_A)]."""
    res = CheckResult("GL Speh rectangle")
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            for d_A in range(1, max_d_A + 1):
                got = gl_wavefront([(k, n, Fraction(0))], d_A)
                res.record(got == rectangle(k, n * d_A), (k, n, d_A, _fmt(got)))
    return res


def random_standard_module(rng: random.Random, max_factors: int = 4):
    """Random (factors, d_A); twisted factors appear in +-x pairs."""
    d_A = rng.randint(1, 4)
    divisors = [s for s in range(1, d_A + 1) if d_A % s == 0]
    factors, target = [], rng.randint(1, max_factors)
    while len(factors) < target:
        m, n, s = rng.randint(1, 3), rng.randint(1, 3), rng.choice(divisors)
        if rng.random() < 0.4:
            x = Fraction(rng.randint(1, 5), rng.choice((1, 2)))
            factors += [(m, n, x, s), (m, n, -x, s)]
        else:
            factors.append((m, n, Fraction(0), s))
    return factors, d_A


def check_gl_wavefront(samples: int = 1000, seed: int = 0) -> CheckResult:
    """gl_wavefront agrees with dbv(p_A(phi), A) routed through the parameter layer."""
    rng = random.Random(seed)
    res = CheckResult("gl_wavefront = dbv(p_A(phi), A)")
    for _ in range(samples):
        factors, d_A = random_standard_module(rng)
        phi = phi_of_gl_standard_module(factors, d_A)
        direct = gl_wavefront([(m, n, x) for m, n, x, _ in factors], d_A)
        via = dbv(p_A_of_phi(phi, d_A), A)
        res.record(direct == via, (factors, d_A))
    return res


def check_collapse_splitting(max_size: int = 14) -> CheckResult:
    """Collapse commutes with setting aside a block of equal parts.

    For B and D, an odd value v = 2x+1 present in p gives
    collapse(p) = collapse(p without v's, B or D by parity) ⊔ (the v's);
    for C the same holds with an even value v = 2x.
    """
    res = CheckResult("collapse splitting at a present value")
    for n in range(1, max_size + 1):
        for X in CLASSICAL:
            if not size_parity_ok(n, X):
                continue
            for p in partitions(n):
                full = collapse(p, X)
                for v in sorted(set(p.parts)):
                    if (v % 2 == 1) == (X is C):
                        continue
                    block = Partition(tuple(u for u in p if u == v))
                    rest = Partition(tuple(u for u in p if u != v))
                    inner = C if X is C else (B if rest.size % 2 else D)
                    res.record(full == union(collapse(rest, inner), block), (X.value, _fmt(p), v))
    return res
