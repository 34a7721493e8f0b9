"""Partition arithmetic for nilpotent orbits of classical Lie algebras.

A partition is stored as a non-increasing tuple of positive integers.  The
module provides the dominance order, transpose, the union / pointwise-sum /
plus-one / minus-one operators, slicing by a threshold, membership in the
B, C, D families and the X-collapse (fast recursive version plus a
brute-force reference).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Iterator

from .errors import (
    EmptyPartition,
    NoUniqueMaximum,
    ParityMismatch,
    PartitionSyntaxError,
    SizeGuardExceeded,
    SizeMismatch,
)


class ClassicalType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self):
        return self.value


def as_type(X) -> ClassicalType:
    if isinstance(X, ClassicalType):
        return X
    return ClassicalType(str(X).upper())


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive parts.

    Any iterable of nonnegative integers is accepted; zeros are dropped and
    the rest sorted, so ``Partition([1, 3, 0, 3]) == Partition([3, 3, 1])``.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        raw = tuple(int(v) for v in self.parts)
        if any(v < 0 for v in raw):
            raise ValueError(f"negative part in {raw}")
        object.__setattr__(self, "parts", tuple(sorted((v for v in raw if v), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Part value -> multiplicity, largest value first."""
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return format_partition(self)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def make_partition(raw: Iterable[int] = ()) -> Partition:
    return raw if isinstance(raw, Partition) else Partition(tuple(raw))


def rectangle(value: int, count: int) -> Partition:
    """``[value^count]``."""
    return Partition((value,) * count)


# ---------------------------------------------------------------- order

def dominates(p: Partition, q: Partition) -> bool:
    """``p >= q`` in the dominance order (prefix sums of p bound those of q)."""
    if p.size != q.size:
        raise SizeMismatch(f"|{p}| = {p.size} but |{q}| = {q.size}")
    sp = sq = 0
    for a, b in zip_longest(p.parts, q.parts, fillvalue=0):
        sp += a
        sq += b
        if sp < sq:
            return False
    return True


def strictly_dominates(p: Partition, q: Partition) -> bool:
    return p != q and dominates(p, q)


def comparable(p: Partition, q: Partition) -> bool:
    return dominates(p, q) or dominates(q, p)


# ------------------------------------------------------------ operators

def transpose(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return p
    return Partition(tuple(sum(1 for v in parts if v >= i) for i in range(1, parts[0] + 1)))


def union(p: Partition, q: Partition) -> Partition:
    """Multiset union of parts (the square-cup operator)."""
    return Partition(p.parts + q.parts)


def pointwise_sum(p: Partition, q: Partition) -> Partition:
    return Partition(tuple(a + b for a, b in zip_longest(p.parts, q.parts, fillvalue=0)))


def plus_one(p: Partition) -> Partition:
    """Add one to the largest part; the empty partition becomes ``[1]``."""
    if not p.parts:
        return Partition((1,))
    return Partition((p.parts[0] + 1,) + p.parts[1:])


def minus_one(p: Partition) -> Partition:
    """Subtract one from the smallest part, dropping it if it reaches zero."""
    if not p.parts:
        raise EmptyPartition("minus_one of the empty partition")
    return Partition(p.parts[:-1] + (p.parts[-1] - 1,))


class Comparator(str, Enum):
    GT = ">"
    GE = ">="
    EQ = "="
    LT = "<"
    LE = "<="


_COMPARE = {
    Comparator.GT: lambda v, x: v > x,
    Comparator.GE: lambda v, x: v >= x,
    Comparator.EQ: lambda v, x: v == x,
    Comparator.LT: lambda v, x: v < x,
    Comparator.LE: lambda v, x: v <= x,
}


@dataclass(frozen=True)
class Slice:
    comparator: Comparator
    threshold: int

    def __post_init__(self):
        c = self.comparator
        if not isinstance(c, Comparator):
            c = {"≥": ">=", "≤": "<="}.get(c, c)
            object.__setattr__(self, "comparator", Comparator(c))
        if self.threshold < 0:
            raise ValueError("slice threshold must be nonnegative")


def slice_partition(p: Partition, s: Slice) -> Partition:
    test = _COMPARE[s.comparator]
    return Partition(tuple(v for v in p.parts if test(v, s.threshold)))


def above(p: Partition, x: int) -> Partition:
    """Parts strictly greater than ``x``."""
    return Partition(tuple(v for v in p.parts if v > x))


def at_most(p: Partition, x: int) -> Partition:
    return Partition(tuple(v for v in p.parts if v <= x))


def equal_to(p: Partition, x: int) -> Partition:
    return Partition(tuple(v for v in p.parts if v == x))


def below(p: Partition, x: int) -> Partition:
    return Partition(tuple(v for v in p.parts if v < x))


# ----------------------------------------------------------- type checks

def _violations(parts: tuple[int, ...], X: ClassicalType) -> list[int]:
    """Part values whose multiplicity breaks the parity rule of type X."""
    # B and D: even parts need even multiplicity; C: odd parts do.
    bad_parity = 1 if X is ClassicalType.C else 0
    counts = Counter(parts)
    return sorted((v for v, r in counts.items() if v % 2 == bad_parity and r % 2), reverse=True)


def size_parity_ok(n: int, X) -> bool:
    X = as_type(X)
    if X is ClassicalType.A:
        return True
    if X is ClassicalType.B:
        return n % 2 == 1
    return n % 2 == 0


def is_type(p: Partition, X) -> bool:
    X = as_type(X)
    if X is ClassicalType.A:
        return True
    return size_parity_ok(p.size, X) and not _violations(p.parts, X)


def _check_parity(p: Partition, X: ClassicalType):
    if not size_parity_ok(p.size, X):
        want = "odd" if X is ClassicalType.B else "even"
        raise ParityMismatch(f"type {X} needs {want} size, got |{p}| = {p.size}")


# -------------------------------------------------------------- collapse

def collapse(p: Partition, X) -> Partition:
    """Largest type-X partition dominated by ``p``.

    Recursive: pick a split value x, cut p into the parts above x and the
    rest, adjust by one box according to the parities of the upper piece and
    collapse the two pieces separately.  The type-A collapse is the identity.
    """
    X = as_type(X)
    if X is ClassicalType.A:
        return p
    _check_parity(p, X)
    return Partition(_collapse(p.parts, X))


_B, _C, _D = ClassicalType.B, ClassicalType.C, ClassicalType.D

# (row type, l(upper) odd, |upper| odd) -> (shift?, type for upper, type for lower)
_TABLE = {
    (_B, False, False): (False, _D, _B),
    (_B, False, True): (True, _D, _B),
    (_B, True, False): (True, _B, _D),
    (_B, True, True): (False, _B, _D),
    (_C, False, False): (False, _C, _C),
    (_C, False, True): (True, _C, _C),
    (_C, True, False): (False, _C, _C),
    (_C, True, True): (True, _C, _C),
    (_D, False, False): (False, _D, _D),
    (_D, False, True): (True, _D, _D),
    (_D, True, False): (True, _B, _B),
    (_D, True, True): (False, _B, _B),
}


def collapse_pivot(parts: tuple[int, ...], X: ClassicalType) -> int:
    """Split value used by the recursion for a partition that is not of type X.

    Take the largest offending part value q.  Split at q when a larger part
    exists, otherwise just below q; either choice makes both recursive
    calls strictly smaller.
    """
    q = _violations(parts, X)[0]
    return q if q < parts[0] else q - 1


@lru_cache(maxsize=None)
def _collapse(parts: tuple[int, ...], X: ClassicalType) -> tuple[int, ...]:
    if not _violations(parts, X):
        return parts
    x = collapse_pivot(parts, X)
    hi = tuple(v for v in parts if v > x)
    lo = tuple(v for v in parts if v <= x)
    shift, X_hi, X_lo = _TABLE[(X, len(hi) % 2 == 1, sum(hi) % 2 == 1)]
    if shift:
        hi = hi[:-1] + (hi[-1] - 1,) if hi[-1] > 1 else hi[:-1]
        lo = (lo[0] + 1,) + lo[1:] if lo else (1,)
    merged = _collapse(hi, X_hi) + _collapse(lo, X_lo)
    return tuple(sorted(merged, reverse=True))


# ---------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    for parts in _partitions_bounded(n, n):
        yield Partition(parts)


def typed_partitions(n: int, X) -> Iterator[Partition]:
    X = as_type(X)
    if not size_parity_ok(n, X):
        return
    for p in partitions(n):
        if is_type(p, X):
            yield p


ORACLE_SIZE_GUARD = 24


def collapse_oracle(p: Partition, X, max_size: int = ORACLE_SIZE_GUARD) -> Partition:
    """Brute-force collapse: the unique dominance-maximum among type-X partitions below p."""
    X = as_type(X)
    if X is ClassicalType.A:
        return p
    _check_parity(p, X)
    if p.size > max_size:
        raise SizeGuardExceeded(f"|{p}| = {p.size} exceeds oracle guard {max_size}")
    below_p = [q for q in typed_partitions(p.size, X) if dominates(p, q)]
    maximal = [q for q in below_p if not any(strictly_dominates(r, q) for r in below_p)]
    if len(maximal) != 1:
        raise NoUniqueMaximum(f"{len(maximal)} maximal type-{X} partitions below {p}: {maximal}")
    top = maximal[0]
    if not all(dominates(top, q) for q in below_p):
        raise NoUniqueMaximum(f"{top} does not dominate every type-{X} partition below {p}")
    return top


# ---------------------------------------------------------- text format

_ITEM = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+)\s*)?")


def parse_partition(text: str) -> Partition:
    """Parse ``"[5,3,1^3]"``; whitespace is ignored, the brackets are required."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise PartitionSyntaxError("expected a bracketed list", text, 0)
    body_start = text.index("[") + 1
    body = s[1:-1]
    if not body.strip():
        return Partition()
    parts: list[int] = []
    pos = 0
    offset = body_start
    for chunk in body.split(","):
        m = _ITEM.fullmatch(chunk)
        if m is None:
            raise PartitionSyntaxError(f"bad entry {chunk.strip()!r}", text, offset + pos)
        value, exp = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * exp)
        pos += len(chunk) + 1
    return Partition(tuple(parts))


def format_partition(p: Partition, shorthand_from: int = 4) -> str:
    """Render with exponent shorthand for parts repeated at least ``shorthand_from`` times."""
    items = []
    for v, r in p.multiplicities().items():
        if r >= shorthand_from:
            items.append(f"{v}^{r}")
        else:
            items.extend([str(v)] * r)
    return "[" + ",".join(items) + "]"
