"""Induced nilpotent orbits at the level of partitions.

Inducing from a GL x GL Levi adds partitions pointwise; inducing from
GL_n x G into a classical group of type X doubles the GL partition, adds
the classical one and takes the X-collapse.  Levi data with several GL
blocks are handled in stages.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import LeviSyntaxError, PreconditionViolated, TypeMismatch
from .partition import (
    ClassicalType,
    Partition,
    as_type,
    collapse,
    format_partition,
    is_type,
    parse_partition,
    pointwise_sum,
)


@dataclass(frozen=True)
class NilpotentOrbit:
    group_type: ClassicalType
    partition: Partition
    label: Optional[str] = None  # "I" / "II" for very even type D

    def __post_init__(self):
        object.__setattr__(self, "group_type", as_type(self.group_type))
        if not is_type(self.partition, self.group_type):
            raise TypeMismatch(f"{format_partition(self.partition)} is not of type {self.group_type}")
        if self.label is not None:
            if self.label not in ("I", "II"):
                raise ValueError(f"orbit label must be I or II, got {self.label!r}")
            if not self.is_very_even:
                raise ValueError("labels only apply to very even type-D partitions")

    @property
    def is_very_even(self) -> bool:
        return self.group_type is ClassicalType.D and all(v % 2 == 0 for v in self.partition)


@dataclass(frozen=True)
class LeviDatum:
    """GL blocks (given by their orbit partitions) plus an optional classical tail."""

    gl_blocks: tuple[Partition, ...] = ()
    tail: Optional[NilpotentOrbit] = None
    block_sizes: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        blocks = tuple(self.gl_blocks)
        object.__setattr__(self, "gl_blocks", blocks)
        sizes = tuple(self.block_sizes) or tuple(p.size for p in blocks)
        if len(sizes) != len(blocks) or any(n != p.size for n, p in zip(sizes, blocks)):
            raise ValueError(f"block sizes {sizes} do not match the block partitions")
        if any(n < 1 for n in sizes):
            raise ValueError("GL blocks must have positive size")
        object.__setattr__(self, "block_sizes", sizes)

    def ambient_size(self, X) -> int:
        X = as_type(X)
        gl = sum(self.block_sizes)
        if X is ClassicalType.A:
            return gl
        return 2 * gl + (self.tail.partition.size if self.tail else 0)


def induce_gl(p1: Partition, p2: Partition) -> Partition:
    return pointwise_sum(p1, p2)


def induce_classical(gl_part: Partition, tail_part: Partition, X) -> Partition:
    X = as_type(X)
    if X is ClassicalType.A:
        raise ValueError("induce_classical needs X in B, C, D")
    if tail_part and not is_type(tail_part, X):
        raise TypeMismatch(f"tail {format_partition(tail_part)} is not of type {X}")
    return collapse(pointwise_sum(pointwise_sum(gl_part, gl_part), tail_part), X)


def induce_levi(levi: LeviDatum, X) -> Partition:
    X = as_type(X)
    gl = Partition()
    for block in levi.gl_blocks:
        gl = induce_gl(gl, block)
    if X is ClassicalType.A:
        if levi.tail is not None:
            raise ValueError("a type-A Levi has no classical tail")
        return gl
    tail = levi.tail.partition if levi.tail else Partition()
    if levi.tail is not None and levi.tail.group_type is not X:
        raise TypeMismatch(f"tail has type {levi.tail.group_type}, ambient is {X}")
    return induce_classical(gl, tail, X)


def induced_wavefront(tau_wavefront: Iterable[Partition], sigma_wavefront: Iterable[Partition],
                      X) -> frozenset[Partition]:
    """Image of (wavefront of the GL factor) x (wavefront of the classical factor) under induction."""
    taus, sigmas = list(tau_wavefront), list(sigma_wavefront)
    if not taus or not sigmas:
        raise PreconditionViolated("wavefront sets must be nonempty")
    return frozenset(induce_classical(t, s, X) for t in taus for s in sigmas)


# ---------------------------------------------------------------- text

_LEVI_TYPE = re.compile(r"^(.*):\s*([ABCDabcd])\s*$", re.S)
_FACTOR = re.compile(r"\s*(GL|G)\s*\(\s*(\[[^\]]*\])\s*\)\s*")


def parse_levi(text: str) -> tuple[LeviDatum, ClassicalType]:
    """Parse ``"GL([2,1])*GL([1])*G([4,2,2,2]):C"``; ``G(...)`` is the classical tail."""
    m = _LEVI_TYPE.match(text)
    if m is None:
        raise LeviSyntaxError("missing ':X' type suffix", text, len(text))
    body, X = m.group(1), as_type(m.group(2))
    blocks, tail = [], None
    pos = 0
    for i, chunk in enumerate(body.split("*")):
        f = _FACTOR.fullmatch(chunk)
        if f is None:
            raise LeviSyntaxError(f"bad factor {chunk.strip()!r}", text, pos)
        part = parse_partition(f.group(2))
        if f.group(1) == "GL":
            if tail is not None:
                raise LeviSyntaxError("GL factor after the classical tail", text, pos)
            blocks.append(part)
        else:
            if tail is not None:
                raise LeviSyntaxError("more than one classical factor", text, pos)
            if X is ClassicalType.A:
                raise LeviSyntaxError("type A has no classical factor", text, pos)
            tail = NilpotentOrbit(X, part)
        pos += len(chunk) + 1
    return LeviDatum(tuple(blocks), tail), X


def format_levi(levi: LeviDatum, X) -> str:
    factors = [f"GL({format_partition(p)})" for p in levi.gl_blocks]
    if levi.tail is not None:
        factors.append(f"G({format_partition(levi.tail.partition)})")
    return "*".join(factors) + f":{as_type(X)}"
