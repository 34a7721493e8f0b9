"""Decomposed L-parameters and local Arthur parameters as formal sums.

A summand stands for rho|.|^x ⊗ S_a ⊗ S_b; when ``paired`` it also stands for
the dual term with twist -x, so it contributes twice its dimension.  Twists
are exact ``Fraction`` values.

Text grammar (whitespace-insensitive)::

    param := term ("+" term)*
    term  := ["2*"] NAME "(" dim ["," "s=" int] ")" ["@" rational] "S" int ["S" int]

NAME is usually ``rho``; other identifiers distinguish irreducibles of the
same dimension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    DivisibilityError,
    MissingDivisionData,
    ParameterSyntaxError,
)
from .partition import Partition, pointwise_sum, rectangle, union


class Context(str, Enum):
    L = "L"  # L-parameter: every b is 1
    ARTHUR = "A"


@dataclass(frozen=True)
class Irrep:
    id: str = "rho"
    dim: int = 1
    s_value: Optional[int] = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("irreducible dimension must be positive")
        if self.s_value is not None and self.s_value < 1:
            raise ValueError("s_value must be positive")


@dataclass(frozen=True)
class Summand:
    rho: Irrep
    x: Fraction = Fraction(0)
    a: int = 1
    b: int = 1
    paired: bool = False

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if self.a < 1 or self.b < 1:
            raise ValueError("SL2 dimensions must be positive")
        if self.x != 0 and not self.paired:
            raise ValueError(f"summand with twist {self.x} must be paired with its dual")

    @property
    def multiplicity(self) -> int:
        return 2 if self.paired else 1

    @property
    def dimension(self) -> int:
        return self.multiplicity * self.rho.dim * self.a * self.b

    def sort_key(self):
        return (self.rho.dim, self.rho.id, self.rho.s_value or 0, self.a, self.b, -self.x, self.paired)


@dataclass(frozen=True)
class Parameter:
    """Multiset of summands; equality ignores input order."""

    summands: tuple[Summand, ...] = ()
    context: Context = Context.ARTHUR

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands, key=Summand.sort_key)))
        object.__setattr__(self, "context", Context(self.context))
        if self.context is Context.L and any(s.b != 1 for s in self.summands):
            raise ContextMismatch("an L-parameter has trivial Arthur SL2 (b = 1) in every summand")

    @property
    def ambient_dim(self) -> int:
        return sum(s.dimension for s in self.summands)

    def __add__(self, other: "Parameter") -> "Parameter":
        if self.context is not other.context:
            raise ContextMismatch("cannot add parameters of different contexts")
        return Parameter(self.summands + other.summands, self.context)

    def __str__(self):
        return format_parameter(self)


def L_parameter(summands: Iterable[Summand]) -> Parameter:
    return Parameter(tuple(summands), Context.L)


def arthur_parameter(summands: Iterable[Summand]) -> Parameter:
    return Parameter(tuple(summands), Context.ARTHUR)


def _require(param: Parameter, context: Context, what: str):
    if param.context is not context:
        raise ContextMismatch(f"{what} needs a {context.name} parameter, got {param.context.name}")


# ------------------------------------------------------------ partitions

def p_of_phi(phi: Parameter) -> Partition:
    _require(phi, Context.L, "p(phi)")
    out = Partition()
    for s in phi.summands:
        out = union(out, rectangle(s.a, s.multiplicity * s.rho.dim))
    return out


def p_of_psi(psi: Parameter) -> Partition:
    _require(psi, Context.ARTHUR, "p(psi)")
    out = Partition()
    for s in psi.summands:
        out = union(out, rectangle(s.b, s.multiplicity * s.a * s.rho.dim))
    return out


def hat(psi: Parameter) -> Parameter:
    """Swap the Deligne and Arthur SL2 factors."""
    _require(psi, Context.ARTHUR, "hat")
    return arthur_parameter(
        Summand(s.rho, s.x, s.b, s.a, s.paired) for s in psi.summands)


def phi_of_psi(psi: Parameter) -> Parameter:
    """Restrict the Arthur SL2 to the diagonal twist.

    rho|.|^x ⊗ S_a ⊗ S_b becomes the b terms rho|.|^(x + (b+1)/2 - j) ⊗ S_a,
    j = 1..b.  For an unpaired summand (x = 0) these twists are symmetric and
    are regrouped into pairs plus, when b is odd, one untwisted term.
    """
    _require(psi, Context.ARTHUR, "phi_psi")
    out = []
    for s in psi.summands:
        shifts = [Fraction(s.b + 1, 2) - j for j in range(1, s.b + 1)]
        if s.paired:
            out.extend(Summand(s.rho, s.x + c, s.a, 1, True) for c in shifts)
        else:
            out.extend(Summand(s.rho, c, s.a, 1, c != 0) for c in shifts if c >= 0)
    return L_parameter(out)


def p_A_of_phi(phi: Parameter, d_A: int) -> Partition:
    """Partition attached to phi through the inverse Jacquet-Langlands map.

    Each summand rho ⊗ S_a with s = s(rho') contributes the rectangle
    [(a/s * d_A)^(dim(rho) s / d_A)], doubled when paired.
    """
    _require(phi, Context.L, "p_A(phi)")
    if d_A < 1:
        raise ValueError("d_A must be positive")
    out = Partition()
    for s in phi.summands:
        sv = s.rho.s_value
        if sv is None:
            if d_A != 1:
                raise MissingDivisionData(f"summand {format_summand(s, Context.L)} lacks s=")
            sv = 1
        if d_A % sv:
            raise DivisibilityError(f"s = {sv} does not divide d_A = {d_A}")
        if s.a % sv:
            raise DivisibilityError(f"a = {s.a} is not a multiple of s = {sv}")
        if (s.rho.dim * sv) % d_A:
            raise DivisibilityError(f"dim(rho) * s = {s.rho.dim * sv} is not a multiple of d_A = {d_A}")
        count = s.multiplicity * s.rho.dim * sv // d_A
        out = union(out, rectangle(s.a // sv * d_A, count))
    return out


def gl_wavefront(standard_module: Sequence[tuple[int, int, Fraction]], d_A: int) -> Partition:
    """Sum of rectangles [m^(n d_A)] over the factors St(rho', n)|.|^x, rho' cuspidal on GL_m(A)."""
    out = Partition()
    for m, n, _x in standard_module:
        out = pointwise_sum(out, rectangle(m, n * d_A))
    return out


def phi_of_gl_standard_module(factors: Sequence[tuple[int, int, Fraction, int]], d_A: int) -> Parameter:
    """L-parameter of St(rho'_1, n_1)|.|^x_1 x ... over GL_m(A).

    ``factors`` holds (m, n, x, s): rho' cuspidal on GL_m(A) with
    JL(rho') = St(rho, s), so dim(rho) = m d_A / s and the factor becomes
    rho|.|^x ⊗ S_(s n).  Factors with nonzero twist must come in +-x pairs
    with equal (m, n, s); each pair becomes one paired summand.
    """
    out, plus, minus = [], [], []
    for idx, (m, n, x, s) in enumerate(factors):
        x = Fraction(x)
        if d_A % s:
            raise DivisibilityError(f"s = {s} must divide d_A = {d_A}")
        if x == 0:
            out.append(Summand(Irrep(f"rho{idx}", m * d_A // s, s), 0, s * n))
        elif x > 0:
            out.append(Summand(Irrep(f"rho{idx}", m * d_A // s, s), x, s * n, 1, True))
            plus.append((m, n, s, x))
        else:
            minus.append((m, n, s, -x))
    if sorted(plus) != sorted(minus):
        raise ValueError("twisted factors must come in pairs with opposite twists")
    return L_parameter(out)


# ------------------------------------------------------------------ text

_TERM = re.compile(
    r"\s*(?P<pair>2\s*\*)?\s*(?P<name>[A-Za-z][A-Za-z0-9_]*)\s*\(\s*(?P<dim>\d+)\s*"
    r"(?:,\s*s\s*=\s*(?P<s>\d+)\s*)?\)\s*"
    r"(?:@\s*(?P<x>-?\d+(?:/\d+)?)\s*)?"
    r"S\s*(?P<a>\d+)\s*(?:S\s*(?P<b>\d+)\s*)?"
)


def parse_parameter(text: str, context: Optional[Context] = None,
                    ambient_dim: Optional[int] = None) -> Parameter:
    """Parse the text grammar.

    Without an explicit ``context`` the result is an Arthur parameter when
    any term carries a second ``S`` factor and an L-parameter otherwise.
    """
    summands, has_b = [], False
    pos = 0
    if text.strip():
        while True:
            m = _TERM.match(text, pos)
            if m is None:
                raise ParameterSyntaxError("expected a term like 'rho(1)@0 S2 S1'", text, pos)
            paired = m.group("pair") is not None
            x = Fraction(m.group("x")) if m.group("x") else Fraction(0)
            if x != 0 and not paired:
                raise ParameterSyntaxError("a twisted term must be written as a pair '2*...'", text, pos)
            s_val = int(m.group("s")) if m.group("s") else None
            dim, a = int(m.group("dim")), int(m.group("a"))
            b = int(m.group("b")) if m.group("b") else 1
            has_b |= m.group("b") is not None
            if dim < 1 or a < 1 or b < 1 or s_val == 0:
                raise ParameterSyntaxError("dimensions must be positive", text, pos)
            summands.append(Summand(Irrep(m.group("name"), dim, s_val), x, a, b, paired))
            pos = m.end()
            if pos == len(text):
                break
            if text[pos] != "+":
                raise ParameterSyntaxError(f"unexpected {text[pos]!r}", text, pos)
            pos += 1
    if context is None:
        context = Context.ARTHUR if has_b else Context.L
    param = Parameter(tuple(summands), Context(context))
    if ambient_dim is not None and param.ambient_dim != ambient_dim:
        raise DimensionMismatch(f"parameter has dimension {param.ambient_dim}, expected {ambient_dim}")
    return param


def _format_twist(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_summand(s: Summand, context: Context) -> str:
    rho = f"{s.rho.id}({s.rho.dim}" + (f",s={s.rho.s_value}" if s.rho.s_value is not None else "") + ")"
    out = ("2*" if s.paired else "") + rho
    if s.x != 0:
        out += "@" + _format_twist(s.x)
    out += f" S{s.a}"
    if context is Context.ARTHUR:
        out += f" S{s.b}"
    return out


def format_parameter(param: Parameter) -> str:
    return " + ".join(format_summand(s, param.context) for s in param.summands)
