"""Monomials, polynomials and the edge ideal of a Ferrers graph.

Variables are ``x_1..x_n`` (rows) and ``y_1..y_m`` (columns).  Monomials
are stored as sorted ``(variable, exponent)`` pairs, so they are hashable
and compare by variable sequence.  The canonical text form is ``x1*y6`` for
monomials, ``x1*y6 + x3*y4`` for polynomials and ``(x1..x3, y1..y2)`` for
prime components.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from ferrers.shape import Partition, outer_corners

ROW = "x"
COL = "y"


class Variable(NamedTuple):
    axis: str
    index: int

    def __str__(self) -> str:
        return f"{self.axis}{self.index}"


def x(i: int) -> Variable:
    return Variable(ROW, i)


def y(j: int) -> Variable:
    return Variable(COL, j)


@dataclass(frozen=True, order=True)
class Monomial:
    """A monic monomial; the empty product is ``1``."""

    powers: tuple[tuple[Variable, int], ...] = ()
    exponents: dict[Variable, int] = field(init=False, repr=False, compare=False)
    variables: tuple[Variable, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        merged: dict[Variable, int] = {}
        for var, exp in self.powers:
            if type(var) is not Variable:
                var = Variable(*var)
            if var.axis not in (ROW, COL) or var.index < 1:
                raise ValueError(f"bad variable {var!r}")
            if exp < 0:
                raise ValueError(f"negative exponent on {var}")
            merged[var] = merged.get(var, 0) + exp
        powers = tuple(sorted((v, e) for v, e in merged.items() if e))
        object.__setattr__(self, "powers", powers)
        # derived views, precomputed because divisibility checks are the hot path
        object.__setattr__(self, "exponents", dict(powers))
        object.__setattr__(self, "variables", tuple(v for v, _ in powers))

    @classmethod
    def of(cls, *variables: Variable) -> Monomial:
        return cls(tuple((v, 1) for v in variables))

    @classmethod
    def from_exponents(cls, exponents: Mapping[Variable, int]) -> Monomial:
        return cls(tuple(exponents.items()))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.powers)

    def rows(self) -> list[int]:
        return [v.index for v in self.variables if v.axis == ROW]

    def cols(self) -> list[int]:
        return [v.index for v in self.variables if v.axis == COL]

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.powers + other.powers)

    def __pow__(self, e: int) -> Monomial:
        return Monomial(tuple((v, k * e) for v, k in self.powers))

    def divides(self, other: Monomial) -> bool:
        theirs = other.exponents
        return all(theirs.get(v, 0) >= e for v, e in self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.powers)


def _sort_key(mono: Monomial):
    return (mono.degree, mono.powers)


@dataclass(frozen=True)
class Polynomial:
    """Integer-coefficient polynomial with terms in canonical order.

    Like terms are merged and zero coefficients dropped on construction.
    """

    terms: tuple[tuple[int, Monomial], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Monomial, int] = {}
        for coeff, mono in self.terms:
            merged[mono] = merged.get(mono, 0) + int(coeff)
        ordered = sorted(((c, mono) for mono, c in merged.items() if c), key=lambda t: _sort_key(t[1]))
        object.__setattr__(self, "terms", tuple(ordered))

    @classmethod
    def sum_of(cls, monomials: Iterable[Monomial]) -> Polynomial:
        return cls(tuple((1, mono) for mono in monomials))

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(mono for _, mono in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (coeff, mono) in enumerate(self.terms):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not mono.powers:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


_VAR_RE = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    """Inverse of ``str(Monomial)``."""
    text = text.strip()
    if text == "1":
        return Monomial()
    powers = []
    for factor in text.split("*"):
        match = _VAR_RE.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        axis, index, exp = match.groups()
        powers.append((Variable(axis, int(index)), int(exp) if exp else 1))
    return Monomial(tuple(powers))


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of ``str(Polynomial)``."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    terms = []
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text):
        body = body.strip()
        coeff = -1 if sign == "-" else 1
        head, _, rest = body.partition("*")
        if head.isdigit():
            coeff *= int(head)
            mono = parse_monomial(rest) if rest else Monomial()
        else:
            mono = parse_monomial(body)
        terms.append((coeff, mono))
    return Polynomial(tuple(terms))


@dataclass(frozen=True, order=True)
class PrimeComponent:
    """The prime ``(x_1..x_a, y_1..y_b)`` stored as prefix lengths ``(a, b)``."""

    x_prefix: int
    y_prefix: int

    def __post_init__(self) -> None:
        if self.x_prefix < 0 or self.y_prefix < 0 or self.x_prefix + self.y_prefix < 1:
            raise ValueError(f"invalid prime component ({self.x_prefix}, {self.y_prefix})")

    @property
    def height(self) -> int:
        return self.x_prefix + self.y_prefix

    @property
    def variables(self) -> tuple[Variable, ...]:
        return tuple(x(i) for i in range(1, self.x_prefix + 1)) + tuple(
            y(j) for j in range(1, self.y_prefix + 1)
        )

    def contains(self, other: PrimeComponent) -> bool:
        """True if ``other`` is a subideal of ``self``."""
        return other.x_prefix <= self.x_prefix and other.y_prefix <= self.y_prefix

    def __str__(self) -> str:
        pieces = []
        for axis, count in ((ROW, self.x_prefix), (COL, self.y_prefix)):
            if count == 1:
                pieces.append(f"{axis}1")
            elif count > 1:
                pieces.append(f"{axis}1..{axis}{count}")
        return "(" + ", ".join(pieces) + ")"


@lru_cache(maxsize=1 << 16)
def edge_monomial(i: int, j: int) -> Monomial:
    return Monomial.of(x(i), y(j))


def edge_generators(p: Partition) -> list[Monomial]:
    """Generators ``x_i y_j`` with ``j <= lambda_i`` in row-major order."""
    return [edge_monomial(i, j) for i, row in enumerate(p.parts, 1) for j in range(1, row + 1)]


def full_decomposition(p: Partition) -> list[PrimeComponent]:
    """The ``n + 1`` primes ``(x_1..x_{i-1}, y_1..y_{lambda_i})``, possibly redundant."""
    return [PrimeComponent(i - 1, p.part(i)) for i in range(1, p.n + 2)]


def minimal_decomposition(p: Partition) -> list[PrimeComponent]:
    """The irredundant primes, one per outer corner plus the sentinel row."""
    return [PrimeComponent(c - 1, p.part(c)) for c in outer_corners(p).extended]


def _check_ambient(mono: Monomial, p: Partition) -> None:
    for var in mono.variables:
        bound = p.n if var.axis == ROW else p.m
        if var.index > bound:
            raise ValueError(f"variable {var} is outside the ring of {p}")


def monomial_in_edge_ideal(mono: Monomial, p: Partition) -> bool:
    _check_ambient(mono, p)
    rows, cols = mono.rows(), mono.cols()
    # the smallest row has the longest part, the smallest column the best chance
    return bool(rows and cols) and min(cols) <= p.part(min(rows))


def monomial_in_component(mono: Monomial, comp: PrimeComponent) -> bool:
    return any(
        var.index <= (comp.x_prefix if var.axis == ROW else comp.y_prefix)
        for var in mono.variables
    )


def incomparable(components: Iterable[PrimeComponent]) -> bool:
    comps = list(components)
    return not any(
        a.contains(b) for i, a in enumerate(comps) for j, b in enumerate(comps) if i != j
    )
