"""Brute-force checks that do not rely on the certificate argument.

Two independent checks:

* common zeros over a small prime field: the edge generators and the
  diagonal sums must vanish on exactly the same points of ``F_p^(n+m)``;
* squarefree membership: a squarefree monomial lies in the edge ideal iff
  it lies in every prime of a claimed decomposition.

Agreement over finite fields is evidence only.  Equal radicals force equal
zero sets over every field, but the converse needs an algebraically closed
field; the Schmitt-Vogel certificate is what actually proves equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from ferrers.ideal import (
    ROW,
    Monomial,
    Polynomial,
    PrimeComponent,
    Variable,
    monomial_in_component,
    monomial_in_edge_ideal,
    x,
    y,
)
from ferrers.shape import Partition

DEFAULT_BUDGET = 10**7
EVIDENCE_NOTE = (
    "note: agreement over a finite field is evidence, not proof; "
    "the verified Schmitt-Vogel certificate is the proof"
)
_CHUNK = 1 << 18


class BudgetExceeded(RuntimeError):
    pass


class DimensionMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _check_field(p: int) -> None:
    if not _is_prime(p):
        raise ValueError(f"field order {p} is not prime")


@dataclass(frozen=True, order=True)
class FieldPoint:
    """A point of ``F_p^(n+m)``, coordinates ordered ``x_1..x_n, y_1..y_m``."""

    residues: tuple[int, ...]
    field_order: int
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", tuple(int(v) for v in self.residues))
        if not 0 <= self.n <= len(self.residues):
            raise DimensionMismatch(f"row count {self.n} exceeds point length")
        if any(not 0 <= v < self.field_order for v in self.residues):
            raise ValueError(f"residue outside [0, {self.field_order - 1}]")

    @classmethod
    def from_xy(cls, xs: Sequence[int], ys: Sequence[int], field_order: int) -> FieldPoint:
        return cls(tuple(xs) + tuple(ys), field_order, len(xs))

    @property
    def x(self) -> tuple[int, ...]:
        return self.residues[: self.n]

    @property
    def y(self) -> tuple[int, ...]:
        return self.residues[self.n :]

    def __getitem__(self, var: Variable) -> int:
        coords = self.x if var.axis == ROW else self.y
        if var.index > len(coords):
            raise DimensionMismatch(f"{var} is outside a point with dims ({self.n}, {len(self.y)})")
        return coords[var.index - 1]

    def __str__(self) -> str:
        xs = ",".join(map(str, self.x))
        ys = ",".join(map(str, self.y))
        return f"x=({xs}) y=({ys}) mod {self.field_order}"


def evaluate(f: Polynomial, pt: FieldPoint) -> int:
    p = pt.field_order
    total = 0
    for coeff, mono in f.terms:
        term = coeff
        for var, e in mono.powers:
            term = term * pow(pt[var], e, p) % p
        total += term
    return total % p


def _column(var: Variable, dims: tuple[int, int]) -> int:
    n, m = dims
    if var.axis == ROW:
        if var.index > n:
            raise DimensionMismatch(f"{var} does not fit dims {dims}")
        return var.index - 1
    if var.index > m:
        raise DimensionMismatch(f"{var} does not fit dims {dims}")
    return n + var.index - 1


class _Evaluator:
    """Vectorised evaluation of a generator list over blocks of points."""

    def __init__(self, gens: Sequence[Polynomial], p: int, dims: tuple[int, int]):
        self.p = p
        self.polys = []
        for f in gens:
            terms = []
            for coeff, mono in f.terms:
                factors = [
                    (_column(var, dims), np.array([pow(v, e, p) for v in range(p)], dtype=np.int64))
                    for var, e in mono.powers
                ]
                terms.append((coeff % p, factors))
            self.polys.append(terms)

    def zero_mask(self, points: np.ndarray) -> np.ndarray:
        """Boolean mask of rows where every generator vanishes."""
        mask = np.ones(len(points), dtype=bool)
        for terms in self.polys:
            acc = np.zeros(len(points), dtype=np.int64)
            for coeff, factors in terms:
                val = np.full(len(points), coeff, dtype=np.int64)
                for col, table in factors:
                    val = val * table[points[:, col]] % self.p
                acc += val
            mask &= acc % self.p == 0
        return mask


def _point_blocks(p: int, dims: tuple[int, int], budget: int):
    """Yield all points of ``F_p^(n+m)`` in lexicographic order, in chunks."""
    width = dims[0] + dims[1]
    total = p**width
    if total > budget:
        raise BudgetExceeded(f"{p}^{width} = {total} points exceeds the budget of {budget}")
    weights = p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        yield idx[:, None] // weights % p


def _to_point(row: np.ndarray, p: int, dims: tuple[int, int]) -> FieldPoint:
    return FieldPoint(tuple(row.tolist()), p, dims[0])


def variety(
    gens: Sequence[Polynomial], p: int, dims: tuple[int, int], budget: int = DEFAULT_BUDGET
) -> frozenset[FieldPoint]:
    """All points of ``F_p^(n+m)`` where every generator vanishes."""
    _check_field(p)
    ev = _Evaluator(gens, p, dims)
    found = set()
    for block in _point_blocks(p, dims, budget):
        for row in block[ev.zero_mask(block)]:
            found.add(_to_point(row, p, dims))
    return frozenset(found)


@dataclass(frozen=True)
class VarietyComparison:
    equal: bool
    counterexample: Optional[FieldPoint] = None
    points_checked: int = 0
    common_zeros: int = 0

    def __bool__(self) -> bool:
        return self.equal


def variety_equal(
    a: Sequence[Polynomial],
    b: Sequence[Polynomial],
    p: int,
    dims: tuple[int, int],
    budget: int = DEFAULT_BUDGET,
) -> VarietyComparison:
    """Compare zero sets; on mismatch report the lexicographically first differing point."""
    _check_field(p)
    ev_a, ev_b = _Evaluator(a, p, dims), _Evaluator(b, p, dims)
    checked = zeros = 0
    for block in _point_blocks(p, dims, budget):
        in_a, in_b = ev_a.zero_mask(block), ev_b.zero_mask(block)
        diff = np.flatnonzero(in_a != in_b)
        if diff.size:
            return VarietyComparison(False, _to_point(block[diff[0]], p, dims), checked + int(diff[0]) + 1, zeros)
        checked += len(block)
        zeros += int(in_a.sum())
    return VarietyComparison(True, None, checked, zeros)


@dataclass(frozen=True)
class MembershipComparison:
    equal: bool
    counterexample: Optional[Monomial] = None
    monomials_checked: int = 0

    def __bool__(self) -> bool:
        return self.equal


def squarefree_monomials(dims: tuple[int, int]):
    """All squarefree monomials over ``x_1..x_n, y_1..y_m``, by degree then variable sequence."""
    n, m = dims
    variables = [x(i) for i in range(1, n + 1)] + [y(j) for j in range(1, m + 1)]
    for size in range(len(variables) + 1):
        for combo in combinations(variables, size):
            yield Monomial.of(*combo)


def membership_equality(
    p: Partition, decomposition: Sequence[PrimeComponent], budget: int = DEFAULT_BUDGET
) -> MembershipComparison:
    """Check that ``I(G)`` and the intersection of ``decomposition`` hold the same squarefree monomials."""
    if 2 ** (p.n + p.m) > budget:
        raise BudgetExceeded(f"2^{p.n + p.m} monomials exceeds the budget of {budget}")
    checked = 0
    for mono in squarefree_monomials((p.n, p.m)):
        checked += 1
        in_ideal = monomial_in_edge_ideal(mono, p)
        in_all = all(monomial_in_component(mono, comp) for comp in decomposition)
        if in_ideal != in_all:
            return MembershipComparison(False, mono, checked)
    return MembershipComparison(True, None, checked)
