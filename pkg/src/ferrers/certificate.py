"""Schmitt-Vogel certificates.

A certificate is a set ``P`` of ring elements (here monomials) split into
ordered blocks ``P_1..P_r`` with exponents ``e(p) >= 1``.  If

  (i)   the blocks cover ``P``,
  (ii)  ``P_1`` is a single element, and
  (iii) for every pair ``p != p'`` inside a block ``P_i`` with ``i > 1``
        some element of an earlier block divides ``p * p'``,

then ``P`` and the block sums ``q_i = sum(p ** e(p) for p in P_i)`` generate
ideals with the same radical.  :func:`verify_sv` checks the three
conditions and records evidence for every pair it looked at.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional

from ferrers.ideal import Monomial, Polynomial, edge_generators, edge_monomial
from ferrers.shape import Partition, diagonal_cells, mu

log = logging.getLogger(__name__)

# supports larger than this fall back to a linear scan for dividers
_SUBSET_LOOKUP_LIMIT = 10


class MalformedCertificate(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SVCertificate:
    ground: frozenset[Monomial]
    blocks: tuple[tuple[Monomial, ...], ...]
    exponents: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        exps = {mono: 1 for mono in self.ground}
        exps.update(self.exponents)
        for mono, e in exps.items():
            if e < 1:
                raise MalformedCertificate(f"exponent {e} < 1 for {mono}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_blocks(
        cls,
        blocks: Iterable[Iterable[Monomial]],
        exponents: Optional[Mapping[Monomial, int]] = None,
        ground: Optional[Iterable[Monomial]] = None,
    ) -> SVCertificate:
        """Build a certificate whose ground set defaults to the union of the blocks."""
        blocks = tuple(tuple(b) for b in blocks)
        if ground is None:
            ground = [mono for block in blocks for mono in block]
        return cls(frozenset(ground), blocks, dict(exponents or {}))

    @property
    def r(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class PairWitness:
    block: int
    p: Monomial
    p_prime: Monomial
    divider: Monomial
    divider_block: int


@dataclass(frozen=True)
class PairFailure:
    block: int
    p: Monomial
    p_prime: Monomial


@dataclass
class VerificationReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    witnesses: list[PairWitness] = field(default_factory=list)
    failures: list[PairFailure] = field(default_factory=list)
    uncovered: list[Monomial] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii

    def __bool__(self) -> bool:
        return self.passed


def diagonal_certificate(p: Partition) -> SVCertificate:
    """Blocks are the ascending diagonals ``r + s = i + 1`` for ``i = 1..mu``."""
    blocks = tuple(
        tuple(edge_monomial(c.row, c.col) for c in diagonal_cells(p, i))
        for i in range(1, mu(p) + 1)
    )
    return SVCertificate(frozenset(edge_generators(p)), blocks, {})


def _block_index(cert: SVCertificate) -> dict[Monomial, int]:
    where: dict[Monomial, int] = {}
    for i, block in enumerate(cert.blocks, start=1):
        for mono in block:
            if mono in where:
                raise MalformedCertificate(
                    f"{mono} appears in blocks {where[mono]} and {i}"
                )
            if mono not in cert.ground:
                raise MalformedCertificate(f"{mono} in block {i} is not in the ground set")
            where[mono] = i
    return where


class _DividerIndex:
    """Finds the first (block order, then position) element dividing a product."""

    def __init__(self, blocks: tuple[tuple[Monomial, ...], ...]):
        # keyed by the sorted variable tuple, which combinations() reproduces
        self.by_support: dict[tuple, list[tuple[int, int, Monomial]]] = {}
        self.ordered: list[tuple[int, int, Monomial]] = []
        for i, block in enumerate(blocks, start=1):
            for pos, mono in enumerate(block):
                entry = (i, pos, mono)
                self.ordered.append(entry)
                self.by_support.setdefault(mono.variables, []).append(entry)

    def first_divider(
        self, a: Monomial, b: Monomial, before: int
    ) -> Optional[tuple[int, Monomial]]:
        """First element of a block ``< before`` dividing ``a * b``."""
        ea, eb = a.exponents, b.exponents
        product = {v: ea.get(v, 0) + eb.get(v, 0) for v in ea.keys() | eb.keys()}

        def divides(mono: Monomial) -> bool:
            return all(product.get(v, 0) >= e for v, e in mono.powers)

        best = None
        support = sorted(product)
        if len(support) <= _SUBSET_LOOKUP_LIMIT:
            for size in range(len(support) + 1):
                for subset in combinations(support, size):
                    for entry in self.by_support.get(subset, ()):
                        if entry[0] >= before or (best is not None and entry > best):
                            break
                        if divides(entry[2]):
                            best = entry
                            break
        else:
            for entry in self.ordered:
                if entry[0] >= before:
                    break
                if divides(entry[2]):
                    best = entry
                    break
        return None if best is None else (best[0], best[2])


def verify_sv(cert: SVCertificate, fast: bool = False) -> VerificationReport:
    """Check conditions (i)-(iii).

    Every pair is examined unless ``fast`` is set, in which case the check
    stops at the first failing condition.
    """
    placed = _block_index(cert)
    uncovered = sorted(cert.ground - placed.keys())
    report = VerificationReport(
        cond_i=not uncovered,
        cond_ii=bool(cert.blocks) and len(cert.blocks[0]) == 1,
        cond_iii=True,
        uncovered=uncovered,
    )
    for i, block in enumerate(cert.blocks, start=1):
        if not block:
            report.warnings.append(f"block {i} is empty")
    if fast and not (report.cond_i and report.cond_ii):
        return report

    index = _DividerIndex(cert.blocks)
    for i, block in enumerate(cert.blocks[1:], start=2):
        for a, b in combinations(block, 2):
            found = index.first_divider(a, b, before=i)
            if found is None:
                report.cond_iii = False
                report.failures.append(PairFailure(i, a, b))
                log.debug("block %d: no earlier divider of %s * %s", i, a, b)
                if fast:
                    return report
            else:
                report.witnesses.append(PairWitness(i, a, b, found[1], found[0]))
    return report


def sv_sums(cert: SVCertificate) -> list[Polynomial]:
    """The block sums ``q_i = sum of p ** e(p)`` over ``p`` in block ``i``."""
    return [Polynomial.sum_of(mono ** cert.exponents.get(mono, 1) for mono in block) for block in cert.blocks]
