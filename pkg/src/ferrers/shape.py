"""Partitions and their Ferrers diagrams.

All indices are 1-based: row ``r`` runs over ``1..n`` and column ``s`` over
``1..lambda_r``.  Diagonal ``i`` is the set of cells with ``r + s = i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

MAX_PART = 2**31 - 1
MAX_SIZE = 2**63 - 1


class PartitionError(ValueError):
    """Base class for rejected partition input."""


class EmptyInput(PartitionError):
    pass


class NonPositivePart(PartitionError):
    pass


class NotWeaklyDecreasing(PartitionError):
    pass


class MalformedToken(PartitionError):
    pass


class PartOutOfRange(PartitionError):
    """A part exceeds 32 bits or the total cell count exceeds 64 bits."""


class IndexOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise EmptyInput("a partition needs at least one part")
        for j, part in enumerate(parts, start=1):
            if isinstance(part, bool) or not isinstance(part, int):
                raise MalformedToken(f"part {j} is not an integer: {part!r}")
            if part < 1:
                raise NonPositivePart(f"part {j} is {part}; parts must be >= 1")
            if part > MAX_PART:
                raise PartOutOfRange(f"part {j} = {part} exceeds {MAX_PART}")
        for j in range(1, len(parts)):
            if parts[j] > parts[j - 1]:
                raise NotWeaklyDecreasing(
                    f"part {j + 1} = {parts[j]} exceeds part {j} = {parts[j - 1]}"
                )
        if sum(parts) > MAX_SIZE:
            raise PartOutOfRange("total number of cells exceeds 64 bits")

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return self.parts[0]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, j: int) -> int:
        """``lambda_j`` for ``1 <= j <= n + 1``, with ``lambda_{n+1} = 0``."""
        if j == self.n + 1:
            return 0
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(f"row {j} outside 1..{self.n + 1}")
        return self.parts[j - 1]

    def __contains__(self, cell: object) -> bool:
        r, s = cell  # type: ignore[misc]
        return 1 <= r <= self.n and 1 <= s <= self.parts[r - 1]

    def cells(self) -> list[Cell]:
        return [Cell(r, s) for r, row in enumerate(self.parts, 1) for s in range(1, row + 1)]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def diagonal(self) -> int:
        return self.row + self.col - 1


@dataclass(frozen=True)
class CornerProfile:
    """Rows ``c_1 < ... < c_k`` where the part value strictly drops.

    ``sentinel`` is ``c_{k+1} = n + 1``.
    """

    k: int
    corners: tuple[int, ...]
    sentinel: int

    @property
    def extended(self) -> tuple[int, ...]:
        return self.corners + (self.sentinel,)


def parse_partition(text: str) -> Partition:
    """Parse ``"6, 4,4,2,1"`` into a :class:`Partition`."""
    if text is None or not text.strip():
        raise EmptyInput("empty partition string")
    parts = []
    for token in text.split(","):
        token = token.strip()
        # int() alone would accept "1_000" and "+3"
        body = token[1:] if token[:1] == "-" else token
        if not body or not body.isascii() or not body.isdigit():
            raise MalformedToken(f"not a decimal integer: {token!r}")
        parts.append(int(token))
    return Partition(tuple(parts))


def mu(p: Partition) -> int:
    return max(part + j - 1 for j, part in enumerate(p.parts, start=1))


def diagonal_cells(p: Partition, i: int) -> list[Cell]:
    """Cells on ascending diagonal ``i`` ordered by increasing row."""
    if not 1 <= i <= mu(p):
        raise IndexOutOfRange(f"diagonal {i} outside 1..{mu(p)}")
    return [
        Cell(r, i + 1 - r)
        for r in range(1, min(i, p.n) + 1)
        if i + 1 - r <= p.parts[r - 1]
    ]


def outer_corners(p: Partition) -> CornerProfile:
    corners = [1] + [j for j in range(2, p.n + 1) if p.part(j) < p.part(j - 1)]
    return CornerProfile(k=len(corners), corners=tuple(corners), sentinel=p.n + 1)


def is_staircase(p: Partition) -> bool:
    return p.n == p.m and all(part == p.m - i for i, part in enumerate(p.parts))


def partitions_in_box(max_rows: int, max_cols: int):
    """Yield every partition with at most ``max_rows`` parts, each at most ``max_cols``."""

    def extend(prefix: list[int], cap: int):
        if prefix:
            yield Partition(tuple(prefix))
        if len(prefix) == max_rows:
            return
        for part in range(1, cap + 1):
            prefix.append(part)
            yield from extend(prefix, part)
            prefix.pop()

    yield from extend([], max_cols)


def partitions_with_perimeter(max_total: int):
    """Yield every partition with ``n + m <= max_total``."""
    for p in partitions_in_box(max_total - 1, max_total - 1):
        if p.n + p.m <= max_total:
            yield p
