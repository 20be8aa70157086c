"""Arithmetical rank, projective/cohomological dimension and height.

For a Ferrers ideal the first three coincide with ``mu = max(lambda_j + j - 1)``,
the number of ascending diagonals.  The height is the smallest number of
variables among the minimal primes.  The ideal is a set-theoretic complete
intersection exactly when ``lambda`` is a staircase ``(m, m-1, ..., 1)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ferrers.ideal import edge_generators, minimal_decomposition
from ferrers.shape import Partition, is_staircase, mu, outer_corners


class InternalInconsistency(RuntimeError):
    """Two computations that must agree by theorem did not."""


@dataclass(frozen=True)
class InvariantReport:
    lam: Partition
    mu: int
    ara: int
    pd: int
    cd: int
    height: int
    k: int
    corners: tuple[int, ...]
    is_stci: bool
    generator_count: int

    def to_dict(self) -> dict:
        out = asdict(self)
        out["lam"] = list(self.lam.parts)
        out["corners"] = list(self.corners)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> InvariantReport:
        fields = dict(data)
        fields["lam"] = Partition(tuple(fields["lam"]))
        fields["corners"] = tuple(fields["corners"])
        return cls(**fields)


def ara(p: Partition) -> int:
    return mu(p)


def pd(p: Partition) -> int:
    return mu(p)


def cd(p: Partition) -> int:
    # equals pd for squarefree monomial ideals, independent of the field here
    return pd(p)


def height(p: Partition) -> int:
    return min(comp.height for comp in minimal_decomposition(p))


def is_stci(p: Partition) -> bool:
    return is_staircase(p)


def invariant_report(p: Partition) -> InvariantReport:
    profile = outer_corners(p)
    report = InvariantReport(
        lam=p,
        mu=mu(p),
        ara=ara(p),
        pd=pd(p),
        cd=cd(p),
        height=height(p),
        k=profile.k,
        corners=profile.corners,
        is_stci=is_stci(p),
        generator_count=len(edge_generators(p)),
    )
    if not report.ara == report.pd == report.cd == report.mu:
        raise InternalInconsistency(f"{p}: ara/pd/cd/mu disagree in {report}")
    if report.height > report.ara:
        raise InternalInconsistency(f"{p}: height {report.height} exceeds ara {report.ara}")
    if report.is_stci != (report.height == report.ara):
        raise InternalInconsistency(
            f"{p}: staircase test says {report.is_stci} but height={report.height}, ara={report.ara}"
        )
    return report
