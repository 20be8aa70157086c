"""Edge ideals of Ferrers graphs.

For a partition ``lambda`` the Ferrers graph joins ``x_i`` to ``y_j`` when
``j <= lambda_i``.  This package builds its edge ideal, the diagonal sums
that generate it up to radical together with a checkable Schmitt-Vogel
certificate, the minimal primes, and the invariants ara, pd, cd and height.
"""

from ferrers.certificate import (
    MalformedCertificate,
    SVCertificate,
    VerificationReport,
    diagonal_certificate,
    sv_sums,
    verify_sv,
)
from ferrers.ideal import (
    Monomial,
    Polynomial,
    PrimeComponent,
    Variable,
    edge_generators,
    full_decomposition,
    minimal_decomposition,
    monomial_in_component,
    monomial_in_edge_ideal,
    parse_monomial,
    parse_polynomial,
    x,
    y,
)
from ferrers.invariants import (
    InternalInconsistency,
    InvariantReport,
    ara,
    cd,
    height,
    invariant_report,
    is_stci,
    pd,
)
from ferrers.oracle import (
    BudgetExceeded,
    DimensionMismatch,
    FieldPoint,
    evaluate,
    membership_equality,
    variety,
    variety_equal,
)
from ferrers.shape import (
    Cell,
    CornerProfile,
    Partition,
    PartitionError,
    diagonal_cells,
    is_staircase,
    mu,
    outer_corners,
    parse_partition,
)

__version__ = "0.1.0"
