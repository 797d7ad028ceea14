"""Exact linear algebra over integral domains by recursive fraction-free block reduction.

Quick start::

    >>> from ffsolve import Mat, solve
    >>> sol = solve(Mat([[2, 1, 5], [1, 3, 5]]))
    >>> sol.delta_n, sol.solution()
    (5, [Fraction(2, 1), Fraction(1, 1)])
"""

from .errors import (
    DimensionMismatch,
    DomainError,
    FFSolveError,
    InexactDivision,
    NonzeroRemainder,
    ParseError,
    ShapeError,
    SingularMinor,
    SingularReport,
    StructurallySingular,
)
from .matrix import (
    CLASSICAL,
    Mat,
    MulBackend,
    block,
    hconcat,
    identity,
    mat_div_scalar,
    mat_mul,
    mat_scale,
    mat_sub,
    vconcat,
    zeros,
)
from .opcount import OpCounts
from .ring import ZZ, ZZ_t, Poly, domain_for
from .solver import (
    DICHOTOMOUS,
    FORWARD_BACK_UP,
    ONE_PASS,
    ParametricSolution,
    PartitionStrategy,
    ReduceResult,
    TraceEvent,
    adjugate,
    determinant,
    precondition_permute,
    reduce,
    solve,
    step2_eliminate,
    step4_backsubstitute,
)

__version__ = "0.1.0"
