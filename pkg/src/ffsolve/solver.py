"""Recursive fraction-free block reduction.

Notation.  For an ``n x m`` extended matrix ``A``, the order-``p`` surrounding
minor ``a^p_{ij}`` is the determinant of the leading ``(p-1)x(p-1)`` block
bordered by row ``i`` and column ``j``; ``delta^p = a^p_{pp}`` is the corner
minor; ``delta^p_{ij}`` is ``delta^p`` with column ``i`` replaced by column
``j``.  A block "``A[k:c, r:l]`` of order ``p``" below means the matrix of
``a^p_{ij}`` for 1-based rows ``r+1..l`` and columns ``k+1..c``; the
integers ``k, s, l, c`` are counts, so the same values serve as 0-based
half-open bounds ``rows r..l-1, cols k..c-1``.

``reduce`` receives the block of order-``(k+1)`` minors spanning rows
``k..l-1`` and columns ``k..c-1`` together with ``delta^k`` and returns
``delta^l`` and the substituted minors ``delta^l_{ij}`` for rows ``k..l-1``,
columns ``l..c-1``.  At the top level ``k = 0``, ``delta^0 = 1``, and the
whole extended matrix is the input.

====================  ==========================  ======================
quantity              0-based in this module      1-based index range
====================  ==========================  ======================
upper block rows      ``k .. s-1``                ``k+1 .. s``
lower block rows      ``s .. l-1``                ``s+1 .. l``
Cramer numerators     columns ``l .. c-1``        ``l+1 .. c``
====================  ==========================  ======================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ShapeError, SingularMinor, SingularReport, StructurallySingular
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
)
from .opcount import OpCounts

__all__ = [
    "PartitionStrategy",
    "DICHOTOMOUS",
    "ONE_PASS",
    "FORWARD_BACK_UP",
    "ReduceResult",
    "ParametricSolution",
    "SingularReport",
    "TraceEvent",
    "reduce",
    "step2_eliminate",
    "step4_backsubstitute",
    "solve",
    "determinant",
    "adjugate",
    "precondition_permute",
]


@dataclass(frozen=True)
class PartitionStrategy:
    """How a block of rows ``k..l-1`` is split into upper and lower parts.

    ``split(k, l)`` returns ``s`` with ``k < s < l``.  The named kinds are

    * ``dichotomous``: upper part ``ceil((l-k)/2)`` rows;
    * ``onepass``: lower part is a single row;
    * ``forward``: upper part is a single row (forward and back-up procedures);
    * ``fixed``: a user function ``choose(k, l) -> s``.
    """

    kind: str = "dichotomous"
    choose: Callable[[int, int], int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("dichotomous", "onepass", "forward", "fixed"):
            raise ValueError(f"unknown partition kind {self.kind!r}")
        if self.kind == "fixed" and self.choose is None:
            raise ValueError("fixed strategy needs a choose(k, l) function")

    @classmethod
    def fixed(cls, choose: Callable[[int, int], int]) -> "PartitionStrategy":
        return cls("fixed", choose)

    @classmethod
    def fixed_upper(cls, rows: int) -> "PartitionStrategy":
        """Upper part of ``rows`` rows wherever possible (clamped to ``l-k-1``)."""
        if rows < 1:
            raise ValueError("upper block needs at least one row")
        return cls("fixed", lambda k, l: k + min(rows, l - k - 1))

    def split(self, k: int, l: int) -> int:
        if l - k < 2:
            raise ValueError(f"cannot split a block of {l - k} row(s)")
        if self.kind == "dichotomous":
            s = k + (l - k + 1) // 2
        elif self.kind == "onepass":
            s = l - 1
        elif self.kind == "forward":
            s = k + 1
        else:
            s = self.choose(k, l)
        if not k < s < l:
            raise ValueError(f"split {s} outside ({k}, {l})")
        return s

    def __str__(self) -> str:
        return self.kind


DICHOTOMOUS = PartitionStrategy("dichotomous")
ONE_PASS = PartitionStrategy("onepass")
FORWARD_BACK_UP = PartitionStrategy("forward")


@dataclass(frozen=True)
class ReduceResult:
    delta_l: object
    g_hat: Mat


@dataclass(frozen=True)
class TraceEvent:
    """One intermediate block produced during a reduction.

    ``kind`` is ``"reduce"`` (``block`` holds ``delta^l_{ij}``, rows ``k..l-1``,
    columns ``l..c-1``), ``"step2"`` (order-``(s+1)`` minors ``a^{s+1}_{ij}``,
    rows ``s..l-1``, columns ``s..c-1``) or ``"step4"`` (``delta^l_{ij}``, rows
    ``k..s-1``, columns ``l..c-1``).  ``delta`` is ``delta^l`` for reduce and
    step 4 and ``delta^s`` for step 2.
    """

    kind: str
    k: int
    s: int | None
    l: int
    c: int
    delta: object
    block: Mat


def step2_eliminate(
    a1_2: Mat,
    a2_2: Mat,
    g2_1: Mat,
    delta_s,
    delta_k,
    backend: MulBackend = CLASSICAL,
    ctx: OpCounts | None = None,
    *,
    unit: bool = False,
) -> Mat:
    """Advance the lower rows from order ``k+1`` to order ``s+1``.

    Computes ``(delta_s * A2_2 - A1_2 @ G2_1) / delta_k``; ``unit`` flags
    ``delta_k`` as the order-zero minor.
    """
    num = mat_sub(mat_scale(delta_s, a2_2, ctx), mat_mul(a1_2, g2_1, backend, ctx), ctx)
    return mat_div_scalar(num, delta_k, ctx, unit=unit)


def step4_backsubstitute(
    g2p_1: Mat,
    g2pp_1: Mat,
    g_hat_2pp_2: Mat,
    delta_l,
    delta_s,
    backend: MulBackend = CLASSICAL,
    ctx: OpCounts | None = None,
) -> Mat:
    """Lift the upper rows' substituted minors from order ``s`` to order ``l``.

    Computes ``(delta_l * G2''_1 - G2'_1 @ Ghat2''_2) / delta_s``.
    """
    num = mat_sub(mat_scale(delta_l, g2pp_1, ctx), mat_mul(g2p_1, g_hat_2pp_2, backend, ctx), ctx)
    return mat_div_scalar(num, delta_s, ctx)


def _reduce(a: Mat, delta_k, k: int, strategy, backend, ctx, trace) -> tuple[object, Mat]:
    r, w = a.shape
    dom = a.domain
    if r == 1:
        pivot = a[0, 0]
        if dom.is_zero(pivot):
            raise SingularMinor(SingularReport(k + 1))
        g = block(a, (0, 1), (1, w))
    else:
        s = strategy.split(k, k + r)
        u = s - k
        # step 1: upper rows
        delta_s, g2_1 = _reduce(block(a, (0, u), (0, w)), delta_k, k, strategy, backend, ctx, trace)
        # step 2: bring the lower rows to order s+1
        hat_a = step2_eliminate(
            block(a, (u, r), (0, u)),
            block(a, (u, r), (u, w)),
            g2_1,
            delta_s,
            delta_k,
            backend,
            ctx,
            unit=(k == 0),
        )
        if trace is not None:
            trace.append(TraceEvent("step2", k, s, k + r, k + w, delta_s, hat_a))
        # step 3: lower rows
        pivot, g_low = _reduce(hat_a, delta_s, s, strategy, backend, ctx, trace)
        # step 4: back-substitute into the upper rows
        d = r - u
        g_up = step4_backsubstitute(
            block(g2_1, (0, u), (0, d)),
            block(g2_1, (0, u), (d, w - u)),
            g_low,
            pivot,
            delta_s,
            backend,
            ctx,
        )
        if trace is not None:
            trace.append(TraceEvent("step4", k, s, k + r, k + w, pivot, g_up))
        g = vconcat(g_up, g_low)
    if trace is not None:
        trace.append(TraceEvent("reduce", k, None, k + r, k + w, pivot, g))
    return pivot, g


def reduce(
    a_tilde: Mat,
    delta_k=None,
    strategy: PartitionStrategy = DICHOTOMOUS,
    backend: MulBackend = CLASSICAL,
    ctx: OpCounts | None = None,
    *,
    k: int = 0,
    trace: list | None = None,
) -> ReduceResult:
    """Reduce a block of order-``(k+1)`` minors to ``(delta^l I, G_hat)``.

    ``delta_k`` defaults to the domain's one, which is only meaningful at
    ``k = 0``.  ``k`` locates the block in the ambient matrix; it is used for
    error reporting and to recognise divisions by ``delta^0``.  When ``trace``
    is a list, every intermediate block is appended to it as a
    :class:`TraceEvent`.
    """
    dom = a_tilde.domain
    if delta_k is None:
        delta_k = dom.one
    if a_tilde.rows < 1:
        raise ShapeError("reduce needs at least one row")
    if a_tilde.cols < a_tilde.rows:
        raise ShapeError(f"reduce needs cols >= rows, got {a_tilde.shape}")
    if dom.is_zero(delta_k):
        raise SingularMinor(SingularReport(k))
    if k == 0 and delta_k != dom.one:
        raise ValueError("at k = 0 the incoming minor is delta^0 = 1")
    pivot, g = _reduce(a_tilde, delta_k, k, strategy, backend, ctx, trace)
    return ReduceResult(pivot, g)


@dataclass(frozen=True)
class ParametricSolution:
    """Cramer-form solution of an ``n x m`` extended system.

    ``minors[j][p]`` is ``delta^n_{j+1, n+1+p}``: the last column holds the
    right-hand-side numerators and the others the coefficients of the free
    unknowns ``x_{n+1} .. x_{m-1}``.  Unknown ``j`` equals
    ``(minors[j][-1] - sum_p x_{n+1+p} minors[j][p]) / delta_n``.
    """

    n: int
    m: int
    delta_n: object
    minors: Mat
    permutation: tuple[int, ...] | None = None
    sign: int = 1

    @property
    def is_square(self) -> bool:
        return self.m == self.n + 1

    @property
    def n_free(self) -> int:
        return self.m - self.n - 1

    def numerators(self) -> tuple:
        return self.minors.col(self.minors.cols - 1)

    def evaluate(self, free: Sequence = ()) -> list[Fraction]:
        """Exact values of ``x_1 .. x_n`` for given free unknowns (integer domain)."""
        if len(free) != self.n_free:
            raise ValueError(f"expected {self.n_free} free values, got {len(free)}")
        out = []
        for j in range(self.n):
            row = self.minors.row(j)
            num = Fraction(row[-1]) - sum((Fraction(x) * row[p] for p, x in enumerate(free)), Fraction(0))
            out.append(num / self.delta_n)
        return out

    def solution(self) -> list[Fraction]:
        """Unique solution of a square integer system as reduced fractions."""
        if not self.is_square:
            raise ShapeError("system has free unknowns; use evaluate(free)")
        return self.evaluate(())


def precondition_permute(a_ext: Mat) -> tuple[tuple[int, ...], int]:
    """Find a row order under which every leading corner minor is nonzero.

    Runs fraction-free elimination with row pivoting on the leading square
    block.  Returns ``(perm, sign)`` where row ``i`` of the permuted matrix is
    row ``perm[i]`` of ``a_ext`` and ``sign`` is the permutation's parity.
    """
    n = a_ext.rows
    if a_ext.cols < n:
        raise ShapeError(f"need at least {n} columns, got {a_ext.cols}")
    dom = a_ext.domain
    work = [list(a_ext.row(i)[:n]) for i in range(n)]
    perm = list(range(n))
    sign = 1
    prev = dom.one
    rank = 0
    deficient = False
    for col in range(n):
        p = next((i for i in range(rank, n) if not dom.is_zero(work[i][col])), None)
        if p is None:
            deficient = True
            continue
        if p != rank:
            work[p], work[rank] = work[rank], work[p]
            perm[p], perm[rank] = perm[rank], perm[p]
            sign = -sign
        piv = work[rank][col]
        for i in range(rank + 1, n):
            wi = work[i]
            f = wi[col]
            for j in range(col + 1, n):
                wi[j] = dom.exact_div(piv * wi[j] - f * work[rank][j], prev)
            wi[col] = dom.zero
        prev = piv
        rank += 1
    if deficient:
        raise StructurallySingular(rank, n)
    return tuple(perm), sign


def _prepare(a: Mat, permute: bool):
    if not permute:
        return a, None, 1
    perm, sign = precondition_permute(a)
    return a.permute_rows(perm), perm, sign


def _reduce_with_report(a: Mat, strategy, backend, ctx, perm, sign, trace=None) -> ReduceResult:
    try:
        return reduce(a, None, strategy, backend, ctx, trace=trace)
    except SingularMinor as exc:
        if perm is not None:
            raise SingularMinor(SingularReport(exc.report.failing_order, (perm, sign))) from exc
        raise


def solve(
    a_ext: Mat,
    strategy: PartitionStrategy = DICHOTOMOUS,
    backend: MulBackend = CLASSICAL,
    ctx: OpCounts | None = None,
    *,
    permute: bool = False,
    trace: list | None = None,
) -> ParametricSolution:
    """Solve the system whose extended matrix is ``a_ext`` (``n x m``, ``m > n``)."""
    n, m = a_ext.shape
    if n < 1 or m <= n:
        raise ShapeError(f"extended matrix must be n x m with m > n >= 1, got {n}x{m}")
    a, perm, sign = _prepare(a_ext, permute)
    res = _reduce_with_report(a, strategy, backend, ctx, perm, sign, trace)
    return ParametricSolution(n, m, res.delta_l, res.g_hat, perm, sign)


def determinant(
    a: Mat,
    strategy: PartitionStrategy = DICHOTOMOUS,
    backend: MulBackend = CLASSICAL,
    ctx: OpCounts | None = None,
    *,
    permute: bool = False,
):
    n = a.rows
    if a.cols != n:
        raise ShapeError(f"determinant of a non-square {a.shape} matrix")
    if n == 0:
        return a.domain.one
    try:
        a, perm, sign = _prepare(a, permute)
    except StructurallySingular:
        return a.domain.zero
    res = _reduce_with_report(a, strategy, backend, ctx, perm, sign)
    return res.delta_l if sign == 1 else -res.delta_l


def adjugate(
    a: Mat,
    strategy: PartitionStrategy = DICHOTOMOUS,
    backend: MulBackend = CLASSICAL,
    ctx: OpCounts | None = None,
    *,
    permute: bool = False,
) -> Mat:
    """Adjugate of a nonsingular matrix, via ``(A | I) -> (det(A) I, adj(A))``.

    With ``permute`` the identity block is permuted along with ``A``, so the
    reduction yields ``sign * adj(A)`` and the sign is undone here.
    """
    n = a.rows
    if a.cols != n:
        raise ShapeError(f"adjugate of a non-square {a.shape} matrix")
    if n == 0:
        return a
    ext = hconcat(a, identity(n, a.domain))
    ext, perm, sign = _prepare(ext, permute)
    g = _reduce_with_report(ext, strategy, backend, ctx, perm, sign).g_hat
    if sign == -1:
        g = mat_scale(-a.domain.one, g)
    return g
