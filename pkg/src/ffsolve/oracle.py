"""Slow, independent references for the solver.

Nothing here imports the solver or the matrix kernels: entries are read out
of a :class:`~ffsolve.matrix.Mat` and everything else is plain loops over
domain elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError, SingularMinor, SingularReport
from .matrix import Mat
from .opcount import OpCounts, tally

__all__ = ["OracleResult", "bareiss_one_pass", "laplace_det", "substituted_minor", "surrounding_minor"]

LAPLACE_MAX = 7


@dataclass(frozen=True)
class OracleResult:
    delta_seq: tuple
    g: Mat


def bareiss_one_pass(a_ext: Mat, ctx: OpCounts | None = None) -> OracleResult:
    """One-pass fraction-free solve.

    Rows are brought in one at a time.  Row ``k`` is raised straight to order
    ``k+1`` by expanding against the already reduced rows (no division), and
    the earlier rows are then lifted from ``delta^k_{ij}`` to
    ``delta^{k+1}_{ij}``.  The very first lift uses the raw second row, a 2x2
    cofactor expansion; later lifts divide exactly by the previous pivot.
    """
    dom = a_ext.domain
    n, m = a_ext.shape
    if n < 1 or m < n:
        raise ShapeError(f"need an n x m matrix with m >= n >= 1, got {n}x{m}")
    raw = [list(a_ext.row(i)) for i in range(n)]
    # done[p][j] holds delta^k_{p+1, j+1} for j >= k once k rows are processed
    done: list[list] = []
    deltas = []
    delta = dom.one
    adds = muls = divs = 0
    for k in range(n):
        row = raw[k]
        if k == 0:
            new = list(row)
        else:
            new = [None] * m
            for j in range(k, m):
                acc = delta * row[j]
                for p in range(k):
                    acc = acc - row[p] * done[p][j]
                new[j] = acc
            muls += (k + 1) * (m - k)
            adds += k * (m - k)
        pivot = new[k]
        if dom.is_zero(pivot):
            raise SingularMinor(SingularReport(k + 1))
        for p in range(k):
            old = done[p]
            lifted = list(old)
            for j in range(k + 1, m):
                if k == 1:
                    lifted[j] = row[1] * old[j] - old[1] * row[j]
                else:
                    lifted[j] = dom.exact_div(pivot * old[j] - old[k] * new[j], delta)
            lifted[k] = dom.zero
            done[p] = lifted
            muls += 2 * (m - k - 1)
            adds += m - k - 1
            if k > 1:
                divs += m - k - 1
        done.append(new)
        deltas.append(pivot)
        delta = pivot
    tally(ctx, adds=adds, muls=muls, divs=divs)
    g = Mat([done[i][n:] for i in range(n)], dom, cols=m - n)
    return OracleResult(tuple(deltas), g)


def laplace_det(a: Mat):
    """Cofactor expansion along the first row (factorial cost)."""
    n = a.rows
    if a.cols != n:
        raise ShapeError(f"determinant of a non-square {a.shape} matrix")
    if n > LAPLACE_MAX:
        raise ShapeError(f"cofactor expansion limited to n <= {LAPLACE_MAX}, got {n}")
    return _laplace([list(r) for r in a], a.domain)


def _laplace(rows: list, dom):
    n = len(rows)
    if n == 0:
        return dom.one
    if n == 1:
        return rows[0][0]
    total = dom.zero
    for j, x in enumerate(rows[0]):
        if dom.is_zero(x):
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _laplace(minor, dom)
        total = total + term if j % 2 == 0 else total - term
    return total


def substituted_minor(a: Mat, k: int, i: int, j: int):
    """``delta^k_{ij}``: the leading ``k x k`` minor with column ``i`` replaced by column ``j`` (1-based)."""
    if not (1 <= k <= min(a.rows, a.cols) and 1 <= i <= k and 1 <= j <= a.cols):
        raise IndexError(f"substituted minor ({k}; {i}, {j}) out of range for {a.shape}")
    sub = [[a[r, j - 1] if c == i - 1 else a[r, c] for c in range(k)] for r in range(k)]
    return laplace_det(Mat(sub, a.domain, cols=k))


def surrounding_minor(a: Mat, p: int, i: int, j: int):
    """``a^p_{ij}``: leading ``(p-1) x (p-1)`` block bordered by row ``i`` and column ``j`` (1-based)."""
    if not (1 <= p <= min(a.rows, a.cols) and 1 <= i <= a.rows and 1 <= j <= a.cols):
        raise IndexError(f"surrounding minor ({p}; {i}, {j}) out of range for {a.shape}")
    rows = list(range(p - 1)) + [i - 1]
    cols = list(range(p - 1)) + [j - 1]
    sub = [[a[r, c] for c in cols] for r in rows]
    return laplace_det(Mat(sub, a.domain, cols=p))
