"""Operation-count predictors and the complexity sweep.

Closed forms are evaluated in exact rational arithmetic and must come out
integral.  ``predict_tree`` walks the recursion symbolically (shapes only)
with the same partition rule and multiplication kernel the solver uses, so
it is exact for every size, not just powers of two.
"""

from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import IO, Callable, Iterable, Sequence

from .errors import DomainError, FFSolveError, SingularMinor
from .matrix import CLASSICAL, Mat, MulBackend
from .opcount import OpCounts
from .ring import ZZ, Domain
from .solver import DICHOTOMOUS, PartitionStrategy, precondition_permute, solve

__all__ = [
    "OpCounts",
    "PredictedCounts",
    "predict_classical",
    "predict_one_pass",
    "predict_strassen_md",
    "predict_tree",
    "mul_cost",
    "SweepRow",
    "sweep",
    "growth_exponent",
    "random_system",
    "CSV_COLUMNS",
]


@dataclass(frozen=True)
class PredictedCounts:
    a_nm: int
    m_nm: int
    d_nm: int
    md_strassen: int | None = None
    unit_divs: int | None = None

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a_nm, self.m_nm, self.d_nm)


def _log2_exact(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise DomainError(f"n must be a power of two, got {n}")
    return n.bit_length() - 1


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise AssertionError(f"{what} evaluated to non-integer {x}")
    return x.numerator


def predict_classical(n: int, m: int | None = None) -> PredictedCounts:
    """Additions, multiplications and divisions of the dichotomous solve.

    Valid for ``n = 2^p`` and ``m > n`` with classical products.  ``unit_divs``
    is the number of divisions by ``delta^0`` that the division count omits.
    """
    if m is None:
        m = n + 1
    p = _log2_exact(n)
    if m <= n:
        raise DomainError(f"need m > n, got n={n}, m={m}")
    adds = Fraction(6 * n * n * m - 4 * n**3 - 6 * n * m + 3 * n * n + n, 6)
    muls = Fraction(6 * n * n * m - 4 * n**3 + (6 * n * m - 3 * n * n) * p - 6 * n * m + 4 * n, 6)
    divs = Fraction((6 * n * m - 3 * n * n) * p - 6 * n * m - n * n + 6 * m + 3 * n - 2, 6)
    unit = Fraction(6 * n * m - 2 * n * n - 6 * m + 2, 6)
    md = predict_strassen_md(n) if m == n + 1 and n >= 2 else None
    return PredictedCounts(
        _integral(adds, "A_nm"),
        _integral(muls, "M_nm"),
        _integral(divs, "D_nm"),
        md,
        _integral(unit, "unit divisions"),
    )


def predict_one_pass(n: int) -> PredictedCounts:
    """Counts of the one-pass method for an ``n x (n+1)`` system (any ``n >= 1``)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    adds = Fraction(2 * n**3 + 3 * n * n - 5 * n, 6)
    muls = Fraction(n**3 + 2 * n * n - n - 2, 2)
    divs = Fraction(n**3 - 7 * n + 6, 6)
    return PredictedCounts(_integral(adds, "A^O"), _integral(muls, "M^O"), _integral(divs, "D^O"))


def predict_strassen_md(n: int) -> int:
    """Multiplications plus divisions with Strassen products, ``m = n + 1``, ``n = 2^p >= 2``.

    The count includes the divisions by ``delta^0``.
    """
    p = _log2_exact(n)
    if p < 1:
        raise DomainError("formula needs n >= 2")
    md = Fraction(7, 15) * 7**p + n * n * (p - Fraction(2, 3)) + n * (2 * p + Fraction(1, 5))
    return _integral(md, "MD^S")


@lru_cache(maxsize=None)
def _strassen_cost(l: int, n: int, c: int, cutoff: int) -> tuple[int, int]:
    """(adds, muls) of the Strassen kernel in :mod:`ffsolve.matrix` on shapes only."""
    if min(l, n, c) <= cutoff:
        return _classical_cost(l, n, c)
    if l % 2:
        a1, m1 = _strassen_cost(l - 1, n, c, cutoff)
        a2, m2 = _classical_cost(1, n, c)
        return a1 + a2, m1 + m2
    if c % 2:
        a1, m1 = _strassen_cost(l, n, c - 1, cutoff)
        a2, m2 = _classical_cost(l, n, 1)
        return a1 + a2, m1 + m2
    if n % 2:
        a1, m1 = _strassen_cost(l, n - 1, c, cutoff)
        return a1 + l * c, m1 + l * c
    hl, hn, hc = l // 2, n // 2, c // 2
    ra, rm = _strassen_cost(hl, hn, hc, cutoff)
    adds = 5 * hl * hn + 5 * hn * hc + 8 * hl * hc + 7 * ra
    return adds, 7 * rm


def _classical_cost(l: int, n: int, c: int) -> tuple[int, int]:
    return l * max(n - 1, 0) * c, l * n * c


def mul_cost(l: int, n: int, c: int, backend: MulBackend = CLASSICAL) -> tuple[int, int]:
    """(adds, muls) for an ``l x n`` by ``n x c`` product under ``backend``."""
    if l == 0 or c == 0:
        return 0, 0
    if backend.kind == "strassen":
        return _strassen_cost(l, n, c, backend.strassen_cutoff)
    return _classical_cost(l, n, c)


def predict_tree(
    n: int,
    m: int,
    strategy: PartitionStrategy = DICHOTOMOUS,
    backend: MulBackend = CLASSICAL,
) -> OpCounts:
    """Exact counts of ``solve`` on an ``n x m`` system, from shapes alone."""
    if n < 1 or m < n:
        raise DomainError(f"need m >= n >= 1, got n={n}, m={m}")
    out = OpCounts()

    def walk(k: int, r: int, w: int) -> None:
        if r == 1:
            return
        s = strategy.split(k, k + r)
        u, d = s - k, r - s + k
        walk(k, u, w)
        # step 2: scale, product, subtract, divide on a d x (w-u) block
        cells = d * (w - u)
        pa, pm = mul_cost(d, u, w - u, backend)
        out.tally(adds=pa + cells, muls=pm + cells)
        if k == 0:
            out.tally(unit_divs=cells)
        else:
            out.tally(divs=cells)
        walk(s, d, w - u)
        # step 4 on a u x (w-r) block
        cells = u * (w - r)
        pa, pm = mul_cost(u, d, w - r, backend)
        out.tally(adds=pa + cells, muls=pm + cells, divs=cells)

    walk(0, n, m)
    return out


def random_system(
    n: int,
    m: int,
    rng: random.Random,
    domain: Domain = ZZ,
    bound: int = 9,
    degree: int = 2,
    max_tries: int = 1000,
) -> Mat:
    """Random ``n x m`` matrix whose leading corner minors are all nonzero.

    Draws entries uniformly; a singular leading block is redrawn, otherwise the
    rows are reordered by :func:`~ffsolve.solver.precondition_permute`.
    """
    for _ in range(max_tries):
        a = Mat([[domain.random(rng, bound, degree) for _ in range(m)] for _ in range(n)], domain, cols=m)
        try:
            perm, _ = precondition_permute(a)
        except FFSolveError:
            continue
        return a.permute_rows(perm)
    raise RuntimeError(f"no nonsingular {n}x{m} draw in {max_tries} tries")


CSV_COLUMNS = (
    "size_n",
    "size_m",
    "strategy",
    "backend",
    "adds",
    "muls",
    "divs",
    "predicted_adds",
    "predicted_muls",
    "predicted_divs",
    "wall_ns",
)


@dataclass
class SweepRow:
    size_n: int
    size_m: int
    strategy: str
    backend: str
    counts: OpCounts | None
    predicted: OpCounts
    wall_ns: int | None
    error: str | None = None

    def as_csv(self) -> dict:
        c = self.counts
        return {
            "size_n": self.size_n,
            "size_m": self.size_m,
            "strategy": self.strategy,
            "backend": self.backend,
            "adds": "" if c is None else c.adds,
            "muls": "" if c is None else c.muls,
            "divs": "" if c is None else c.divs,
            "predicted_adds": self.predicted.adds,
            "predicted_muls": self.predicted.muls,
            "predicted_divs": self.predicted.divs,
            "wall_ns": "" if self.wall_ns is None else self.wall_ns,
        }


def _backend_label(backend: MulBackend) -> str:
    if backend.kind == "strassen":
        return f"strassen:{backend.strassen_cutoff}"
    return "classical"


def sweep(
    sizes: Sequence[int],
    strategy: PartitionStrategy = DICHOTOMOUS,
    backend: MulBackend = CLASSICAL,
    sink: IO[str] | str | None = None,
    *,
    extra_cols: int | Callable[[int], int] = 1,
    seed: int = 0,
    domain: Domain = ZZ,
) -> list[SweepRow]:
    """Instrumented solves over ascending ``sizes``, optionally written as CSV.

    ``extra_cols`` gives ``m - n`` (an int, or a function of ``n``).  A solver
    failure is recorded in the row's ``error`` and the sweep continues.
    """
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        m = n + (extra_cols(n) if callable(extra_cols) else extra_cols)
        predicted = predict_tree(n, m, strategy, backend)
        counts, wall, err = OpCounts(), None, None
        try:
            a = random_system(n, m, rng, domain)
            t0 = time.perf_counter_ns()
            solve(a, strategy, backend, counts)
            wall = time.perf_counter_ns() - t0
        except (SingularMinor, FFSolveError, RuntimeError) as exc:
            counts, err = None, f"{type(exc).__name__}: {exc}"
        rows.append(SweepRow(n, m, str(strategy), _backend_label(backend), counts, predicted, wall, err))
    if sink is not None:
        write_csv(rows, sink)
    return rows


def write_csv(rows: Iterable[SweepRow], sink: IO[str] | str) -> None:
    if isinstance(sink, str):
        with open(sink, "w", newline="") as fh:
            write_csv(rows, fh)
        return
    writer = csv.DictWriter(sink, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r.as_csv())


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def growth_exponent(n1: int, count1: int, n2: int, count2: int) -> float:
    """Fitted exponent ``log(count2 / count1) / log(n2 / n1)``; ``log2`` of the ratio when ``n2 = 2 n1``."""
    return math.log(count2 / count1) / math.log(n2 / n1)
