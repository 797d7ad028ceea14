"""Dense rectangular matrices over an integral domain.

:class:`Mat` is immutable: every operation returns a fresh matrix.  Zero-row
and zero-column matrices are valid and act as identities for concatenation,
which lets the solver treat empty column blocks uniformly.

Two multiplication backends are available through :class:`MulBackend`:
classical row-by-column products and Strassen's seven-product recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InexactDivision
from .opcount import OpCounts, tally
from .ring import ZZ, Domain

__all__ = [
    "Mat",
    "MulBackend",
    "CLASSICAL",
    "mat_mul",
    "mat_scale",
    "mat_sub",
    "mat_add",
    "mat_div_scalar",
    "block",
    "hconcat",
    "vconcat",
    "identity",
    "zeros",
]


class Mat:
    __slots__ = ("rows", "cols", "domain", "_data")

    def __init__(self, data: Sequence[Sequence], domain: Domain = ZZ, cols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionMismatch(f"row {i} has {len(r)} entries, expected {cols}")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "_data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_flat(cls, rows: int, cols: int, data: Sequence, domain: Domain = ZZ) -> "Mat":
        if len(data) != rows * cols:
            raise DimensionMismatch(f"{len(data)} entries for a {rows}x{cols} matrix")
        return cls([data[i * cols:(i + 1) * cols] for i in range(rows)], domain, cols=cols)

    @classmethod
    def from_ints(cls, data: Sequence[Sequence[int]], domain: Domain = ZZ) -> "Mat":
        return cls([[domain.from_int(x) for x in r] for r in data], domain)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def data(self) -> tuple:
        """Row-major flat tuple of entries."""
        return tuple(x for r in self._data for x in r)

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        return f"Mat({self.tolist()!r}, {self.domain!r})"

    def __str__(self) -> str:
        cells = [[self.domain.format(x) for x in r] for r in self._data]
        if not cells or not self.cols:
            return f"<empty {self.rows}x{self.cols}>"
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)

    @property
    def T(self) -> "Mat":
        return Mat([self.col(j) for j in range(self.cols)], self.domain, cols=self.rows)

    def permute_rows(self, perm: Sequence[int]) -> "Mat":
        """Row ``i`` of the result is row ``perm[i]`` of ``self``."""
        return Mat([self._data[p] for p in perm], self.domain, cols=self.cols)

    def scale_row(self, i: int, r) -> "Mat":
        data = [list(x) for x in self._data]
        data[i] = [r * x for x in data[i]]
        return Mat(data, self.domain, cols=self.cols)


def identity(n: int, domain: Domain = ZZ) -> Mat:
    z, o = domain.zero, domain.one
    return Mat([[o if i == j else z for j in range(n)] for i in range(n)], domain, cols=n)


def zeros(rows: int, cols: int, domain: Domain = ZZ) -> Mat:
    return Mat([[domain.zero] * cols for _ in range(rows)], domain, cols=cols)


@dataclass(frozen=True)
class MulBackend:
    """Multiplication algorithm selector.

    Strassen recurses while every one of the three product dimensions exceeds
    ``strassen_cutoff`` and falls back to the classical product otherwise.
    """

    kind: str = "classical"
    strassen_cutoff: int = 8

    def __post_init__(self):
        if self.kind not in ("classical", "strassen"):
            raise ValueError(f"unknown backend kind {self.kind!r}")
        if self.strassen_cutoff < 1:
            raise ValueError("strassen_cutoff must be >= 1")

    @classmethod
    def strassen(cls, cutoff: int = 8) -> "MulBackend":
        return cls("strassen", cutoff)


CLASSICAL = MulBackend()


# -- raw list-of-lists kernels; counts are accumulated in bulk ---------------

def _classical(a: list, b: list, l: int, n: int, c: int, zero, ctx) -> list:
    out = []
    for i in range(l):
        ai = a[i]
        row = []
        for j in range(c):
            if n == 0:
                row.append(zero)
                continue
            acc = ai[0] * b[0][j]
            for p in range(1, n):
                acc = acc + ai[p] * b[p][j]
            row.append(acc)
        out.append(row)
    tally(ctx, muls=l * n * c, adds=l * max(n - 1, 0) * c)
    return out


def _add(x: list, y: list, ctx) -> list:
    tally(ctx, adds=len(x) * (len(x[0]) if x else 0))
    return [[p + q for p, q in zip(r, s)] for r, s in zip(x, y)]


def _sub(x: list, y: list, ctx) -> list:
    tally(ctx, adds=len(x) * (len(x[0]) if x else 0))
    return [[p - q for p, q in zip(r, s)] for r, s in zip(x, y)]


def _split(x: list, r: int, c: int):
    return (
        [row[:c] for row in x[:r]],
        [row[c:] for row in x[:r]],
        [row[:c] for row in x[r:]],
        [row[c:] for row in x[r:]],
    )


def _strassen(a: list, b: list, l: int, n: int, c: int, cutoff: int, zero, ctx) -> list:
    if min(l, n, c) <= cutoff:
        return _classical(a, b, l, n, c, zero, ctx)
    # odd dimensions: peel the last row / inner index / column and fix up classically
    if l % 2:
        top = _strassen(a[:-1], b, l - 1, n, c, cutoff, zero, ctx)
        return top + _classical(a[-1:], b, 1, n, c, zero, ctx)
    if c % 2:
        left = _strassen(a, [r[:-1] for r in b], l, n, c - 1, cutoff, zero, ctx)
        right = _classical(a, [r[-1:] for r in b], l, n, 1, zero, ctx)
        return [x + y for x, y in zip(left, right)]
    if n % 2:
        core = _strassen([r[:-1] for r in a], b[:-1], l, n - 1, c, cutoff, zero, ctx)
        rank1 = _classical([r[-1:] for r in a], b[-1:], l, 1, c, zero, ctx)
        return _add(core, rank1, ctx)
    hl, hn, hc = l // 2, n // 2, c // 2
    a11, a12, a21, a22 = _split(a, hl, hn)
    b11, b12, b21, b22 = _split(b, hn, hc)

    def rec(x, y):
        return _strassen(x, y, hl, hn, hc, cutoff, zero, ctx)

    m1 = rec(_add(a11, a22, ctx), _add(b11, b22, ctx))
    m2 = rec(_add(a21, a22, ctx), b11)
    m3 = rec(a11, _sub(b12, b22, ctx))
    m4 = rec(a22, _sub(b21, b11, ctx))
    m5 = rec(_add(a11, a12, ctx), b22)
    m6 = rec(_sub(a21, a11, ctx), _add(b11, b12, ctx))
    m7 = rec(_sub(a12, a22, ctx), _add(b21, b22, ctx))
    c11 = _add(_sub(_add(m1, m4, ctx), m5, ctx), m7, ctx)
    c12 = _add(m3, m5, ctx)
    c21 = _add(m2, m4, ctx)
    c22 = _add(_add(_sub(m1, m2, ctx), m3, ctx), m6, ctx)
    return [x + y for x, y in zip(c11, c12)] + [x + y for x, y in zip(c21, c22)]


def _check_domain(a: Mat, b: Mat) -> None:
    if a.domain is not b.domain:
        raise DimensionMismatch(f"mixed domains {a.domain!r} and {b.domain!r}")


def mat_mul(a: Mat, b: Mat, backend: MulBackend = CLASSICAL, ctx: OpCounts | None = None) -> Mat:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    _check_domain(a, b)
    l, n, c = a.rows, a.cols, b.cols
    if l == 0 or c == 0:
        return Mat([[]] * l if c == 0 else [], a.domain, cols=c)
    x, y = [list(r) for r in a._data], [list(r) for r in b._data]
    zero = a.domain.zero
    if backend.kind == "strassen":
        out = _strassen(x, y, l, n, c, backend.strassen_cutoff, zero, ctx)
    else:
        out = _classical(x, y, l, n, c, zero, ctx)
    return Mat(out, a.domain, cols=c)


def mat_scale(s, a: Mat, ctx: OpCounts | None = None) -> Mat:
    tally(ctx, muls=a.rows * a.cols)
    return Mat([[s * x for x in r] for r in a._data], a.domain, cols=a.cols)


def mat_sub(a: Mat, b: Mat, ctx: OpCounts | None = None) -> Mat:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot subtract {b.shape} from {a.shape}")
    _check_domain(a, b)
    tally(ctx, adds=a.rows * a.cols)
    return Mat([[p - q for p, q in zip(r, s)] for r, s in zip(a._data, b._data)], a.domain, cols=a.cols)


def mat_add(a: Mat, b: Mat, ctx: OpCounts | None = None) -> Mat:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {b.shape} to {a.shape}")
    _check_domain(a, b)
    tally(ctx, adds=a.rows * a.cols)
    return Mat([[p + q for p, q in zip(r, s)] for r, s in zip(a._data, b._data)], a.domain, cols=a.cols)


def mat_div_scalar(a: Mat, d, ctx: OpCounts | None = None, unit: bool = False) -> Mat:
    """Entrywise exact quotient ``a / d``.

    ``unit=True`` marks ``d`` as the structural order-zero minor; see
    :mod:`ffsolve.opcount` for how that is tallied.
    """
    dom = a.domain
    out = []
    for i, r in enumerate(a._data):
        row = []
        for j, x in enumerate(r):
            try:
                row.append(dom.exact_div(x, d, ctx, unit=unit))
            except InexactDivision as exc:
                exc.where = (i, j)
                exc.args = (f"{exc.args[0]} at entry {(i, j)}",)
                raise
        out.append(row)
    return Mat(out, dom, cols=a.cols)


def block(a: Mat, row_range: range | slice | tuple, col_range: range | slice | tuple) -> Mat:
    """Copy out the sub-block ``a[row_range, col_range]`` (half-open ranges)."""
    r0, r1 = _bounds(row_range, a.rows)
    c0, c1 = _bounds(col_range, a.cols)
    return Mat([r[c0:c1] for r in a._data[r0:r1]], a.domain, cols=c1 - c0)


def _bounds(rng, size: int) -> tuple[int, int]:
    if isinstance(rng, slice):
        start, stop, step = rng.indices(size)
        if step != 1:
            raise ValueError("blocks must be contiguous")
        return start, max(start, stop)
    if isinstance(rng, range):
        if rng.step != 1:
            raise ValueError("blocks must be contiguous")
        start, stop = rng.start, rng.stop
    else:
        start, stop = rng
    if not 0 <= start <= stop <= size:
        raise DimensionMismatch(f"range [{start}, {stop}) outside 0..{size}")
    return start, stop


def hconcat(*parts: Mat) -> Mat:
    if not parts:
        raise DimensionMismatch("hconcat needs at least one part")
    rows = parts[0].rows
    for p in parts:
        if p.rows != rows:
            raise DimensionMismatch(f"hconcat of {rows}-row and {p.rows}-row blocks")
    data = [sum((p._data[i] for p in parts), ()) for i in range(rows)]
    return Mat(data, parts[0].domain, cols=sum(p.cols for p in parts))


def vconcat(*parts: Mat) -> Mat:
    if not parts:
        raise DimensionMismatch("vconcat needs at least one part")
    cols = parts[0].cols
    for p in parts:
        if p.cols != cols:
            raise DimensionMismatch(f"vconcat of {cols}-column and {p.cols}-column blocks")
    return Mat([r for p in parts for r in p._data], parts[0].domain, cols=cols)


def as_mat(data: Iterable, domain: Domain = ZZ) -> Mat:
    if isinstance(data, Mat):
        return data
    return Mat(data, domain)
