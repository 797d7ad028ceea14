"""Operation tallies.

One :class:`OpCounts` instance is the counter context for one run.  Every
arithmetic routine in the package takes it as an optional ``ctx`` argument
and adds to it; passing ``None`` disables counting.

Counting convention (the single place it is fixed):

* every addition or subtraction of two domain elements counts in ``adds``;
* every multiplication counts in ``muls``, whatever the operand values;
* exact divisions count in ``divs``, except divisions by the structural
  corner minor of order zero (which is the unit by definition).  Those are
  still performed and are tallied separately in ``unit_divs``.

The split is structural, decided by the caller, never by inspecting values,
so that counts depend only on shapes and the partition strategy.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class OpCounts:
    adds: int = 0
    muls: int = 0
    divs: int = 0
    unit_divs: int = 0

    def tally(self, adds: int = 0, muls: int = 0, divs: int = 0, unit_divs: int = 0) -> None:
        self.adds += adds
        self.muls += muls
        self.divs += divs
        self.unit_divs += unit_divs

    @property
    def md(self) -> int:
        """Multiplications plus counted divisions."""
        return self.muls + self.divs

    def __add__(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.adds, self.muls, self.divs)


def tally(ctx: OpCounts | None, **kw: int) -> None:
    if ctx is not None:
        ctx.tally(**kw)
