"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from dataclasses import dataclass


class FFSolveError(Exception):
    """Base class for all package errors."""


class ParseError(FFSolveError, ValueError):
    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"column {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class DimensionMismatch(FFSolveError, ValueError):
    pass


class ShapeError(FFSolveError, ValueError):
    pass


class DomainError(FFSolveError, ValueError):
    """An argument lies outside the regime where a formula is defined."""


class InexactDivision(FFSolveError, ArithmeticError):
    """A division that must be exact left a remainder.

    Either the operands are not genuine minors of a common matrix or there is
    a bug upstream.  ``where`` carries matrix coordinates when known.
    """

    def __init__(self, dividend, divisor, where: tuple[int, int] | None = None, remainder=None):
        self.dividend = dividend
        self.divisor = divisor
        self.where = where
        self.remainder = remainder
        msg = f"{dividend!s} is not divisible by {divisor!s}"
        if where is not None:
            msg += f" at entry {where}"
        super().__init__(msg)


class NonzeroRemainder(InexactDivision):
    def __init__(self, dividend, divisor, remainder, where=None):
        super().__init__(dividend, divisor, where=where, remainder=remainder)
        self.args = (f"{self.args[0]} (remainder {remainder!s})",)


@dataclass(frozen=True)
class SingularReport:
    """Where the reduction stopped: ``failing_order`` is the ``k`` with ``delta^k = 0``."""

    failing_order: int
    permutation_applied: tuple[tuple[int, ...], int] | None = None

    def __post_init__(self):
        if self.permutation_applied is not None and self.permutation_applied[1] not in (1, -1):
            raise ValueError("permutation sign must be +1 or -1")


class SingularMinor(FFSolveError, ArithmeticError):
    """A corner minor that the reduction pivots on is zero."""

    def __init__(self, report: SingularReport):
        self.report = report
        super().__init__(
            f"corner minor of order {report.failing_order} is zero; "
            "retry with row preconditioning (permute=True / --permute)"
        )


class StructurallySingular(FFSolveError, ArithmeticError):
    """The leading square block has rank below its order under every row order."""

    def __init__(self, rank: int, order: int):
        self.rank = rank
        self.order = order
        super().__init__(f"leading {order}x{order} block has rank {rank} < {order}")
