"""Integral domains used as matrix entries.

Two domains ship: the integers ``ZZ`` (plain Python ``int`` elements) and
``ZZ_t``, univariate polynomials with integer coefficients (:class:`Poly`
elements).  Elements are immutable values and support the usual ``+ - *``
operators; exact division, parsing and formatting go through the domain
object::

    >>> ZZ.exact_div(135, 5)
    27
    >>> p = ZZ_t.parse("[2,-3,1]")
    >>> ZZ_t.format(p * Poly((1, 1)))
    '[2,-1,-2,1]'

The counted entry points (``add``, ``sub``, ``mul``, ``exact_div``) take an
optional :class:`~ffsolve.opcount.OpCounts` context.
"""

from __future__ import annotations

import re
from typing import Iterable, Union

from .errors import NonzeroRemainder, ParseError
from .opcount import OpCounts, tally

__all__ = ["Poly", "Domain", "IntegerDomain", "PolynomialDomain", "ZZ", "ZZ_t", "domain_for", "DomainElement"]


class Poly:
    """Dense polynomial in ``t`` with integer coefficients, ascending degree.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return ZZ_t.format(self)

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return Poly((x,))
        return NotImplemented

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


DomainElement = Union[int, Poly]

_INT_RE = re.compile(r"[+-]?[0-9]+")


class Domain:
    """Common surface of the shipped integral domains."""

    kind: str
    zero: DomainElement
    one: DomainElement

    def from_int(self, value: int) -> DomainElement:
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def add(self, a, b, ctx: OpCounts | None = None):
        tally(ctx, adds=1)
        return a + b

    def sub(self, a, b, ctx: OpCounts | None = None):
        tally(ctx, adds=1)
        return a - b

    def mul(self, a, b, ctx: OpCounts | None = None):
        tally(ctx, muls=1)
        return a * b

    def exact_div(self, a, b, ctx: OpCounts | None = None, unit: bool = False):
        """Return ``q`` with ``q * b == a``; raise :class:`NonzeroRemainder` otherwise.

        ``unit=True`` marks a division by the structural order-zero minor:
        it is performed but tallied in ``unit_divs`` rather than ``divs``.
        """
        if unit:
            tally(ctx, unit_divs=1)
        else:
            tally(ctx, divs=1)
        return self._divide(a, b)

    def _divide(self, a, b):
        raise NotImplementedError

    def parse(self, text: str) -> DomainElement:
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def random(self, rng, bound: int = 9, degree: int = 2) -> DomainElement:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.kind}>"


class IntegerDomain(Domain):
    kind = "int"
    zero = 0
    one = 1

    def from_int(self, value: int) -> int:
        return int(value)

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool)

    def _divide(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("exact division by zero")
        q, r = divmod(a, b)
        if r:
            raise NonzeroRemainder(a, b, r)
        return q

    def parse(self, text: str) -> int:
        s = text.strip()
        if not s:
            raise ParseError("empty integer", position=0)
        m = _INT_RE.match(s)
        if m is None or m.end() != len(s):
            pos = 0 if m is None else m.end()
            raise ParseError(f"invalid integer {text!r}", position=pos)
        return int(s)

    def format(self, a: int) -> str:
        return str(a)

    def random(self, rng, bound: int = 9, degree: int = 2) -> int:
        return rng.randint(-bound, bound)


class PolynomialDomain(Domain):
    kind = "poly"
    zero = Poly()
    one = Poly((1,))

    def from_int(self, value: int) -> Poly:
        return Poly((value,))

    def contains(self, a) -> bool:
        return isinstance(a, Poly)

    def _divide(self, a: Poly, b: Poly) -> Poly:
        a, b = Poly._coerce(a), Poly._coerce(b)
        if not b:
            raise ZeroDivisionError("exact division by the zero polynomial")
        rem = list(a.coeffs)
        db, lb = b.degree, b.coeffs[-1]
        q = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            top = rem[shift + db]
            if top == 0:
                continue
            c, r = divmod(top, lb)
            if r:
                raise NonzeroRemainder(a, b, Poly(rem))
            q[shift] = c
            for i, y in enumerate(b.coeffs):
                rem[shift + i] -= c * y
        if any(rem):
            raise NonzeroRemainder(a, b, Poly(rem))
        return Poly(q)

    def parse(self, text: str) -> Poly:
        s = text.strip()
        if len(s) < 3 or s[0] != "[" or s[-1] != "]":
            raise ParseError(f"polynomial must look like [c0,c1,...], got {text!r}", position=0)
        coeffs = []
        pos = 1
        for part in s[1:-1].split(","):
            m = _INT_RE.fullmatch(part)
            if m is None:
                raise ParseError(f"invalid coefficient {part!r}", position=pos)
            coeffs.append(int(part))
            pos += len(part) + 1
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ParseError("trailing zero coefficient", position=len(s) - 2)
        return Poly(coeffs)

    def format(self, a: Poly) -> str:
        if not a.coeffs:
            return "[0]"
        return "[" + ",".join(str(c) for c in a.coeffs) + "]"

    def random(self, rng, bound: int = 9, degree: int = 2) -> Poly:
        return Poly(rng.randint(-bound, bound) for _ in range(degree + 1))


ZZ = IntegerDomain()
ZZ_t = PolynomialDomain()

_DOMAINS = {"int": ZZ, "poly": ZZ_t}


def domain_for(kind: str) -> Domain:
    try:
        return _DOMAINS[kind]
    except KeyError:
        raise ParseError(f"unknown domain {kind!r}; expected one of {sorted(_DOMAINS)}") from None


def add(a, b, domain: Domain, ctx: OpCounts | None = None):
    return domain.add(a, b, ctx)


def mul(a, b, domain: Domain, ctx: OpCounts | None = None):
    return domain.mul(a, b, ctx)


def exact_div(a, b, domain: Domain, ctx: OpCounts | None = None, unit: bool = False):
    return domain.exact_div(a, b, ctx, unit=unit)
