"""Exact scalars: rationals (``fractions.Fraction``) and the real quadratic ring Z[sqrt2].

Nothing in this package touches floating point for a decision.  The decimal
rendering in :func:`quad_to_decimal` is for display only.
"""

from __future__ import annotations

import decimal
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigRational = Fraction


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True, slots=True)
class QuadReal:
    """The real number ``a + b*sqrt(2)`` with integer ``a`` and ``b``."""

    a: int = 0
    b: int = 0

    def __add__(self, other):
        if isinstance(other, int):
            return QuadReal(self.a + other, self.b)
        if not isinstance(other, QuadReal):
            return NotImplemented
        return QuadReal(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadReal(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, int):
            return QuadReal(self.a - other, self.b)
        if not isinstance(other, QuadReal):
            return NotImplemented
        return QuadReal(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadReal(self.a * other, self.b * other)
        if not isinstance(other, QuadReal):
            return NotImplemented
        return QuadReal(self.a * other.a + 2 * self.b * other.b,
                        self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __lt__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return quad_cmp(self, other) < 0

    def __le__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return quad_cmp(self, other) <= 0

    def __gt__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return quad_cmp(self, other) > 0

    def __ge__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return quad_cmp(self, other) >= 0

    def __bool__(self):
        return bool(self.a or self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        return format_quad(self)


def _as_quad(x):
    if isinstance(x, QuadReal):
        return x
    if isinstance(x, int):
        return QuadReal(x, 0)
    return None


SQRT2 = QuadReal(0, 1)


def quad_sign(x: QuadReal) -> int:
    """Exact sign of ``a + b*sqrt2``."""
    sa, sb = _sign(x.a), _sign(x.b)
    if sa == 0:
        return sb
    if sb == 0 or sa == sb:
        return sa
    # opposite signs: the part with the larger square wins
    lhs, rhs = x.a * x.a, 2 * x.b * x.b
    if lhs > rhs:
        return sa
    # a^2 == 2 b^2 has no nonzero integer solution
    return sb


def quad_cmp(x: QuadReal, y: QuadReal) -> int:
    return quad_sign(QuadReal(x.a - y.a, x.b - y.b))


def rational_cmp(x: Fraction, y: Fraction) -> int:
    x, y = Fraction(x), Fraction(y)
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    return (lhs > rhs) - (lhs < rhs)


OrderScalar = Union[Fraction, int, QuadReal]


def scalar_sign(x: OrderScalar) -> int:
    if isinstance(x, QuadReal):
        return quad_sign(x)
    return _sign(x)


# -- text forms -------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats are refused."""
    s = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


_QUAD_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*sqrt\(?2\)?)?")


def parse_quad(text: str) -> QuadReal:
    """Parse ``"a+b*sqrt2"`` style literals (either part optional)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty quadratic literal")
    a = b = 0
    pos = 0
    while pos < len(s):
        m = _QUAD_TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"bad quadratic literal: {text!r}")
        sign, digits, root = m.groups()
        if not digits and not root:
            raise ValueError(f"bad quadratic literal: {text!r}")
        if pos > 0 and not sign:
            raise ValueError(f"bad quadratic literal: {text!r}")
        if root and digits and not root.startswith("*"):
            raise ValueError(f"bad quadratic literal: {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if root:
            b += coeff
        else:
            a += coeff
        pos = m.end()
    return QuadReal(a, b)


def parse_scalar(text: str) -> OrderScalar:
    if "sqrt" in text:
        return parse_quad(text)
    return parse_rational(text)


def format_quad(x: QuadReal) -> str:
    if x.b == 0:
        return str(x.a)
    if x.a == 0:
        return f"{x.b}*sqrt2"
    op = "+" if x.b > 0 else "-"
    return f"{x.a}{op}{abs(x.b)}*sqrt2"


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def quad_to_decimal(x: QuadReal, digits: int = 20) -> str:
    """Approximate decimal rendering, for display only."""
    ctx = decimal.Context(prec=digits + 10)
    val = ctx.add(decimal.Decimal(x.a), ctx.multiply(decimal.Decimal(x.b), ctx.sqrt(decimal.Decimal(2))))
    return format(val.quantize(decimal.Decimal(1).scaleb(-digits), context=ctx), "f")
