"""Strongly discrete coefficient rings.

A ring object owns the arithmetic of its elements; elements themselves are
plain values (``int``, ``Fraction`` or :class:`VElement`).  Membership in a
finitely generated ideal of any of the shipped rings reduces to divisibility
by one generator (valuation rings) or by a gcd (Z, Q), so ``divides`` is the
membership test the rest of the package relies on.

Shipped rings
-------------
``Q``          the rationals
``Z``          the integers (a Bezout domain of Krull dimension 1)
``Zp:p``       Z localized at the prime ideal pZ
``Zmod:p^a``   Z/p^a Z, a valuation ring with zero divisors
``Vsqrt2``     a valuation domain with value group Z + Z*sqrt2
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Any, Iterable

from .scalars import QuadReal, format_quad, format_rational, quad_cmp


class RingError(ValueError):
    pass


class NotDivisibleError(RingError):
    pass


class _Infinity:
    """Valuation of zero; compares above every finite valuation."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INF"


INF = _Infinity()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def padic_val(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class CoeffRing:
    """Base class: subclasses implement the element arithmetic."""

    descriptor: str = "?"
    is_domain = True
    is_field = False
    is_valuation_ring = False

    # -- arithmetic over raw payloads --
    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        raise NotImplementedError

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def pow(self, x, n: int):
        r = self.one()
        for _ in range(n):
            r = self.mul(r, x)
        return r

    def is_zero(self, x) -> bool:
        return x == 0

    def eq(self, x, y) -> bool:
        return x == y

    def is_one(self, x) -> bool:
        return self.eq(x, self.one())

    # -- divisibility --
    def divides(self, x, y) -> bool:
        raise NotImplementedError

    def exact_div(self, x, y):
        """Return ``c`` with ``x == y*c``."""
        raise NotImplementedError

    def valuation(self, x):
        raise RingError(f"ring {self.descriptor} has no valuation")

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        if not self.is_unit(x):
            raise NotDivisibleError(f"{self.format(x)} is not a unit")
        return self.exact_div(self.one(), x)

    def gcd(self, x, y):
        raise NotImplementedError

    def associate_units(self, x, y) -> list:
        """All units ``u`` with ``x == u*y`` (empty if not associates).

        For domains this is at most one element; rings with zero divisors
        may have several.
        """
        if self.is_zero(y):
            return [self.one()] if self.is_zero(x) else []
        if not self.divides(y, x):
            return []
        u = self.exact_div(x, y)
        return [u] if self.is_unit(u) else []

    def assoc_key(self, x):
        """Hashable invariant shared by associate elements."""
        return 0 if self.is_zero(x) else 1

    def arithmetical_witness(self, x, y):
        """``(t, a, b)`` with ``(1-t)x = a*y`` and ``b*x = t*y``."""
        if not (self.is_valuation_ring or self.is_field):
            raise RingError(f"no arithmetical witness convention for {self.descriptor}")
        if self.is_zero(x):
            if self.is_zero(y):
                return self.one(), self.zero(), self.zero()
            return self.zero(), self.zero(), self.zero()
        if self.divides(x, y):
            return self.one(), self.zero(), self.exact_div(y, x)
        return self.zero(), self.exact_div(x, y), self.zero()

    # -- text --
    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        from .parsing import parse_ring_element
        return parse_ring_element(self, text)

    def atom(self, name: str, exponent: str | None):
        """Ring-specific named constants in the polynomial grammar."""
        return None

    def random_element(self, rng: random.Random, max_val: int = 4, nonzero: bool = False):
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.descriptor}>"


@dataclass(frozen=True, repr=False)
class RationalField(CoeffRing):
    descriptor = "Q"
    is_field = True

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def divides(self, x, y):
        return x != 0 or y == 0

    def exact_div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(x) / y

    def is_unit(self, x):
        return x != 0

    def gcd(self, x, y):
        return Fraction(0) if x == 0 and y == 0 else Fraction(1)

    def assoc_key(self, x):
        return 0 if x == 0 else 1

    def format(self, x):
        return format_rational(x)

    def random_element(self, rng, max_val=4, nonzero=False):
        while True:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if x or not nonzero:
                return x


@dataclass(frozen=True, repr=False)
class Integers(CoeffRing):
    descriptor = "Z"

    def from_int(self, n):
        return int(n)

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator != 1:
            raise NotDivisibleError(f"{q} is not an integer")
        return q.numerator

    def divides(self, x, y):
        if x == 0:
            return y == 0
        return y % x == 0

    def exact_div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero")
        if x % y:
            raise NotDivisibleError(f"{y} does not divide {x}")
        return x // y

    def is_unit(self, x):
        return x in (1, -1)

    def gcd(self, x, y):
        return math.gcd(x, y)

    def assoc_key(self, x):
        return abs(x)

    def random_element(self, rng, max_val=4, nonzero=False):
        while True:
            x = rng.randint(-20, 20)
            if x or not nonzero:
                return x


@dataclass(frozen=True, repr=False)
class LocalizedIntegers(CoeffRing):
    """Z localized at pZ: fractions whose denominator is prime to p."""

    p: int = 2
    is_valuation_ring = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError(f"{self.p} is not prime")

    @property
    def descriptor(self):
        return f"Zp:{self.p}"

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise NotDivisibleError(f"{q} is not in Z_({self.p})")
        return q

    def valuation(self, x):
        if x == 0:
            return INF
        return padic_val(Fraction(x).numerator, self.p)

    def divides(self, x, y):
        return self.valuation(x) <= self.valuation(y)

    def exact_div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero")
        if not self.divides(y, x):
            raise NotDivisibleError(f"{self.format(y)} does not divide {self.format(x)}")
        return Fraction(x) / y

    def is_unit(self, x):
        return x != 0 and Fraction(x).numerator % self.p != 0

    def gcd(self, x, y):
        return y if self.valuation(y) < self.valuation(x) else x

    def assoc_key(self, x):
        return self.valuation(x)

    def format(self, x):
        return format_rational(x)

    def random_element(self, rng, max_val=4, nonzero=False):
        while True:
            v = rng.randint(0, max_val)
            u = rng.choice([1, -1]) * rng.randint(1, 7)
            while u % self.p == 0:
                u += 1
            d = rng.randint(1, 4)
            while d % self.p == 0:
                d += 1
            if not nonzero and rng.random() < 0.1:
                return Fraction(0)
            return Fraction(u * self.p ** v, d)


@dataclass(frozen=True, repr=False)
class IntegersModPrimePower(CoeffRing):
    """Z/p^alpha Z; elements are residues in [0, p^alpha)."""

    p: int = 2
    alpha: int = 3
    is_valuation_ring = True
    is_domain = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError(f"{self.p} is not prime")
        if self.alpha < 2:
            raise RingError("exponent must be at least 2")

    @property
    def modulus(self):
        return self.p ** self.alpha

    @property
    def descriptor(self):
        return f"Zmod:{self.p}^{self.alpha}"

    def from_int(self, n):
        return int(n) % self.modulus

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise NotDivisibleError(f"{q} has no image in Z/{self.modulus}")
        return q.numerator * pow(q.denominator, -1, self.modulus) % self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def mul(self, x, y):
        return x * y % self.modulus

    def valuation(self, x):
        x %= self.modulus
        if x == 0:
            return self.alpha
        return padic_val(x, self.p)

    def divides(self, x, y):
        return self.valuation(x) <= self.valuation(y)

    def exact_div(self, x, y):
        if y % self.modulus == 0:
            raise ZeroDivisionError("division by zero")
        v = self.valuation(y)
        if self.valuation(x) < v:
            raise NotDivisibleError(f"{y} does not divide {x}")
        m = self.p ** (self.alpha - v)
        pv = self.p ** v
        return (x // pv) * pow(y // pv, -1, m) % m

    def is_unit(self, x):
        return x % self.p != 0

    def gcd(self, x, y):
        return y if self.valuation(y) < self.valuation(x) else x

    def associate_units(self, x, y):
        if self.valuation(x) != self.valuation(y):
            return []
        if y == 0:
            return [1]
        u = self.exact_div(x, y)
        step = self.p ** (self.alpha - self.valuation(y))
        return [w for w in range(u, self.modulus, step) if w % self.p]

    def assoc_key(self, x):
        return self.valuation(x)

    def random_element(self, rng, max_val=4, nonzero=False):
        while True:
            x = rng.randrange(self.modulus)
            if x or not nonzero:
                return x


# -- the valuation domain with value group Z + Z*sqrt2 ----------------------
#
# Elements are fractions num/den of the group algebra Q[t^G], G = Z + Z*sqrt2,
# with exponent m + n*sqrt2 stored as the pair (m, n).  The valuation of a
# group-algebra element is its minimal exponent; the valuation domain is the
# set of fractions with v(num) >= v(den).

def _qr(e):
    return QuadReal(e[0], e[1])


def _ga_min(d: dict):
    return min(d, key=_qr)


def _ga_max(d: dict):
    return max(d, key=_qr)


def _ga_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for (m1, n1), c1 in x.items():
        for (m2, n2), c2 in y.items():
            k = (m1 + m2, n1 + n2)
            c = out.get(k, 0) + c1 * c2
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def _ga_scale_shift(x: dict, c: Fraction, e) -> dict:
    return {(m + e[0], n + e[1]): v * c for (m, n), v in x.items()}


def _ga_sub_inplace(x: dict, y: dict) -> None:
    for k, v in y.items():
        c = x.get(k, 0) - v
        if c:
            x[k] = c
        else:
            x.pop(k, None)


def _ga_divexact(a: dict, b: dict):
    """Quotient ``a/b`` in the group algebra, or ``None`` if inexact."""
    if not a:
        return {}
    # quotient support lies in the box cut out by coordinatewise extremes
    lo_m = min(k[0] for k in a) - min(k[0] for k in b)
    hi_m = max(k[0] for k in a) - max(k[0] for k in b)
    lo_n = min(k[1] for k in a) - min(k[1] for k in b)
    hi_n = max(k[1] for k in a) - max(k[1] for k in b)
    if lo_m > hi_m or lo_n > hi_n:
        return None
    bmin = _ga_min(b)
    bc = b[bmin]
    r = dict(a)
    q: dict = {}
    budget = (hi_m - lo_m + 1) * (hi_n - lo_n + 1)
    while r:
        if len(q) >= budget:
            return None
        rmin = _ga_min(r)
        e = (rmin[0] - bmin[0], rmin[1] - bmin[1])
        if not (lo_m <= e[0] <= hi_m and lo_n <= e[1] <= hi_n):
            return None
        c = Fraction(r[rmin]) / bc
        q[e] = c
        _ga_sub_inplace(r, _ga_scale_shift(b, c, e))
    return q


def _ga_format(d: dict) -> str:
    if not d:
        return "0"
    parts = []
    for e in sorted(d, key=_qr):
        c = Fraction(d[e])
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == (0, 0):
            body = format_rational(c)
        else:
            mono = f"t^({format_quad(_qr(e))})"
            if c == 1:
                body = mono
            elif c.denominator == 1:
                body = f"{c.numerator}*{mono}"
            else:
                body = f"({format_rational(c)})*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True, eq=False)
class VElement:
    """An element ``num/den`` of the valuation domain with value group Z+Z*sqrt2.

    ``num`` and ``den`` are sorted tuples of ``((m, n), coeff)`` pairs.  After
    normalization ``den`` has minimal exponent 0 with coefficient 1.
    """

    num: tuple
    den: tuple = (((0, 0), Fraction(1)),)

    @staticmethod
    def make(num: dict, den: dict | None = None) -> "VElement":
        num = {k: Fraction(v) for k, v in num.items() if v}
        if den is None or den == _ONE_GA:
            return VElement(tuple(sorted(num.items())), _ONE_GA_T) if num else V_ZERO
        den = {k: Fraction(v) for k, v in den.items() if v}
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return V_ZERO
        dmin = _ga_min(den)
        c = den[dmin]
        shift = (-dmin[0], -dmin[1])
        num = _ga_scale_shift(num, 1 / c, shift)
        den = _ga_scale_shift(den, 1 / c, shift)
        if len(den) > 1:
            q = _ga_divexact(num, den)
            if q is not None:
                num, den = q, {(0, 0): Fraction(1)}
        return VElement(tuple(sorted(num.items())), tuple(sorted(den.items())))

    @property
    def num_d(self) -> dict:
        return dict(self.num)

    @property
    def den_d(self) -> dict:
        return dict(self.den)

    def is_zero(self) -> bool:
        return not self.num

    def valuation(self):
        return self._valuation

    @cached_property
    def _valuation(self):
        if not self.num:
            return INF
        v = _qr(_ga_min(self.num_d))
        if self.den is _ONE_GA_T or self.den == _ONE_GA_T:
            return v
        return v - _qr(_ga_min(self.den_d))

    def __eq__(self, other):
        if not isinstance(other, VElement):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return _ga_mul(self.num_d, other.den_d) == _ga_mul(other.num_d, self.den_d)

    def __hash__(self):
        # num/den is not canonical; hash only the valuation
        v = self.valuation()
        return hash(v) if v is not INF else 0

    def __str__(self):
        if self.den == _ONE_GA_T:
            return _ga_format(self.num_d)
        return f"({_ga_format(self.num_d)})/({_ga_format(self.den_d)})"


_ONE_GA_T = (((0, 0), Fraction(1)),)
_ONE_GA = {(0, 0): Fraction(1)}
V_ZERO = VElement((), _ONE_GA_T)
V_ONE = VElement((((0, 0), Fraction(1)),), _ONE_GA_T)


def v_monomial(exp: QuadReal, coeff=1) -> VElement:
    if exp < 0:
        raise RingError("negative exponent is not in the valuation ring")
    return VElement.make({(exp.a, exp.b): Fraction(coeff)})


@dataclass(frozen=True, repr=False)
class ValuationSqrt2(CoeffRing):
    """Valuation domain with value group Z + Z*sqrt2 and residue field Q."""

    descriptor = "Vsqrt2"
    is_valuation_ring = True

    def zero(self):
        return V_ZERO

    def one(self):
        return V_ONE

    def from_int(self, n):
        return VElement.make({(0, 0): Fraction(n)}) if n else V_ZERO

    def from_fraction(self, q):
        return VElement.make({(0, 0): Fraction(q)}) if q else V_ZERO

    def add(self, x, y):
        if x.is_zero():
            return y
        if y.is_zero():
            return x
        if x.den == y.den:
            num = x.num_d
            for k, v in y.num:
                c = num.get(k, 0) + v
                if c:
                    num[k] = c
                else:
                    num.pop(k)
            return VElement.make(num, x.den_d)
        xd, yd = x.den_d, y.den_d
        num = _ga_mul(x.num_d, yd)
        for k, v in _ga_mul(y.num_d, xd).items():
            c = num.get(k, 0) + v
            if c:
                num[k] = c
            else:
                num.pop(k)
        return VElement.make(num, _ga_mul(xd, yd))

    def neg(self, x):
        if x.is_zero():
            return x
        return VElement(tuple((k, -v) for k, v in x.num), x.den)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x.is_zero() or y.is_zero():
            return V_ZERO
        if x.den == _ONE_GA_T and y.den == _ONE_GA_T:
            if len(x.num) == 1 and len(y.num) == 1:
                ((e1, c1),), ((e2, c2),) = x.num, y.num
                return VElement((((e1[0] + e2[0], e1[1] + e2[1]), c1 * c2),), _ONE_GA_T)
            return VElement.make(_ga_mul(x.num_d, y.num_d))
        return VElement.make(_ga_mul(x.num_d, y.num_d), _ga_mul(x.den_d, y.den_d))

    def is_zero(self, x):
        return x.is_zero()

    def eq(self, x, y):
        return x == y

    def valuation(self, x):
        return x.valuation()

    def divides(self, x, y):
        return self.valuation(x) <= self.valuation(y)

    def exact_div(self, x, y):
        if y.is_zero():
            raise ZeroDivisionError("division by zero")
        if not self.divides(y, x):
            raise NotDivisibleError(f"{y} does not divide {x}")
        if x.is_zero():
            return V_ZERO
        if len(y.num) == 1 and y.den == _ONE_GA_T:
            # dividing by a single term: shift the numerator
            (e, c), = y.num
            return VElement.make(_ga_scale_shift(x.num_d, 1 / c, (-e[0], -e[1])), x.den_d)
        return VElement.make(_ga_mul(x.num_d, y.den_d), _ga_mul(x.den_d, y.num_d))

    def is_unit(self, x):
        return not x.is_zero() and x.valuation() == QuadReal(0, 0)

    def gcd(self, x, y):
        return y if self.valuation(y) < self.valuation(x) else x

    def assoc_key(self, x):
        return self.valuation(x)

    def format(self, x):
        return str(x)

    def atom(self, name, exponent):
        if name == "gen_a":
            return v_monomial(QuadReal(1, 0))
        if name == "gen_b":
            return v_monomial(QuadReal(0, 1))
        if name == "t":
            from .scalars import parse_quad
            return v_monomial(parse_quad(exponent) if exponent is not None else QuadReal(1, 0))
        return None

    def random_element(self, rng, max_val=4, nonzero=False):
        if not nonzero and rng.random() < 0.1:
            return V_ZERO
        num = {}
        for _ in range(rng.randint(1, 2)):
            while True:
                e = (rng.randint(-3, 4), rng.randint(-2, 3))
                q = _qr(e)
                if QuadReal(0, 0) <= q <= QuadReal(max_val, 0):
                    break
            num[e] = Fraction(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 3))
        # no denominators: unreduced fractions grow quickly under arithmetic
        return VElement.make(num)


# -- descriptors -------------------------------------------------------------

def ring_from_descriptor(text: str) -> CoeffRing:
    """Parse ``Q``, ``Z``, ``Zp:5``, ``Zmod:2^3`` or ``Vsqrt2``."""
    s = text.strip()
    if s == "Q":
        return RationalField()
    if s == "Z":
        return Integers()
    if s == "Vsqrt2":
        return ValuationSqrt2()
    if s.startswith("Zp:"):
        try:
            return LocalizedIntegers(int(s[3:]))
        except ValueError as exc:
            raise RingError(f"bad ring descriptor {text!r}: {exc}") from None
    if s.startswith("Zmod:"):
        try:
            p, a = s[5:].split("^")
            return IntegersModPrimePower(int(p), int(a))
        except ValueError as exc:
            raise RingError(f"bad ring descriptor {text!r}: {exc}") from None
    raise RingError(f"unknown ring descriptor {text!r}")


def check_same_ring(*rings: Iterable[Any]) -> CoeffRing:
    rings = list(rings)
    first = rings[0]
    for r in rings[1:]:
        if r != first:
            raise RingError(f"ring mismatch: {first.descriptor} vs {r.descriptor}")
    return first
