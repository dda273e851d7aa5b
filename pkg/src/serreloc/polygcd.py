"""Multivariate gcd over the gcd domains Q, Z, Z_(p) and Vsqrt2.

The polynomial ring is treated recursively as ``D[x]`` with ``D`` the ring in
the remaining variables; gcds are content times the primitive gcd obtained
from the subresultant pseudo-remainder sequence.
"""

from __future__ import annotations

from functools import reduce

from .coeffrings import (CoeffRing, Integers, IntegersModPrimePower, LocalizedIntegers,
                         NotDivisibleError, RationalField, RingError, ValuationSqrt2,
                         v_monomial)
from .monorder import idlex_order
from .polyring import MultiPoly


class UnsupportedRingError(RingError):
    pass


def check_gcd_ring(R: CoeffRing) -> None:
    if isinstance(R, IntegersModPrimePower) or not R.is_domain:
        raise UnsupportedRingError(f"{R.descriptor} is not a gcd domain")


def canonical_associate(R: CoeffRing, x):
    """A fixed representative of the associate class of ``x``."""
    if R.is_zero(x):
        return R.zero()
    if isinstance(R, RationalField):
        return R.one()
    if isinstance(R, Integers):
        return abs(x)
    if isinstance(R, LocalizedIntegers):
        return R.from_int(R.p ** R.valuation(x))
    if isinstance(R, IntegersModPrimePower):
        return R.from_int(R.p ** R.valuation(x))
    if isinstance(R, ValuationSqrt2):
        return v_monomial(R.valuation(x))
    raise UnsupportedRingError(R.descriptor)


def ring_gcd(R: CoeffRing, x, y):
    check_gcd_ring(R)
    return canonical_associate(R, R.gcd(x, y))


# -- polynomial helpers -------------------------------------------------------

_ORDERS: dict = {}


def _idlex(n):
    if n not in _ORDERS:
        _ORDERS[n] = idlex_order(n)
    return _ORDERS[n]


def poly_exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """``q`` with ``a = q*b``; raises :class:`NotDivisibleError` otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    R, n = a.ring, a.n
    if b.is_term():
        (e, c), = b.terms.items()
        try:
            q = {tuple(x - y for x, y in zip(k, e)): R.exact_div(v, c) for k, v in a.terms.items()}
        except NotDivisibleError:
            raise NotDivisibleError("polynomial division is not exact") from None
        out = MultiPoly(R, n, q)
        if not out.is_polynomial() and a.is_polynomial():
            raise NotDivisibleError("polynomial division is not exact")
        return out
    order = _idlex(n)
    lb = b.lm(order)
    cb = b.terms[lb]
    r = a
    q: dict = {}
    while not r.is_zero():
        lr = r.lm(order)
        m = tuple(x - y for x, y in zip(lr, lb))
        if any(k < 0 for k in m):
            raise NotDivisibleError("polynomial division is not exact")
        try:
            c = R.exact_div(r.terms[lr], cb)
        except NotDivisibleError:
            raise NotDivisibleError("polynomial division is not exact") from None
        q[m] = c
        r = r - b.mul_term(c, m)
    return MultiPoly(R, n, q)


def degree_in(f: MultiPoly, v: int) -> int:
    return max((e[v] for e in f.terms), default=-1)


def coeffs_in(f: MultiPoly, v: int) -> dict:
    """``{d: c_d}`` with ``f = sum_d c_d * x_v^d`` and ``c_d`` free of ``x_v``."""
    out: dict = {}
    for e, c in f.terms.items():
        d = e[v]
        key = e[:v] + (0,) + e[v + 1:]
        out.setdefault(d, {})[key] = c
    return {d: MultiPoly(f.ring, f.n, t, _trusted=True) for d, t in out.items()}


def _var_power(f: MultiPoly, v: int, d: int) -> tuple:
    e = [0] * f.n
    e[v] = d
    return tuple(e)


def lead_in(f: MultiPoly, v: int) -> MultiPoly:
    d = degree_in(f, v)
    return coeffs_in(f, v)[d]


def pseudo_remainder(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """``lc(b)^(deg a - deg b + 1) * a mod b`` in ``D[x_v]``."""
    db = degree_in(b, v)
    lb = lead_in(b, v)
    r = a
    e = degree_in(a, v) - db + 1
    while not r.is_zero() and degree_in(r, v) >= db:
        dr = degree_in(r, v)
        s = lead_in(r, v).shift(_var_power(r, v, dr - db))
        r = lb * r - s * b
        e -= 1
    return (lb ** e) * r if e > 0 else r


def content_in(f: MultiPoly, v: int) -> MultiPoly:
    return reduce(poly_gcd, coeffs_in(f, v).values())


def _main_variable(f: MultiPoly, g: MultiPoly) -> int | None:
    for v in range(f.n - 1, -1, -1):
        if degree_in(f, v) > 0 or degree_in(g, v) > 0:
            return v
    return None


def normalize_gcd(h: MultiPoly) -> MultiPoly:
    """Fix the unit factor: monic over Q, positive over Z, canonical minimal coefficient otherwise."""
    if h.is_zero():
        return h
    R = h.ring
    exps = h.sorted_exps(_idlex(h.n))
    if isinstance(R, RationalField):
        return h.scale(R.inverse(h.terms[exps[0]]))
    if isinstance(R, Integers):
        return -h if h.terms[exps[0]] < 0 else h
    # valuation rings: first coefficient of minimal valuation becomes p^v / t^v
    best = exps[0]
    for e in exps[1:]:
        if R.valuation(h.terms[e]) < R.valuation(h.terms[best]):
            best = e
    c = h.terms[best]
    u = R.exact_div(c, canonical_associate(R, c))
    return h.scale(R.inverse(u))


def _constant_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    R = f.ring
    vals = list(f.terms.values()) + list(g.terms.values())
    c = reduce(lambda x, y: R.gcd(x, y), vals, R.zero())
    return MultiPoly.constant(R, f.n, canonical_associate(R, c))


def _subresultant_primitive(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """gcd of two primitive polynomials in ``D[x_v]`` (subresultant PRS)."""
    if degree_in(a, v) < degree_in(b, v):
        a, b = b, a
    R, n = a.ring, a.n
    one = MultiPoly.constant(R, n, R.one())
    g = h = one
    while True:
        delta = degree_in(a, v) - degree_in(b, v)
        r = pseudo_remainder(a, b, v)
        if r.is_zero():
            break
        if degree_in(r, v) == 0:
            return one
        a, b = b, poly_exact_div(r, g * h ** delta)
        g = lead_in(a, v)
        if delta == 1:
            h = g
        elif delta > 1:
            h = poly_exact_div(g ** delta, h ** (delta - 1))
    return poly_exact_div(b, content_in(b, v))


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """A gcd of ``f`` and ``g`` in ``R[X1..Xn]``, normalized by :func:`normalize_gcd`."""
    R = f.ring
    check_gcd_ring(R)
    if f.is_zero():
        return normalize_gcd(g)
    if g.is_zero():
        return normalize_gcd(f)
    v = _main_variable(f, g)
    if v is None:
        return _constant_gcd(f, g)
    if degree_in(f, v) == 0:
        return poly_gcd(f, content_in(g, v))
    if degree_in(g, v) == 0:
        return poly_gcd(content_in(f, v), g)
    cf, cg = content_in(f, v), content_in(g, v)
    pf, pg = poly_exact_div(f, cf), poly_exact_div(g, cg)
    d = poly_gcd(cf, cg)
    return normalize_gcd(d * _subresultant_primitive(pf, pg, v))


def poly_divides(a: MultiPoly, b: MultiPoly) -> bool:
    try:
        poly_exact_div(b, a)
    except NotDivisibleError:
        return False
    return True
