"""The localization ``R_<<X>>`` of ``R[X1..Xn]`` at the polynomials with leading coefficient 1.

Fractions, saturation ideals ``[b : a^inf]``, Krull-dimension certificates,
relation extraction along ``X -> X^k`` and Bezout identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from .coeffrings import (CoeffRing, INF, Integers, IntegersModPrimePower, RationalField,
                         RingError, ValuationSqrt2)
from .monorder import MonomialOrder, lex_order, order_from_matrix
from .parsing import parse_poly
from .polygcd import canonical_associate, poly_exact_div, poly_gcd
from .polyring import MultiPoly, block_decompose, deflate_k, frobenius_k
from .scalars import SQRT2, QuadReal, format_quad, quad_to_decimal
from .sgroebner import MonicResult, monic_membership, saturate, _ext_gcd


class NonMonicDenominatorError(ValueError):
    pass


class NotCoprimeError(ValueError):
    pass


class HypothesisError(ValueError):
    pass


# -- fractions -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SerreFraction:
    num: MultiPoly
    den: MultiPoly
    order: MonomialOrder

    def __eq__(self, other):
        if not isinstance(other, SerreFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num.n, self.num.ring.descriptor))

    def __add__(self, other):
        return frac_normalize(self.num * other.den + other.num * self.den,
                              self.den * other.den, self.order)

    def __neg__(self):
        return SerreFraction(-self.num, self.den, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return frac_normalize(self.num * other, self.den, self.order)
        return frac_normalize(self.num * other.num, self.den * other.den, self.order)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_unit(self) -> bool:
        """Units are exactly the fractions whose numerator has a unit leading coefficient."""
        if self.num.is_zero():
            return False
        return self.num.ring.is_unit(self.num.lc(self.order))

    def inflate(self, k: int) -> "SerreFraction":
        return SerreFraction(frobenius_k(self.num, k), frobenius_k(self.den, k), self.order)

    def __str__(self):
        if self.den.is_constant() and self.num.ring.is_one(self.den.constant_coeff()):
            return self.num.to_str(self.order)
        return f"({self.num.to_str(self.order)})/({self.den.to_str(self.order)})"


def frac_normalize(num: MultiPoly, den: MultiPoly, order: MonomialOrder) -> SerreFraction:
    """Build a fraction; the denominator must have leading coefficient exactly 1.

    A monic denominator has unit content, so there is no common coefficient
    factor to cancel; equality is decided by cross-multiplication.
    """
    if den.is_zero() or not den.ring.is_one(den.lc(order)):
        raise NonMonicDenominatorError("denominator must have leading coefficient 1")
    if num.is_zero():
        return SerreFraction(num, MultiPoly.constant(num.ring, num.n, num.ring.one()), order)
    return SerreFraction(num, den, order)


def as_fraction(f, order: MonomialOrder) -> SerreFraction:
    if isinstance(f, SerreFraction):
        return f
    return SerreFraction(f, MultiPoly.constant(f.ring, f.n, f.ring.one()), order)


# -- saturation ideals and dimension certificates -------------------------------

@dataclass(frozen=True)
class SaturationIdeal:
    generator: Any
    n_used: int


def _min_multiple(va, vb) -> int:
    """Least ``n >= 0`` with ``n*va >= vb`` (``va > 0``)."""
    if isinstance(va, QuadReal) or isinstance(vb, QuadReal):
        va = va if isinstance(va, QuadReal) else QuadReal(va, 0)
        vb = vb if isinstance(vb, QuadReal) else QuadReal(vb, 0)
        approx = (vb.a + vb.b * math.sqrt(2)) / (va.a + va.b * math.sqrt(2))
        n = max(0, math.floor(approx) - 1)
        while va * n < vb:
            n += 1
        return n
    return max(0, -(-vb // va))


def saturation(R: CoeffRing, b, a) -> SaturationIdeal:
    """The ideal ``[b : a^inf] = {x : x*a^n in <b> for some n}`` (principal in the shipped rings)."""
    if R.is_zero(a):
        # 0^1 = 0 lies in <b>, so every x qualifies
        return SaturationIdeal(R.one(), 1)
    if isinstance(R, RationalField) or R.is_unit(a):
        return SaturationIdeal(b, 0)
    if isinstance(R, Integers):
        if b == 0:
            return SaturationIdeal(0, 0)
        g, n = abs(b), 0
        while True:
            d = math.gcd(g, a)
            if d == 1:
                return SaturationIdeal(g, n)
            g //= d
            n += 1
    if not R.is_valuation_ring:
        raise RingError(f"saturation is not implemented over {R.descriptor}")
    vb = R.valuation(b)
    if vb is INF:
        # a domain: x*a^n = 0 forces x = 0
        return SaturationIdeal(R.zero(), 0)
    return SaturationIdeal(R.one(), _min_multiple(R.valuation(a), vb))


@dataclass(frozen=True)
class ClosedFormLT:
    """``[b:a^inf][X] + <aX>`` in one variable."""

    ring: CoeffRing
    s: Any
    a: Any

    def contains(self, degree: int, c) -> bool:
        R = self.ring
        if R.is_zero(c):
            return True
        if not R.is_zero(self.s) and R.divides(self.s, c):
            return True
        return degree >= 1 and not R.is_zero(self.a) and R.divides(self.a, c)

    def contains_term(self, t: MultiPoly) -> bool:
        (e, c), = t.terms.items()
        return self.contains(e[0], c)


def lt_of_one_plus_ax_b(R: CoeffRing, a, b) -> ClosedFormLT:
    return ClosedFormLT(R, saturation(R, b, a).generator, a)


@dataclass(frozen=True)
class DimOneCertificate:
    """``(1 - alpha*a) * a^n = quotient * b``."""

    ring: CoeffRing
    a: Any
    b: Any
    alpha: Any
    n: int
    quotient: Any

    def check(self) -> bool:
        R = self.ring
        lhs = R.mul(R.sub(R.one(), R.mul(self.alpha, self.a)), R.pow(self.a, self.n))
        return R.eq(lhs, R.mul(self.quotient, self.b))

    def to_json(self) -> dict:
        R = self.ring
        return {"ring": R.descriptor, "a": R.format(self.a), "b": R.format(self.b),
                "alpha": R.format(self.alpha), "n": self.n, "quotient": R.format(self.quotient)}

    @staticmethod
    def from_json(data: dict) -> "DimOneCertificate":
        from .coeffrings import ring_from_descriptor
        R = ring_from_descriptor(data["ring"])
        return DimOneCertificate(R, R.parse(data["a"]), R.parse(data["b"]), R.parse(data["alpha"]),
                                 int(data["n"]), R.parse(data["quotient"]))


def dim_one_certificate(R: CoeffRing, a, b) -> DimOneCertificate:
    if R.is_zero(a) or R.is_zero(b):
        raise ValueError("dimension certificate needs nonzero a and b")
    if R.is_unit(a):
        cert = DimOneCertificate(R, a, b, R.inverse(a), 0, R.zero())
    elif isinstance(R, Integers):
        sat = saturation(R, b, a)
        s, n = sat.generator, sat.n_used
        # s and a are coprime: 1 = x*s + alpha*a
        _, x, alpha = _ext_gcd(s, a)
        cert = DimOneCertificate(R, a, b, alpha, n, R.exact_div(x * s * a ** n, b))
    else:
        n = saturation(R, b, a).n_used
        cert = DimOneCertificate(R, a, b, R.zero(), n, R.exact_div(R.pow(a, n), b))
    if not cert.check():
        raise AssertionError("dimension certificate failed to verify")
    return cert


# -- lex-dependence -------------------------------------------------------------

@dataclass(frozen=True)
class LexDependenceWitness:
    sequence: tuple
    P: MultiPoly
    trailing_coefficient: Any

    def check(self) -> bool:
        R = self.P.ring
        return R.is_one(self.trailing_coefficient) and R.is_zero(self.P.evaluate(self.sequence))


def lex_dependence_pair(R: CoeffRing, a, b) -> LexDependenceWitness:
    """``P(Y1, Y2)`` with lex trailing coefficient 1 and ``P(a, b) = 0``."""
    lex2 = lex_order(2)
    if R.is_zero(a):
        P = MultiPoly.variable(R, 2, 0)
    elif R.is_zero(b):
        P = MultiPoly.variable(R, 2, 1)
    else:
        cert = dim_one_certificate(R, a, b)
        n = cert.n
        P = MultiPoly(R, 2, {
            (n, 0): R.one(),
            (n + 1, 0): R.neg(cert.alpha),
            (0, 1): R.neg(cert.quotient),
        })
    w = LexDependenceWitness((a, b), P, P.tc(lex2))
    if not w.check():
        raise AssertionError("lex-dependence witness failed to verify")
    return w


# -- relations along X -> X^k ----------------------------------------------------

# A polynomial in Y1..Yp with coefficients in R[X1..Xn] is a dict beta -> MultiPoly.

def ypoly_eval(P: dict, values: Sequence) -> Any:
    acc = None
    for beta, c in P.items():
        t = c
        for v, k in zip(values, beta):
            if k:
                t = t * (v ** k)
        acc = t if acc is None else acc + t
    return acc


def ypoly_trailing(P: dict) -> tuple:
    """Trailing exponent under lex with Y1 < Y2 < ... < Yp."""
    nonzero = [b for b, c in P.items() if not c.is_zero()]
    if not nonzero:
        raise HypothesisError("zero relation")
    return min(nonzero, key=lambda b: tuple(reversed(b)))


def ypoly_inflate(P: dict, k: int) -> dict:
    return {beta: frobenius_k(c, k) for beta, c in P.items()}


def extract_relation(P: dict, fs: Sequence[MultiPoly], k: int, order: MonomialOrder,
                     variant: str = "one") -> dict:
    """From ``P(f1^~..fp^~) = 0`` with ``f^~ = f(X^k)``, a relation ``Q(f1..fp) = 0``.

    ``variant="one"`` needs ``TC_lex(P) = 1`` and keeps it; ``variant="monic"``
    needs a trailing coefficient with leading coefficient 1 under ``order``.
    """
    if variant not in ("one", "monic"):
        raise ValueError(f"unknown variant {variant!r}")
    if not fs:
        raise HypothesisError("empty sequence")
    R, n = fs[0].ring, fs[0].n
    inflated = [frobenius_k(f, k) for f in fs]
    val = ypoly_eval(P, inflated)
    if val is not None and not val.is_zero():
        raise HypothesisError("P does not vanish on the inflated sequence")
    bmin = ypoly_trailing(P)
    tc = P[bmin]
    if variant == "one":
        if not (tc.is_constant() and R.is_one(tc.constant_coeff())):
            raise HypothesisError("trailing coefficient is not 1")
    elif not R.is_one(tc.lc(order)):
        raise HypothesisError("trailing coefficient does not have leading coefficient 1")

    blocks = {beta: block_decompose(c, k) for beta, c in P.items() if not c.is_zero()}
    if variant == "one":
        alpha0 = (0,) * n
    else:
        alpha0 = tuple(x % k for x in tc.lm(order))
    Q = {}
    for beta, bl in blocks.items():
        if alpha0 in bl:
            Q[beta] = deflate_k(bl[alpha0], k)
    check = ypoly_eval(Q, fs)
    if bmin not in Q or (check is not None and not check.is_zero()):
        raise AssertionError("extracted relation failed to verify")
    return Q


def extract_relation_fractions(P: dict, fs: Sequence[SerreFraction], k: int,
                               order: MonomialOrder) -> dict:
    """Fraction version: coefficients and values in ``R_<<X>>``, ``TC_lex(P) = 1``.

    Clears denominators, applies the polynomial version, and divides the
    result by its (now invertible) trailing coefficient.
    """
    R = fs[0].num.ring
    n, p = fs[0].num.n, len(fs)
    one = MultiPoly.constant(R, n, R.one())
    bmin = ypoly_trailing({b: c.num for b, c in P.items()})
    if P[bmin] != as_fraction(one, order):
        raise HypothesisError("trailing coefficient is not 1")
    common = one
    for c in P.values():
        common = common * c.den
    Pc = {b: poly_exact_div_frac(c, common) for b, c in P.items() if not c.is_zero()}
    degs = [max(b[i] for b in Pc) for i in range(p)]
    s = [f.den for f in fs]
    s_inf = [frobenius_k(x, k) for x in s]
    P2 = {}
    for beta, c in Pc.items():
        t = c
        for i in range(p):
            t = t * s_inf[i] ** (degs[i] - beta[i])
        P2[beta] = t
    Q = extract_relation(P2, [f.num for f in fs], k, order, variant="monic")
    # substitute Y_i -> s_i Y_i and divide by the trailing coefficient
    Qf = {}
    for beta, c in Q.items():
        t = c
        for i in range(p):
            t = t * s[i] ** beta[i]
        Qf[beta] = t
    lead = Qf[ypoly_trailing(Qf)]
    out = {beta: frac_normalize(c, lead, order) for beta, c in Qf.items()}
    total = None
    for beta, c in out.items():
        term = c
        for i in range(p):
            for _ in range(beta[i]):
                term = term * fs[i]
        total = term if total is None else total + term
    if total is not None and not total.is_zero():
        raise AssertionError("extracted fraction relation failed to verify")
    return out


def poly_exact_div_frac(c: SerreFraction, common: MultiPoly) -> MultiPoly:
    """``c * common`` as a polynomial (``common`` a multiple of ``c.den``)."""
    return c.num * poly_exact_div(common, c.den)


# -- gcd and Bezout ----------------------------------------------------------------

@dataclass(frozen=True)
class GcdResult:
    gcd: SerreFraction
    extraction: Any = None

    def is_unit(self) -> bool:
        return self.gcd.is_unit()


def gcd_serre(f, g, order: MonomialOrder) -> GcdResult:
    """gcd in ``R_<<X>>``; for constant inputs also the gcd in ``R`` read off as a leading coefficient."""
    f, g = as_fraction(f, order), as_fraction(g, order)
    h = poly_gcd(f.num, g.num)
    R = h.ring
    extraction = None
    if f.num.is_constant() and g.num.is_constant():
        extraction = canonical_associate(R, h.lc(order)) if not h.is_zero() else R.zero()
    return GcdResult(as_fraction(h, order), extraction)


@dataclass
class BezoutIdentity:
    p: SerreFraction
    q: SerreFraction
    witness: MultiPoly
    p0: MultiPoly
    q0: MultiPoly
    depth: int

    def check(self, f: MultiPoly, g: MultiPoly) -> bool:
        # p*f + q*g = 1  <=>  p0*f + q0*g = s
        return self.p0 * f + self.q0 * g == self.witness and \
            self.witness.ring.is_one(self.witness.lc(self.p.order))

    def to_json(self, order: MonomialOrder) -> dict:
        return {
            "p_num": self.p.num.to_str(order), "p_den": self.p.den.to_str(order),
            "q_num": self.q.num.to_str(order), "q_den": self.q.den.to_str(order),
            "witness": self.witness.to_str(order), "depth": self.depth,
        }


@dataclass
class BezoutOutcome:
    status: str                        # identity | not_found_at_depth | not_coprime
    identity: BezoutIdentity | None
    search: MonicResult | None = None
    gcd: GcdResult | None = None


def bezout_serre(f: MultiPoly, g: MultiPoly, order: MonomialOrder, depth_limit: int = 8,
                 size_limit: int | None = None, check_gcd: bool = True) -> BezoutOutcome:
    """Look for ``p*f + q*g = 1`` in ``R_<<X>>`` through a leading-coefficient-1 element of ``<f, g>``."""
    gres = None
    if check_gcd:
        gres = gcd_serre(f, g, order)
        if not gres.is_unit():
            return BezoutOutcome("not_coprime", None, None, gres)
    res = monic_membership([f, g], order, depth_limit, size_limit=size_limit)
    if not res.found:
        return BezoutOutcome("not_found_at_depth", None, res, gres)
    R = f.ring
    # cofactors refer to the generator list [f, g]
    p0, q0 = res.trace.cofactors(res.witness_index, 2)
    s_raw = res.trace.entries[res.witness_index].poly
    u = R.inverse(s_raw.lc(order))
    s, p0, q0 = s_raw.scale(u), p0.scale(u), q0.scale(u)
    ident = BezoutIdentity(SerreFraction(p0, s, order), SerreFraction(q0, s, order), s, p0, q0,
                           res.trace.entries[res.witness_index].generation)
    if not ident.check(f, g):
        raise AssertionError("Bezout identity failed to verify")
    return BezoutOutcome("identity", ident, res, gres)


# -- the irrational-order counterexample ---------------------------------------------

def counterexample_setup():
    V = ValuationSqrt2()
    order = order_from_matrix([[1, SQRT2]], "1,sqrt2")
    f = parse_poly(V, 2, "-1 + gen_a*X1")
    g = parse_poly(V, 2, "-1 + gen_b*X2")
    return V, order, f, g


@dataclass
class CounterexampleReport:
    depth: int
    rows: list                 # per generation: list of (lm, valuation)
    min_valuations: list       # per generation (None when nothing new)
    first_valuation: QuadReal | None
    all_positive: bool
    all_below_bound: bool
    strictly_decreasing: bool
    running_min_nonincreasing: bool
    unit_lc_found: bool
    stop: str
    lex_contrast: BezoutOutcome | None = None

    @property
    def assertions_pass(self) -> bool:
        return (self.all_positive and self.all_below_bound and self.strictly_decreasing
                and not self.unit_lc_found)

    def to_json(self) -> dict:
        def fmt(v):
            return None if v is None else {"exact": format_quad(v), "a": v.a, "b": v.b,
                                           "approx": quad_to_decimal(v, 20)}
        return {
            "depth": self.depth,
            "generations": [
                {"generation": q,
                 "new_terms": [{"lm": list(lm), "lc_valuation": fmt(v)} for lm, v in row],
                 "min_valuation": fmt(self.min_valuations[q])}
                for q, row in enumerate(self.rows)
            ],
            "checks": {
                "first_valuation": fmt(self.first_valuation),
                "all_positive": self.all_positive,
                "all_below_1_plus_sqrt2": self.all_below_bound,
                "min_strictly_decreasing": self.strictly_decreasing,
                "running_min_nonincreasing": self.running_min_nonincreasing,
                "unit_lc_found": self.unit_lc_found,
            },
            "stop": self.stop,
            "lex_contrast": None if self.lex_contrast is None else self.lex_contrast.status,
        }


def counterexample_report(depth: int, contrast: bool = True) -> CounterexampleReport:
    """Saturate ``{-1 + aX, -1 + bY}`` under the order ``(1 sqrt2)`` and record LC valuations."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    V, order, f, g = counterexample_setup()
    trace = saturate([f, g], order, depth, dedup="unit_monomial")
    rows = []
    for q in range(len(trace.generation_sizes)):
        rows.append([(p.lm(order), V.valuation(p.lc(order))) for p in trace.generation(q)])
    mins = [min((v for _, v in row), default=None) for row in rows]
    later = [v for row in rows[1:] for _, v in row]
    bound = QuadReal(1, 1)
    zero = QuadReal(0, 0)
    gen_mins = [m for m in mins[1:] if m is not None]
    strictly = all(x > y for x, y in zip(gen_mins, gen_mins[1:]))
    running, cur = [], None
    for m in gen_mins:
        cur = m if cur is None or m < cur else cur
        running.append(cur)
    nonincreasing = all(x >= y for x, y in zip(running, running[1:]))
    report = CounterexampleReport(
        depth=depth,
        rows=rows,
        min_valuations=mins,
        first_valuation=rows[1][0][1] if len(rows) > 1 and rows[1] else None,
        all_positive=all(v > zero for v in later),
        all_below_bound=all(zero < v < bound for v in later),
        strictly_decreasing=strictly,
        running_min_nonincreasing=nonincreasing,
        unit_lc_found=any(V.is_unit(e.poly.lc(order)) for e in trace.entries),
        stop=trace.stop,
    )
    if contrast:
        report.lex_contrast = bezout_serre(f, g, lex_order(2), max(depth, 1))
    return report
