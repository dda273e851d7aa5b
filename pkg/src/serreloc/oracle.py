"""Independent brute-force oracles and seeded instance generators.

Nothing here uses S-polynomials.  Term membership works on the explicit
R-module spanned by bounded monomial multiples of the generators;
lex-dependence is searched monomial by monomial.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .coeffrings import CoeffRing, Integers, IntegersModPrimePower, LocalizedIntegers
from .monorder import MonomialOrder, lex_order
from .polyring import MultiPoly
from .sgroebner import _ext_gcd, term_in_ideal


@dataclass(frozen=True)
class OracleBounds:
    multiplier_degree: int = 4       # total degree of the monomial multipliers


def _multipliers(n: int, d: int):
    for e in itertools.product(range(d + 1), repeat=n):
        if sum(e) <= d:
            yield e


def _lead(row: dict, order: MonomialOrder):
    return max(row, key=order.key)


def module_pivots(rows: list, ring: CoeffRing, order: MonomialOrder) -> list:
    """Echelonize an R-module of polynomials (as ``{exp: coeff}`` dicts).

    Returns pivot rows with pairwise distinct leading monomials such that the
    leading term of every module element lies in the term ideal of the pivots'
    leading terms.  Over Z/p^a the annihilator multiple of each pivot is fed
    back so zero divisors cannot hide leading terms.
    """
    R = ring
    pool = [dict(r) for r in rows if r]
    pivots = []
    while pool:
        top = max((_lead(r, order) for r in pool), key=order.key)
        here = [r for r in pool if _lead(r, order) == top]
        pool = [r for r in pool if _lead(r, order) != top]
        if isinstance(R, Integers):
            piv = here[0]
            for r in here[1:]:
                x, y = piv[top], r[top]
                d, u, v = _ext_gcd(x, y)
                new_piv = _combine(R, piv, u, r, v)
                rest = _combine(R, piv, -y // d, r, x // d)
                piv = new_piv
                if rest:
                    pool.append(rest)
            pivots.append(piv)
            continue
        if R.is_field:
            piv = here[0]
        else:
            piv = min(here, key=lambda r: R.valuation(r[top]))
        for r in here:
            if r is piv:
                continue
            rest = _combine(R, r, R.one(), piv, R.neg(R.exact_div(r[top], piv[top])))
            if rest:
                pool.append(rest)
        if isinstance(R, IntegersModPrimePower):
            v = R.valuation(piv[top])
            ann = R.from_int(R.p ** (R.alpha - v))
            killed = _combine(R, piv, ann, {}, R.zero())
            if killed:
                pool.append(killed)
        pivots.append(piv)
    return pivots


def _combine(R, a: dict, ca, b: dict, cb) -> dict:
    out: dict = {}
    for e, c in a.items():
        out[e] = R.mul(ca, c)
    for e, c in b.items():
        out[e] = R.add(out[e], R.mul(cb, c)) if e in out else R.mul(cb, c)
    return {e: c for e, c in out.items() if not R.is_zero(c)}


def bounded_lt_terms(G: Sequence[MultiPoly], order: MonomialOrder,
                     bounds: OracleBounds = OracleBounds()) -> list:
    """Leading terms ``(exp, coeff)`` of an echelon basis of the bounded module."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return []
    R, n = G[0].ring, G[0].n
    rows = []
    for m in _multipliers(n, bounds.multiplier_degree):
        for g in G:
            rows.append({tuple(a + b for a, b in zip(e, m)): c for e, c in g.terms.items()})
    return [(_lead(r, order), r[_lead(r, order)]) for r in module_pivots(rows, R, order)]


def oracle_term_membership(G: Sequence[MultiPoly], t: MultiPoly, order: MonomialOrder,
                           bounds: OracleBounds = OracleBounds()) -> bool:
    """Is the term ``t`` in the ideal spanned by leading terms of the bounded module?

    Sound for the true leading-term ideal; complete only up to the bound.
    """
    if not t.is_term():
        raise ValueError("t must be a single term")
    (e, c), = t.terms.items()
    return term_in_ideal(bounded_lt_terms(G, order, bounds), t.ring, e, c)


def oracle_lexdep_search(ring: CoeffRing, sequence: Sequence, degree_bound: int) -> MultiPoly | None:
    """First ``P`` (fixed enumeration order) with ``TC_lex(P) = 1`` and ``P(y) = 0``.

    Candidates are ``Y^mu + sum_beta r_beta Y^beta`` with every ``beta``
    lex-above ``mu``; ``mu`` runs upward in lex, so the first hit has the
    smallest possible trailing monomial.
    """
    R = ring
    p = len(sequence)
    lex = lex_order(p)
    monos = sorted((e for e in itertools.product(range(degree_bound + 1), repeat=p)
                    if sum(e) <= degree_bound), key=lex.key)

    def power(e):
        acc = R.one()
        for y, k in zip(sequence, e):
            acc = R.mul(acc, R.pow(y, k))
        return acc

    values = {e: power(e) for e in monos}
    for idx, mu in enumerate(monos):
        target = R.neg(values[mu])
        P = {mu: R.one()}
        if R.is_zero(target):
            return MultiPoly(R, p, P)
        higher = monos[idx + 1:]
        combo = _express(R, target, [values[b] for b in higher])
        if combo is None:
            continue
        for b, r in zip(higher, combo):
            if not R.is_zero(r):
                P[b] = r
        out = MultiPoly(R, p, P)
        if not R.is_zero(out.evaluate(sequence)) or not R.is_one(out.tc(lex)):
            raise AssertionError("lex-dependence search produced a bad witness")
        return out
    return None


def _express(R: CoeffRing, target, gens: list):
    """Coefficients ``r`` with ``sum r_i*gens_i = target``, or None."""
    if isinstance(R, Integers):
        d, coeffs = 0, [0] * len(gens)
        for i, g in enumerate(gens):
            nd, u, v = _ext_gcd(d, g)
            coeffs = [u * c for c in coeffs]
            coeffs[i] = v
            d = nd
        if d == 0 or target % d:
            return None
        return [c * (target // d) for c in coeffs]
    for i, g in enumerate(gens):
        if not R.is_zero(g) and R.divides(g, target):
            out = [R.zero()] * len(gens)
            out[i] = R.exact_div(target, g)
            return out
    return None


# -- instance generators --------------------------------------------------------

@dataclass
class InstanceGen:
    """Deterministic small random instances."""

    seed: int = 0
    max_vars: int = 2
    max_degree: int = 3
    max_val: int = 3
    n_gens: int = 3
    max_terms: int = 3
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        if self.max_vars > 3 or self.max_degree > 4 or self.max_val > 4 or self.n_gens > 3:
            raise ValueError("oracle instances are limited to n<=3, degree<=4, valuation<=4, 3 generators")
        self.rng = random.Random(self.seed)

    def exponent(self, n: int, max_degree: int | None = None) -> tuple:
        d = self.max_degree if max_degree is None else max_degree
        while True:
            e = tuple(self.rng.randint(0, d) for _ in range(n))
            if sum(e) <= d:
                return e

    def coefficient(self, ring: CoeffRing, nonzero: bool = True):
        return ring.random_element(self.rng, self.max_val, nonzero=nonzero)

    def poly(self, ring: CoeffRing, n: int, terms: int | None = None) -> MultiPoly:
        k = terms or self.rng.randint(1, self.max_terms)
        while True:
            f = MultiPoly(ring, n, {self.exponent(n): self.coefficient(ring) for _ in range(k)})
            if not f.is_zero():
                return f

    def generators(self, ring: CoeffRing, n: int, count: int | None = None) -> list:
        return [self.poly(ring, n) for _ in range(count or self.rng.randint(1, self.n_gens))]

    def combination(self, G: Sequence[MultiPoly], terms_per_gen: int = 2) -> MultiPoly:
        """A random explicit element ``sum c_i * X^m_i * g_i`` of ``<G>``."""
        R, n = G[0].ring, G[0].n
        while True:
            h = MultiPoly.zero(R, n)
            for g in G:
                for _ in range(self.rng.randint(0, terms_per_gen)):
                    h = h + g.mul_term(self.coefficient(R), self.exponent(n, 2))
            if not h.is_zero():
                return h

    def laurent_poly(self, ring: CoeffRing, n: int, span: int = 3) -> MultiPoly:
        while True:
            terms = {tuple(self.rng.randint(-span, span) for _ in range(n)): self.coefficient(ring)
                     for _ in range(self.rng.randint(1, self.max_terms))}
            f = MultiPoly(ring, n, terms)
            if not f.is_zero():
                return f

    def coprime_pair(self, ring: LocalizedIntegers, n: int, order: MonomialOrder) -> tuple:
        """``(1 + p*h, p^j * w)`` with ``h`` free of constants and ``LC(w) = 1``.

        ``1 + p*h`` is invertible modulo ``p^j``, so ``<f, g>`` contains ``w``.
        """
        R, p = ring, ring.p
        while True:
            h = self.poly(R, n)
            h = MultiPoly(R, n, {e: c for e, c in h.terms.items() if any(e)})
            if not h.is_zero():
                break
        f = MultiPoly.constant(R, n, R.one()) + h.scale(R.from_int(p))
        w = self.poly(R, n, terms=self.rng.randint(1, 2))
        if R.is_unit(w.lc(order)):
            w = w.scale(R.inverse(w.lc(order)))
        else:
            top = tuple(k + (i == 0) for i, k in enumerate(w.lm(order)))
            w = w + MultiPoly.monomial(R, n, top, R.one())
        g = w.scale(R.from_int(p ** self.rng.randint(1, 3)))
        return f, g

    def relation_instance(self, ring: CoeffRing, n: int, k: int) -> tuple:
        """``(fs, Q, P)``: ``Q(fs) = 0`` with ``TC_lex(Q) = 1`` and ``P`` an inflation of it.

        ``Q = T(Y1, Y2) - Y3`` with ``f3 = T(f1, f2)`` and ``T`` trailing in
        ``Y1^j`` with coefficient 1.  ``P`` is ``Q`` inflated along ``X -> X^k``
        plus multiples of ``Y2*(Y3 - T)`` placed in every residue block, so the
        extraction has to discard them.
        """
        from .polyring import all_residues, frobenius_k
        R = ring
        one = MultiPoly.constant(R, n, R.one())
        f1 = self.poly(R, n, terms=2)
        f2 = self.poly(R, n, terms=2)
        j = self.rng.randint(0, 2)
        T = {(j, 0): one}
        for _ in range(self.rng.randint(1, 2)):
            beta = (self.rng.randint(0, 2), self.rng.randint(1, 2))
            T[beta] = MultiPoly.constant(R, n, self.coefficient(R))
        f3 = None
        for (a, b), c in T.items():
            term = c * f1 ** a * f2 ** b
            f3 = term if f3 is None else f3 + term
        Q = {(a, b, 0): c for (a, b), c in T.items()}
        Q[(0, 0, 1)] = -one
        # Y2*(Y3 - T) vanishes at (f1, f2, f3)
        Z = {(a, b + 1, 0): -c for (a, b), c in T.items()}
        Z[(0, 1, 1)] = one

        def add(P, beta, c):
            P[beta] = P[beta] + c if beta in P else c

        P: dict = {}
        for beta, c in Q.items():
            add(P, beta, frobenius_k(c, k))
        for alpha in all_residues(n, k):
            r = self.poly(R, n, terms=1)
            shift = tuple(a + k * self.rng.randint(0, 1) for a in alpha)
            for beta, c in Z.items():
                add(P, beta, frobenius_k(c * r, k).shift(shift))
        P = {b: c for b, c in P.items() if not c.is_zero()}
        return [f1, f2, f3], Q, P

    def nonneg_matrix(self, n: int, max_entry: int = 4) -> list:
        """A random nonnegative integer matrix with nonzero determinant."""
        from .polyring import det
        while True:
            M = [[self.rng.randint(0, max_entry) for _ in range(n)] for _ in range(n)]
            if det(M) != 0:
                return M

