"""Sparse multivariate Laurent polynomials over a :class:`CoeffRing`.

Terms live in a dict keyed by exponent tuples.  Iteration order carries no
meaning; anything order-sensitive goes through a :class:`MonomialOrder`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .coeffrings import CoeffRing, RingError, check_same_ring
from .monorder import MonomialOrder

Exp = tuple


class ZeroPolynomialError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def mono_mul(e: Exp, f: Exp) -> Exp:
    return tuple(a + b for a, b in zip(e, f))


def mono_div(e: Exp, f: Exp) -> Exp:
    return tuple(a - b for a, b in zip(e, f))


def mono_lcm(e: Exp, f: Exp) -> Exp:
    return tuple(max(a, b) for a, b in zip(e, f))


def mono_divides(e: Exp, f: Exp) -> bool:
    return all(a <= b for a, b in zip(e, f))


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "n", "terms")

    def __init__(self, ring: CoeffRing, n: int, terms: dict | None = None, *, _trusted: bool = False):
        self.ring = ring
        self.n = n
        if terms is None:
            terms = {}
        elif not _trusted:
            terms = {tuple(e): c for e, c in terms.items() if not ring.is_zero(c)}
            if any(len(e) != n for e in terms):
                raise ValueError("exponent length does not match variable count")
        self.terms = terms

    # -- constructors --
    @classmethod
    def zero(cls, ring, n):
        return cls(ring, n, {}, _trusted=True)

    @classmethod
    def constant(cls, ring, n, c):
        return cls(ring, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, ring, n, e, c=None):
        return cls(ring, n, {tuple(e): ring.one() if c is None else c})

    @classmethod
    def variable(cls, ring, n, i):
        e = [0] * n
        e[i] = 1
        return cls.monomial(ring, n, e)

    # -- basic predicates --
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_polynomial(self) -> bool:
        """True unless some exponent is negative (a genuinely Laurent element)."""
        return all(k >= 0 for e in self.terms for k in e)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def constant_coeff(self):
        return self.terms.get((0,) * self.n, self.ring.zero())

    def coeff(self, e):
        return self.terms.get(tuple(e), self.ring.zero())

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # -- arithmetic --
    def _check(self, other: "MultiPoly"):
        check_same_ring(self.ring, other.ring)
        if self.n != other.n:
            raise RingError("variable count mismatch")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.ring, self.n, self.ring.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = R.add(out[e], c)
                if R.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly(R, self.n, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return MultiPoly(R, self.n, {e: R.neg(c) for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                p = R.mul(c1, c2)
                if R.is_zero(p):
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                if e in out:
                    s = R.add(out[e], p)
                    if R.is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = p
        return MultiPoly(R, self.n, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        r = MultiPoly.constant(self.ring, self.n, self.ring.one())
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def scale(self, c) -> "MultiPoly":
        R = self.ring
        out = {}
        for e, v in self.terms.items():
            p = R.mul(c, v)
            if not R.is_zero(p):
                out[e] = p
        return MultiPoly(R, self.n, out, _trusted=True)

    def mul_term(self, c, m: Exp) -> "MultiPoly":
        """Multiply by the term ``c * X^m``."""
        R = self.ring
        out = {}
        for e, v in self.terms.items():
            p = R.mul(c, v)
            if not R.is_zero(p):
                out[tuple(a + b for a, b in zip(e, m))] = p
        return MultiPoly(R, self.n, out, _trusted=True)

    def shift(self, m: Exp) -> "MultiPoly":
        return MultiPoly(self.ring, self.n,
                         {tuple(a + b for a, b in zip(e, m)): c for e, c in self.terms.items()},
                         _trusted=True)

    def exact_div_scalar(self, c) -> "MultiPoly":
        R = self.ring
        return MultiPoly(R, self.n, {e: R.exact_div(v, c) for e, v in self.terms.items()})

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.ring, self.n, {e: fn(c) for e, c in self.terms.items()})

    # -- comparison --
    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.ring, self.n, self.ring.from_int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.ring != other.ring or self.n != other.n:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.ring.eq(c, other.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self):
        return f"MultiPoly({self.ring.descriptor}, {self.to_str()})"

    def to_str(self, order: MonomialOrder | None = None, names: Sequence[str] | None = None) -> str:
        from .parsing import format_poly
        return format_poly(self, order, names)

    __str__ = to_str

    # -- ordered data --
    def sorted_exps(self, order: MonomialOrder, descending: bool = True) -> list:
        return sorted(self.terms, key=order.key, reverse=descending)

    def lm(self, order: MonomialOrder) -> Exp:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def lc(self, order: MonomialOrder):
        return self.terms[self.lm(order)]

    def lt(self, order: MonomialOrder) -> "MultiPoly":
        e = self.lm(order)
        return MultiPoly(self.ring, self.n, {e: self.terms[e]}, _trusted=True)

    def tm(self, order: MonomialOrder) -> Exp:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no trailing monomial")
        return min(self.terms, key=order.key)

    def tc(self, order: MonomialOrder):
        return self.terms[self.tm(order)]

    # -- substitutions --
    def evaluate(self, values: Sequence) -> Any:
        """Substitute ring elements for the variables (nonnegative exponents only)."""
        R = self.ring
        acc = R.zero()
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k < 0:
                    raise ValueError("cannot evaluate a Laurent monomial")
                t = R.mul(t, R.pow(v, k))
            acc = R.add(acc, t)
        return acc


@dataclass(frozen=True)
class TermData:
    mdeg: Exp
    lc: Any
    lm: Exp
    lt: MultiPoly
    tc: Any
    tm: Exp
    tt: MultiPoly


def leading_data(f: MultiPoly, order: MonomialOrder) -> TermData:
    order.require_total()
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    exps = f.sorted_exps(order)
    hi, lo = exps[0], exps[-1]
    R, n = f.ring, f.n
    return TermData(
        mdeg=hi, lc=f.terms[hi], lm=hi,
        lt=MultiPoly(R, n, {hi: f.terms[hi]}, _trusted=True),
        tc=f.terms[lo], tm=lo,
        tt=MultiPoly(R, n, {lo: f.terms[lo]}, _trusted=True),
    )


def is_monic(f: MultiPoly, order: MonomialOrder) -> bool:
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    return f.ring.is_one(f.lc(order))


# -- integer matrices and monomial substitutions ------------------------------

def _check_square(M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("substitution matrix must be square")
    return n


def mat_vec(M: Sequence[Sequence[int]], e: Exp) -> Exp:
    return tuple(sum(a * k for a, k in zip(row, e)) for row in M)


def mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def det(M: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (Bareiss)."""
    n = _check_square(M)
    a = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(M):
    n = _check_square(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(M) if k != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def phi_m(f: MultiPoly, M: Sequence[Sequence[int]]) -> MultiPoly:
    """The substitution ``X_i -> prod_j X_j^{M[j][i]}``: exponent ``e`` goes to ``M e``."""
    n = _check_square(M)
    if n != f.n:
        raise ValueError("matrix size does not match variable count")
    out = MultiPoly.zero(f.ring, n)
    R = f.ring
    terms: dict = {}
    for e, c in f.terms.items():
        k = mat_vec(M, e)
        if k in terms:
            s = R.add(terms[k], c)
            if R.is_zero(s):
                del terms[k]
            else:
                terms[k] = s
        else:
            terms[k] = c
    out.terms = terms
    return out


def phi_l_matrix(M: Sequence[Sequence[int]]) -> tuple[int, list]:
    """``(k, L)`` with ``k = |det M|`` and ``L = k M^{-1}`` (integer)."""
    d = det(M)
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    s = 1 if d > 0 else -1
    L = [[s * x for x in row] for row in adjugate(M)]
    return abs(d), L


def frobenius_k(f: MultiPoly, k: int) -> MultiPoly:
    if k < 1:
        raise ValueError("k must be positive")
    return MultiPoly(f.ring, f.n, {tuple(k * a for a in e): c for e, c in f.terms.items()},
                     _trusted=True)


def deflate_k(f: MultiPoly, k: int) -> MultiPoly:
    """Inverse of :func:`frobenius_k` on the X^k-subring."""
    if any(a % k for e in f.terms for a in e):
        raise ValueError(f"polynomial is not in the X^{k} subring")
    return MultiPoly(f.ring, f.n, {tuple(a // k for a in e): c for e, c in f.terms.items()},
                     _trusted=True)


def block_decompose(f: MultiPoly, k: int) -> dict:
    """Split ``f = sum_alpha b_alpha X^alpha`` with each ``b_alpha`` in ``R[X^k]``.

    Keys range over ``{0..k-1}^n``; zero blocks are omitted.
    """
    if not f.is_polynomial():
        raise ValueError("block decomposition needs a polynomial, not a Laurent polynomial")
    blocks: dict = {}
    for e, c in f.terms.items():
        alpha = tuple(a % k for a in e)
        blocks.setdefault(alpha, {})[tuple(a - r for a, r in zip(e, alpha))] = c
    return {alpha: MultiPoly(f.ring, f.n, t, _trusted=True) for alpha, t in blocks.items()}


def block_reconstruct(blocks: dict, ring: CoeffRing, n: int) -> MultiPoly:
    out = MultiPoly.zero(ring, n)
    for alpha, b in blocks.items():
        out = out + b.shift(alpha)
    return out


def all_residues(n: int, k: int) -> Iterable[Exp]:
    return itertools.product(range(k), repeat=n)
