"""Monomial preorders given by real matrices.

``X^e < X^f`` iff ``M e <_lex M f`` where the first row of ``M`` is the most
significant.  Entries are exact: integers for rational orders (rows are scaled
to clear denominators, which does not change the preorder) or
:class:`~serreloc.scalars.QuadReal` when some entry involves sqrt2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .scalars import QuadReal, OrderScalar, parse_scalar, scalar_sign


class OrderError(ValueError):
    pass


class InvalidColumnError(OrderError):
    pass


@dataclass(frozen=True)
class OrderMatrix:
    rows: tuple
    irrational: bool = False

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in self.rows)


def _to_int_row(row: Sequence[OrderScalar]) -> list:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // math.gcd(den, x.denominator)
    out = []
    for x in row:
        if isinstance(x, QuadReal):
            out.append(x * den)
        else:
            y = Fraction(x) * den
            out.append(y.numerator)
    return out


def _min_multiplier(neg, pos) -> int:
    """Some integer c >= 0 with c*pos + neg >= 0 (pos > 0)."""
    if isinstance(neg, int) and isinstance(pos, int):
        return -(neg // pos) if neg < 0 else 0

    def approx(x):
        return float(x.a + x.b * math.sqrt(2)) if isinstance(x, QuadReal) else float(x)

    c = max(0, math.floor(-approx(neg) / approx(pos)) - 1)
    while scalar_sign(pos * c + neg) < 0:
        c += 1
    return c


def validate_matrix(raw: Sequence[Sequence[OrderScalar]]) -> OrderMatrix:
    """Check the column condition and return a nonnegative representative."""
    if not raw or not raw[0]:
        raise OrderError("empty matrix")
    n = len(raw[0])
    if any(len(r) != n for r in raw):
        raise OrderError("ragged matrix")
    irrational = any(isinstance(x, QuadReal) and x.b != 0 for r in raw for x in r)
    rows = [_to_int_row(r) for r in raw]
    if irrational:
        rows = [[x if isinstance(x, QuadReal) else QuadReal(x, 0) for x in r] for r in rows]
    else:
        rows = [[x.a if isinstance(x, QuadReal) else x for x in r] for r in rows]

    for j in range(n):
        first = next((rows[i][j] for i in range(len(rows)) if scalar_sign(rows[i][j]) != 0), None)
        if first is None:
            raise InvalidColumnError(f"column {j + 1} is zero")
        if scalar_sign(first) < 0:
            raise InvalidColumnError(f"column {j + 1} has negative first nonzero entry")

    # add multiples of the sum of the upper rows to clear negative entries
    for i in range(1, len(rows)):
        upper = [sum((rows[r][j] for r in range(i)), start=rows[0][j] * 0) for j in range(n)]
        c = 0
        for j in range(n):
            if scalar_sign(rows[i][j]) < 0:
                c = max(c, _min_multiplier(rows[i][j], upper[j]))
        if c:
            rows[i] = [rows[i][j] + upper[j] * c for j in range(n)]
    return OrderMatrix(tuple(tuple(r) for r in rows), irrational)


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination (rows kept primitive)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            row = [p * a[r][c] - a[r][col] * a[rank][c] for c in range(n)]
            g = math.gcd(*row)
            a[r] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == m:
            break
    return rank


def _rational_parts(mat: OrderMatrix) -> list:
    if not mat.irrational:
        return [list(r) for r in mat.rows]
    out = []
    for r in mat.rows:
        out.append([x.a for x in r])
        out.append([x.b for x in r])
    return out


@dataclass(frozen=True)
class OrderFlags:
    is_total_order: bool
    is_rational: bool
    is_graded: bool


def classify_order(mat: OrderMatrix) -> OrderFlags:
    # a tie X^e ~ X^f means M(e - f) = 0 for an integer vector; splitting each
    # entry into rational and sqrt2 parts turns this into a rational kernel
    total = exact_rank(_rational_parts(mat)) == mat.n
    graded = all(scalar_sign(x) > 0 for x in mat.rows[0])
    return OrderFlags(total, not mat.irrational, graded)


@dataclass(frozen=True)
class MonomialOrder:
    matrix: OrderMatrix
    name: str = ""
    flags: OrderFlags = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "flags", classify_order(self.matrix))

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def is_total_order(self) -> bool:
        return self.flags.is_total_order

    @property
    def is_rational(self) -> bool:
        return self.flags.is_rational

    @property
    def is_graded(self) -> bool:
        return self.flags.is_graded

    def key(self, e: Sequence[int]) -> tuple:
        """Sort key: the vector M e (compared lexicographically)."""
        if self.matrix.irrational:
            return tuple(QuadReal(sum(x.a * k for x, k in zip(row, e)),
                                  sum(x.b * k for x, k in zip(row, e)))
                         for row in self.matrix.rows)
        return tuple(sum(x * k for x, k in zip(row, e)) for row in self.matrix.rows)

    def require_total(self) -> None:
        if not self.is_total_order:
            raise OrderError(f"order {self} is only a preorder")

    def __str__(self):
        return self.name or str(self.matrix)


def compare(order: MonomialOrder, e: Sequence[int], f: Sequence[int]) -> int:
    if len(e) != order.n or len(f) != order.n:
        raise OrderError("dimension mismatch")
    ke, kf = order.key(e), order.key(f)
    return (ke > kf) - (ke < kf)


def order_from_matrix(raw, name: str = "") -> MonomialOrder:
    return MonomialOrder(validate_matrix(raw), name)


def lex_order(n: int) -> MonomialOrder:
    """Lex with X1 < X2 < ... < Xn (row i selects variable n+1-i)."""
    rows = [[1 if j == n - 1 - i else 0 for j in range(n)] for i in range(n)]
    return order_from_matrix(rows, "lex")


def idlex_order(n: int) -> MonomialOrder:
    """Lex with X1 > X2 > ... > Xn: the order defined by the identity matrix.

    This is the target of the monomial transport ``phi_M``: ``M e <_lex M f``
    compares the first coordinate first.
    """
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    return order_from_matrix(rows, "idlex")


def grlex_order(n: int) -> MonomialOrder:
    """Total degree, ties broken by X1 > X2 > ... (matrix [[1,1],[1,0]] for n=2)."""
    rows = [[1] * n] + [[1 if j == i else 0 for j in range(n)] for i in range(n - 1)]
    return order_from_matrix(rows, "grlex")


def parse_order(spec: str, n: int) -> MonomialOrder:
    """``lex``, ``idlex``, ``grlex`` or a matrix like ``"1,1;1,0"`` / ``"1,sqrt2"``."""
    s = spec.strip()
    if s == "lex":
        return lex_order(n)
    if s == "idlex":
        return idlex_order(n)
    if s == "grlex":
        return grlex_order(n)
    try:
        raw = [[parse_scalar(x) for x in row.split(",")] for row in s.split(";")]
    except ValueError as exc:
        raise OrderError(f"cannot parse order {spec!r}: {exc}") from None
    return order_from_matrix(raw)
