import decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from serreloc.scalars import (
    QuadReal, SQRT2, format_quad, parse_quad, parse_rational, parse_scalar, quad_cmp, quad_sign,
    quad_to_decimal, rational_cmp,
)

ints = st.integers(-10**12, 10**12)
quads = st.builds(QuadReal, ints, ints)


@pytest.mark.parametrize("x, sign", [
    (QuadReal(0, 0), 0),
    (QuadReal(-1, 1), 1),
    (QuadReal(3, -2), 1),
    (QuadReal(-3, 2), -1),
    (QuadReal(-2, 1), -1),
])
def test_quad_sign(x, sign):
    assert quad_sign(x) == sign


def test_quad_cmp_examples():
    assert quad_cmp(QuadReal(1, 0), QuadReal(0, 1)) == -1
    assert quad_cmp(QuadReal(2, 0), QuadReal(0, 1)) == 1
    assert quad_cmp(QuadReal(5, 7), QuadReal(5, 7)) == 0


def test_rational_cmp_examples():
    assert rational_cmp(Fraction(1, 3), Fraction(2, 6)) == 0
    assert rational_cmp(Fraction(-5, 2), Fraction(-3)) == 1
    assert rational_cmp(Fraction(0), Fraction(1)) == -1


def _sqrt2_decimal():
    ctx = decimal.Context(prec=110)
    return ctx, ctx.sqrt(decimal.Decimal(2))


@given(quads, quads)
def test_quad_cmp_matches_high_precision_decimal(x, y):
    ctx, r = _sqrt2_decimal()
    dx = ctx.add(decimal.Decimal(x.a), ctx.multiply(decimal.Decimal(x.b), r))
    dy = ctx.add(decimal.Decimal(y.a), ctx.multiply(decimal.Decimal(y.b), r))
    want = (dx > dy) - (dx < dy)
    assert quad_cmp(x, y) == want


@given(quads, quads, quads)
def test_quad_order_is_compatible_with_addition(x, y, z):
    if x < y:
        assert x + z < y + z


@given(quads, quads)
def test_quad_product_sign(x, y):
    assert quad_sign(x * y) == quad_sign(x) * quad_sign(y)


@given(quads)
def test_quad_text_round_trip(x):
    assert parse_quad(format_quad(x)) == x


def test_parse_literals():
    assert parse_quad("1+sqrt2") == QuadReal(1, 1)
    assert parse_quad("-4+3*sqrt2") == QuadReal(-4, 3)
    assert parse_quad("sqrt(2)") == SQRT2
    assert parse_rational("-7/21") == Fraction(-1, 3)
    assert parse_scalar("2*sqrt2") == QuadReal(0, 2)
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ValueError):
        parse_quad("1sqrt2")


def test_decimal_rendering():
    assert quad_to_decimal(QuadReal(-1, 1), 10) == "0.4142135624"
