import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from serreloc.monorder import (
    InvalidColumnError, OrderError, classify_order, compare, grlex_order, idlex_order, lex_order,
    order_from_matrix, parse_order, validate_matrix,
)
from serreloc.scalars import SQRT2, QuadReal

IRRATIONAL = order_from_matrix([[1, SQRT2]])


def test_valid_matrices():
    validate_matrix([[1, 1], [1, 0]])
    validate_matrix([[1, SQRT2]])
    validate_matrix([[0, 1], [1, 0]])


@pytest.mark.parametrize("raw", [[[-1, 1]], [[0, 1], [0, 2]], [[0, 1], [-1, 0]], [[1, -SQRT2]]])
def test_invalid_columns(raw):
    with pytest.raises(InvalidColumnError):
        validate_matrix(raw)


def test_negative_entries_are_cleared_below_the_first_row():
    mat = validate_matrix([[1, 1], [-3, Fraction(1, 2)]])
    assert all(x >= 0 for row in mat.rows for x in row)


def test_compare_examples():
    grlex = order_from_matrix([[1, 1], [1, 0]])
    assert compare(grlex, (2, 0), (0, 1)) == 1
    assert compare(IRRATIONAL, (1, 0), (0, 1)) == -1
    assert compare(grlex, (3, 4), (3, 4)) == 0
    with pytest.raises(OrderError):
        compare(grlex, (1,), (0, 1))


def test_classification():
    f = classify_order(validate_matrix([[1, 1], [1, 0]]))
    assert (f.is_total_order, f.is_rational, f.is_graded) == (True, True, True)
    f = classify_order(validate_matrix([[1, SQRT2]]))
    assert (f.is_total_order, f.is_rational, f.is_graded) == (True, False, True)
    assert not classify_order(validate_matrix([[1, 1]])).is_total_order
    assert not classify_order(validate_matrix([[1, 2, 1], [0, 0, 1]])).is_total_order
    # 1 + sqrt2 - (sqrt2) - 1 = 0 ties X1*X2 with X3*X4
    assert not order_from_matrix([[1, SQRT2, SQRT2, 1]]).is_total_order


def test_lex_direction():
    lex = lex_order(2)
    assert compare(lex, (0, 1), (1, 0)) == 1
    assert compare(lex, (1, 3), (0, 3)) == 1
    assert compare(lex_order(1), (3,), (2,)) == 1
    assert compare(idlex_order(2), (1, 0), (0, 5)) == 1


def test_parse_order():
    assert parse_order("1,1;1,0", 2).matrix == grlex_order(2).matrix
    assert not parse_order("1,sqrt2", 2).is_rational
    assert parse_order("lex", 3).n == 3
    with pytest.raises(OrderError):
        parse_order("1,x", 2)


ORDERS = [lex_order(3), idlex_order(3), grlex_order(3), order_from_matrix([[2, 1, 3], [0, 1, 0], [1, 0, 0]]),
          order_from_matrix([[1, SQRT2]]), order_from_matrix([[2, 1 + SQRT2]])]
exps = st.lists(st.integers(-6, 6), min_size=3, max_size=3).map(tuple)


def _fit(order, e):
    return e[:order.n]


@pytest.mark.parametrize("order", ORDERS, ids=str)
def test_total_order_axioms(order):
    assert order.is_total_order
    rng = random.Random(0)
    pts = [tuple(rng.randint(-5, 5) for _ in range(order.n)) for _ in range(60)]
    for e in pts:
        for f in pts:
            c = compare(order, e, f)
            assert c == -compare(order, f, e)
            assert (c == 0) == (e == f)
    for _ in range(2000):
        e, f, g = rng.sample(pts, 3)
        if compare(order, e, f) < 0 and compare(order, f, g) < 0:
            assert compare(order, e, g) < 0


@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(e=exps, f=exps, g=exps)
def test_compatible_with_multiplication(order, e, f, g):
    e, f, g = _fit(order, e), _fit(order, f), _fit(order, g)
    shifted = compare(order, tuple(a + b for a, b in zip(e, g)), tuple(a + b for a, b in zip(f, g)))
    assert shifted == compare(order, e, f)


@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(e=st.lists(st.integers(0, 6), min_size=3, max_size=3).map(tuple))
def test_nonnegative_exponents_are_above_one(order, e):
    e = _fit(order, e)
    if any(e):
        assert compare(order, e, (0,) * order.n) == 1


def test_normalization_keeps_the_order():
    raw = [[1, 2, 1], [-5, 1, 0], [0, -1, 1]]
    normalized = order_from_matrix(raw)
    rng = random.Random(1)
    for _ in range(10**4):
        e = tuple(rng.randint(-4, 4) for _ in range(3))
        f = tuple(rng.randint(-4, 4) for _ in range(3))
        mine = (tuple(sum(a * k for a, k in zip(r, e)) for r in raw) >
                tuple(sum(a * k for a, k in zip(r, f)) for r in raw))
        assert mine == (compare(normalized, e, f) > 0)


def test_irrational_keys_are_exact():
    assert IRRATIONAL.key((1, 1)) == (QuadReal(1, 1),)
