import pytest

from serreloc.coeffrings import (
    Integers, IntegersModPrimePower, LocalizedIntegers, RationalField, ValuationSqrt2,
)
from serreloc.monorder import lex_order
from serreloc.oracle import InstanceGen
from serreloc.parsing import parse_poly
from serreloc.polygcd import (
    UnsupportedRingError, canonical_associate, poly_divides, poly_exact_div, poly_gcd, ring_gcd,
)
from serreloc.polyring import MultiPoly

Z = Integers()
Q = RationalField()
Z2 = LocalizedIntegers(2)
V = ValuationSqrt2()


def P(R, n, text):
    return parse_poly(R, n, text)


def test_content_and_primitive_part():
    f = P(Z2, 1, "2*X1*(1 + X1)")
    g = P(Z2, 1, "2*(1 + X1)")
    assert poly_gcd(f, g) == P(Z2, 1, "2 + 2*X1")


def test_integer_gcd_is_positive():
    assert poly_gcd(P(Z, 2, "-6*X1*X2 - 6*X2"), P(Z, 2, "4*X1^2 - 4")) == P(Z, 2, "2*X1 + 2")


def test_rational_gcd_is_monic():
    assert poly_gcd(P(Q, 2, "3*X1^2 - 3*X2^2"), P(Q, 2, "2*X1 + 2*X2")) == P(Q, 2, "X1 + X2")


def test_coprime_and_trivial_cases():
    assert poly_gcd(P(Q, 2, "X1"), P(Q, 2, "X2")) == P(Q, 2, "1")
    f = P(Z, 2, "X1^2*X2 + 3")
    assert poly_gcd(f, MultiPoly.zero(Z, 2)) == f
    assert poly_gcd(f, f) == f


def test_vsqrt2_gcd():
    f = P(V, 1, "gen_a*X1^2 - gen_a")
    g = P(V, 1, "gen_b*X1 + gen_b")
    h = poly_gcd(f, g)
    assert poly_divides(h, f) and poly_divides(h, g)
    assert h.total_degree() == 1
    assert V.valuation(h.lc(lex_order(1))) == V.valuation(V.gcd(
        V.parse("gen_a"), V.parse("gen_b")))


def test_zmod_is_rejected():
    R = IntegersModPrimePower(2, 3)
    with pytest.raises(UnsupportedRingError):
        poly_gcd(P(R, 1, "X1"), P(R, 1, "2"))
    with pytest.raises(UnsupportedRingError):
        ring_gcd(R, 2, 4)


def test_canonical_associates():
    assert canonical_associate(Z, -12) == 12
    assert canonical_associate(Z2, Z2.from_int(12)) == 4
    assert canonical_associate(Q, Q.from_int(-5)) == 1


def test_exact_division():
    assert poly_exact_div(P(Z, 2, "X1^2 - X2^2"), P(Z, 2, "X1 - X2")) == P(Z, 2, "X1 + X2")
    assert not poly_divides(P(Z, 1, "2*X1 + 1"), P(Z, 1, "X1^2"))


@pytest.mark.parametrize("R", [Z, Q, Z2, LocalizedIntegers(3)], ids=lambda R: R.descriptor)
def test_common_factor_is_recovered(R):
    gen = InstanceGen(seed=41, max_degree=2, max_val=2)
    for _ in range(25):
        n = gen.rng.randint(1, 2)
        h, a, b = gen.poly(R, n), gen.poly(R, n), gen.poly(R, n)
        f, g = h * a, h * b
        d = poly_gcd(f, g)
        assert poly_divides(d, f) and poly_divides(d, g)
        assert poly_divides(h, d)
