import json
from fractions import Fraction

import pytest

from serreloc.coeffrings import (
    Integers, IntegersModPrimePower, LocalizedIntegers, RationalField, ValuationSqrt2, v_monomial,
)
from serreloc.monorder import grlex_order, idlex_order, lex_order, order_from_matrix
from serreloc.oracle import InstanceGen, oracle_lexdep_search
from serreloc.parsing import parse_poly
from serreloc.polygcd import UnsupportedRingError
from serreloc.polyring import MultiPoly, frobenius_k, phi_m
from serreloc.scalars import QuadReal
from serreloc.serrering import (
    DimOneCertificate, HypothesisError, NonMonicDenominatorError, as_fraction, bezout_serre,
    counterexample_report, counterexample_setup, dim_one_certificate, extract_relation,
    extract_relation_fractions, frac_normalize, gcd_serre, lex_dependence_pair,
    lt_of_one_plus_ax_b, saturation, ypoly_eval, ypoly_trailing,
)

Z = Integers()
Q = RationalField()
Z2 = LocalizedIntegers(2)
Z3 = LocalizedIntegers(3)
V = ValuationSqrt2()
A = v_monomial(QuadReal(1, 0))
B = v_monomial(QuadReal(0, 1))
LEX1 = lex_order(1)


def P(R, n, text):
    return parse_poly(R, n, text)


def one(R, n):
    return MultiPoly.constant(R, n, R.one())


# -- fractions ------------------------------------------------------------------

def test_fraction_construction():
    x = frac_normalize(P(Z2, 1, "2*X1"), one(Z2, 1), LEX1)
    assert x.num == P(Z2, 1, "2*X1")
    y = frac_normalize(P(Z2, 1, "X1^2 + X1"), P(Z2, 1, "X1 + 1"), LEX1)
    assert y == as_fraction(P(Z2, 1, "X1"), LEX1)
    z = frac_normalize(MultiPoly.zero(Z2, 1), P(Z2, 1, "X1 + 3"), LEX1)
    assert z.is_zero() and z.den == one(Z2, 1)
    with pytest.raises(NonMonicDenominatorError):
        frac_normalize(one(Z2, 1), P(Z2, 1, "2*X1 + 1"), LEX1)


def test_fraction_units():
    assert as_fraction(P(Z2, 1, "X1 + 2"), LEX1).is_unit()
    assert not as_fraction(P(Z2, 1, "2*X1 + 1"), LEX1).is_unit()
    inv = frac_normalize(one(Z2, 1), P(Z2, 1, "X1 + 2"), LEX1)
    assert inv * P(Z2, 1, "X1 + 2") == as_fraction(one(Z2, 1), LEX1)


# -- saturation ideals and certificates -----------------------------------------

def test_saturation_examples():
    assert saturation(Z, 12, 2).generator == 3
    s = saturation(Z2, Z2.from_int(8), Z2.from_int(2))
    assert (s.generator, s.n_used) == (1, 3)
    assert saturation(Z3, Z3.from_int(6), Z3.one()).generator == 6
    assert saturation(Z2, Z2.from_int(6), Z2.zero()).generator == 1
    assert saturation(V, B, A).n_used == 2
    R = IntegersModPrimePower(2, 3)
    assert saturation(R, 4, 2).n_used == 2


def test_closed_form_examples():
    cf = lt_of_one_plus_ax_b(Z2, Z2.from_int(2), Z2.from_int(8))
    assert cf.contains(0, Z2.one())
    cf = lt_of_one_plus_ax_b(Z2, Z2.one(), Z2.from_int(2))
    assert cf.contains(1, Z2.one()) and not cf.contains(0, Z2.one())
    assert cf.contains(0, Z2.from_int(2))
    cf = lt_of_one_plus_ax_b(Z2, Z2.zero(), Z2.zero())
    assert cf.contains(0, Z2.one())


def test_dim_one_certificate_examples():
    c = dim_one_certificate(Z2, Z2.from_int(2), Z2.from_int(4))
    assert (c.alpha, c.n, c.quotient) == (0, 2, 1)
    c = dim_one_certificate(Z3, Z3.from_int(2), Z3.from_int(3))
    assert (c.alpha, c.n) == (Fraction(1, 2), 0)
    c = dim_one_certificate(V, A, B)
    assert c.n == 2 and V.valuation(c.quotient) == QuadReal(2, -1)
    c = dim_one_certificate(Z, 12, 18)
    assert c.check()
    with pytest.raises(ValueError):
        dim_one_certificate(Z2, Z2.zero(), Z2.one())


def test_dim_one_certificate_json_round_trip():
    for R, a, b in ((Z2, Z2.from_int(6), Z2.from_int(40)), (V, A, B), (Z, 10, 4)):
        c = dim_one_certificate(R, a, b)
        back = DimOneCertificate.from_json(json.loads(json.dumps(c.to_json())))
        assert back.check() and back.n == c.n


@pytest.mark.parametrize("R", [Z2, Z3, IntegersModPrimePower(2, 3), V, Z, Q],
                         ids=lambda R: R.descriptor)
def test_certificates_on_random_pairs(R):
    gen = InstanceGen(seed=43, max_val=4)
    for _ in range(40):
        a, b = gen.coefficient(R), gen.coefficient(R)
        assert dim_one_certificate(R, a, b).check()
        w = lex_dependence_pair(R, a, b)
        assert w.check()
        n = dim_one_certificate(R, a, b).n
        assert set(w.P.terms) <= {(n, 0), (n + 1, 0), (0, 1)}


def test_lex_dependence_examples():
    w = lex_dependence_pair(Z2, Z2.from_int(2), Z2.from_int(4))
    assert w.P == P(Z2, 2, "X1^2 - X2")
    w = lex_dependence_pair(Q, Fraction(3), Fraction(5))
    assert w.check() and Q.is_one(w.trailing_coefficient)
    w = lex_dependence_pair(Z2, Z2.zero(), Z2.from_int(4))
    assert w.P == P(Z2, 2, "X1")


def test_lex_dependence_against_search():
    """The brute-force search never needs a larger trailing monomial than the certificate."""
    lex2 = lex_order(2)
    gen = InstanceGen(seed=47, max_val=3)
    for R in (Z2, Z, IntegersModPrimePower(3, 2)):
        for _ in range(15):
            a, b = gen.coefficient(R), gen.coefficient(R)
            w = lex_dependence_pair(R, a, b)
            found = oracle_lexdep_search(R, (a, b), max(w.P.total_degree(), 1))
            assert found is not None
            assert lex2.key(found.tm(lex2)) <= lex2.key(w.P.tm(lex2))


# -- relations along X -> X^k -----------------------------------------------------

def test_extract_relation_identity_for_k_1():
    f1, f2 = P(Z2, 1, "X1"), P(Z2, 1, "X1^2")
    rel = {(2, 0): one(Z2, 1), (0, 1): -one(Z2, 1)}
    assert extract_relation(rel, [f1, f2], 1, LEX1) == rel


def test_extract_relation_discards_other_blocks():
    f1, f2 = P(Z2, 1, "X1 + 1"), P(Z2, 1, "X1^2 + 2*X1 + 1")
    rel = {(2, 0): one(Z2, 1), (0, 1): -one(Z2, 1)}
    # X^3 * Y2 * (Y1^2 - Y2) vanishes on the inflated pair too and lives in block 1
    noise = P(Z2, 1, "X1^3")
    inflated = {(2, 0): one(Z2, 1), (0, 1): -one(Z2, 1), (2, 1): noise, (0, 2): -noise}
    assert extract_relation(inflated, [f1, f2], 2, LEX1) == rel


def test_extract_relation_monic_variant():
    f = P(Q, 1, "X1")
    Pk = {(0,): P(Q, 1, "X1^2 + X1^3"), (1,): P(Q, 1, "-1 - X1")}
    out = extract_relation(Pk, [f], 2, LEX1, variant="monic")
    assert out == {(0,): P(Q, 1, "X1"), (1,): P(Q, 1, "-1")}


def test_extract_relation_rejects_bad_input():
    f = P(Q, 1, "X1")
    with pytest.raises(HypothesisError):
        extract_relation({(0,): one(Q, 1), (1,): -one(Q, 1)}, [f], 2, LEX1)
    with pytest.raises(HypothesisError):
        extract_relation({(0,): P(Q, 1, "2*X1^2"), (1,): -one(Q, 1).scale(2)}, [f], 2, LEX1)


def test_extract_relation_random_instances():
    gen = InstanceGen(seed=53)
    for i in range(30):
        R = (Z2, Q, Z)[i % 3]
        n, k = 1 + i % 2, 2 + i % 2
        fs, Qrel, Pk = gen.relation_instance(R, n, k)
        assert ypoly_eval(Qrel, fs).is_zero()
        out = extract_relation(Pk, fs, k, grlex_order(n))
        assert ypoly_eval(out, fs).is_zero()
        assert out[ypoly_trailing(out)] == one(R, n)


def test_extract_relation_fractions():
    f = frac_normalize(one(Q, 1), P(Q, 1, "1 + X1"), LEX1)
    rel = {(0,): as_fraction(one(Q, 1), LEX1), (1,): as_fraction(P(Q, 1, "-1 - X1^2"), LEX1)}
    out = extract_relation_fractions(rel, [f], 2, LEX1)
    value = out[(0,)] + out[(1,)] * f
    assert value.is_zero()
    assert out[(0,)] == as_fraction(one(Q, 1), LEX1)


# -- gcd and Bezout ------------------------------------------------------------------

def test_gcd_examples():
    res = gcd_serre(P(Z2, 1, "2*X1*(1 + X1)"), P(Z2, 1, "2*(1 + X1)"), LEX1)
    assert res.gcd == as_fraction(P(Z2, 1, "2 + 2*X1"), LEX1)
    assert not res.is_unit()
    res = gcd_serre(P(Z2, 1, "4"), P(Z2, 1, "6"), LEX1)
    assert res.extraction == 2
    f = P(Z3, 2, "3*X1*X2 + X2^2")
    assert gcd_serre(f, f, grlex_order(2)).gcd == as_fraction(f, grlex_order(2))
    with pytest.raises(UnsupportedRingError):
        R = IntegersModPrimePower(2, 2)
        gcd_serre(P(R, 1, "X1"), P(R, 1, "2"), LEX1)


def test_bezout_examples():
    f, g = P(Z2, 1, "1 + 2*X1"), P(Z2, 1, "8")
    out = bezout_serre(f, g, LEX1)
    assert out.status == "identity"
    assert (out.identity.p0, out.identity.q0) == (P(Z2, 1, "1 - 2*X1 + 4*X1^2"), P(Z2, 1, "-X1^3"))
    out = bezout_serre(P(Q, 2, "X1"), P(Q, 2, "X2"), grlex_order(2))
    assert out.status == "identity"
    ident = out.identity
    assert ident.p * P(Q, 2, "X1") + ident.q * P(Q, 2, "X2") == as_fraction(one(Q, 2), grlex_order(2))
    assert bezout_serre(P(Z2, 1, "2*X1"), P(Z2, 1, "2"), LEX1).status == "not_coprime"
    _, order, f, g = counterexample_setup()
    assert bezout_serre(f, g, order, depth_limit=10).status == "not_found_at_depth"


def _identity_fractions(out, f, g, order):
    ident = out.identity
    assert ident.p * f + ident.q * g == as_fraction(one(f.ring, f.n), order)
    return ident.p, ident.q


@pytest.mark.parametrize("R", [Q, Z2], ids=lambda R: R.descriptor)
def test_bezout_survives_inflation_both_ways(R):
    gen = InstanceGen(seed=59, max_degree=2)
    checked = 0
    for _ in range(10):
        n = gen.rng.randint(1, 2)
        order = grlex_order(n)
        k = gen.rng.randint(2, 3)
        if R is Q:
            f, g = gen.poly(R, n, 2), gen.poly(R, n, 2)
        else:
            f, g = gen.coprime_pair(R, n, order)
        fk, gk = frobenius_k(f, k), frobenius_k(g, k)
        down = bezout_serre(fk, gk, order, size_limit=300)
        up = bezout_serre(f, g, order, size_limit=300)
        if down.status == "not_coprime" or up.status == "not_coprime":
            assert down.status == up.status
            continue
        if down.status != "identity" or up.status != "identity":
            continue
        checked += 1
        # an identity for the pair inflates to one for the inflated pair
        p, q = _identity_fractions(up, f, g, order)
        assert p.inflate(k) * fk + q.inflate(k) * gk == as_fraction(one(R, n), order)
        # and an identity for the inflated pair yields one for the pair
        pk, qk = _identity_fractions(down, fk, gk, order)
        rel = {(0, 0): as_fraction(one(R, n), order), (1, 0): -pk, (0, 1): -qk}
        out = extract_relation_fractions(rel, [as_fraction(f, order), as_fraction(g, order)], k, order)
        assert set(out) <= {(0, 0), (1, 0), (0, 1)}
        assert out[(0, 0)] == as_fraction(one(R, n), order)
        p2 = -out.get((1, 0), as_fraction(MultiPoly.zero(R, n), order))
        q2 = -out.get((0, 1), as_fraction(MultiPoly.zero(R, n), order))
        assert p2 * f + q2 * g == as_fraction(one(R, n), order)
    assert checked >= 5


def test_gcd_unit_is_invariant_under_inflation():
    gen = InstanceGen(seed=61, max_degree=3)
    for _ in range(25):
        n = gen.rng.randint(1, 2)
        order = grlex_order(n)
        f, g = gen.poly(Q, n), gen.poly(Q, n)
        if gen.rng.random() < 0.4:
            h = gen.poly(Q, n)
            f, g = f * h, g * h
        k = gen.rng.randint(2, 3)
        assert gcd_serre(f, g, order).is_unit() == \
            gcd_serre(frobenius_k(f, k), frobenius_k(g, k), order).is_unit()


def test_gcd_unit_is_invariant_under_phi_m():
    gen = InstanceGen(seed=67, max_degree=2)
    for _ in range(25):
        mat = gen.nonneg_matrix(2, 3)
        order = order_from_matrix(mat)
        f, g = gen.poly(Z2, 2), gen.poly(Z2, 2)
        if gen.rng.random() < 0.4:
            h = gen.poly(Z2, 2)
            f, g = f * h, g * h
        here = gcd_serre(f, g, order).is_unit()
        there = gcd_serre(phi_m(f, mat), phi_m(g, mat), idlex_order(2)).is_unit()
        assert here == there


# -- the irrational-order counterexample -------------------------------------------

def test_counterexample_depth_0_and_1():
    r0 = counterexample_report(0, contrast=False)
    assert sorted(v for _, v in r0.rows[0]) == [QuadReal(1, 0), QuadReal(0, 1)]
    r1 = counterexample_report(1, contrast=False)
    assert r1.first_valuation == QuadReal(-1, 1)


MIN_VALUATIONS = [QuadReal(1, 0), QuadReal(-1, 1), QuadReal(2, -1), QuadReal(3, -2), QuadReal(-4, 3),
                  QuadReal(-7, 5), QuadReal(10, -7), QuadReal(17, -12), QuadReal(-41, 29),
                  QuadReal(99, -70), QuadReal(-140, 99)]


def test_counterexample_depth_10():
    r = counterexample_report(10)
    assert r.min_valuations == MIN_VALUATIONS
    assert r.all_positive and r.all_below_bound and not r.unit_lc_found
    assert r.running_min_nonincreasing
    # the per-generation minimum is not monotone: sqrt2-1 < 2-sqrt2
    assert not r.strictly_decreasing
    assert r.lex_contrast.status == "identity"
    data = json.loads(json.dumps(r.to_json()))
    assert data["checks"]["first_valuation"]["exact"] == "-1+1*sqrt2"
