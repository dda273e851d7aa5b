"""Exact computations in the localized polynomial rings R_<<X1..Xn>>.

Matrix monomial orders, S-polynomial saturation over valuation rings,
monomial transport to lex, Bezout identities and Krull-dimension
certificates.
"""

from .scalars import QuadReal, SQRT2, quad_sign, quad_cmp, rational_cmp, parse_quad
from .coeffrings import (
    CoeffRing, RationalField, Integers, LocalizedIntegers, IntegersModPrimePower,
    ValuationSqrt2, RingError, NotDivisibleError, ring_from_descriptor,
)
from .monorder import (
    MonomialOrder, OrderError, InvalidColumnError, compare, classify_order,
    validate_matrix, order_from_matrix, lex_order, idlex_order, grlex_order, parse_order,
)
from .polyring import (
    MultiPoly, leading_data, is_monic, phi_m, phi_l_matrix, frobenius_k, deflate_k,
    block_decompose,
)
from .parsing import ParseError, parse_poly, parse_ring_element, format_poly
from .sgroebner import (
    IncomparableCoefficientsError, VerificationError, s_poly, s_poly_data, s_set_step, saturate,
    lt_ideal, lt_membership, LTIdealPresentation, SaturationTrace, monic_membership,
    transport_s_poly, scale_s_poly, lt_factorization, top_reduce,
)
from .polygcd import UnsupportedRingError, poly_gcd, canonical_associate
from .serrering import (
    SerreFraction, saturation, lt_of_one_plus_ax_b, dim_one_certificate, DimOneCertificate,
    lex_dependence_pair, extract_relation, extract_relation_fractions, gcd_serre, bezout_serre,
    counterexample_report,
)
from .oracle import InstanceGen, OracleBounds, oracle_term_membership, oracle_lexdep_search

__all__ = [name for name in dir() if not name.startswith("_")]
