"""S-polynomials over valuation rings and leading-term ideals by saturation.

The saturation engine keeps every S-polynomial together with the pair it came
from and the two term multipliers, so any element can be rewritten as a
combination of the input generators (see :meth:`SaturationTrace.cofactors`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Sequence

from .coeffrings import CoeffRing, Integers, IntegersModPrimePower, RingError
from .monorder import MonomialOrder, idlex_order
from .polyring import (MultiPoly, ZeroPolynomialError, mono_div, mono_divides, mono_lcm,
                       phi_m)


class IncomparableCoefficientsError(RingError):
    """Neither leading coefficient divides the other (only possible over Z)."""


class VerificationError(AssertionError):
    pass


class FactorizationError(ValueError):
    pass


# -- single S-polynomials ---------------------------------------------------

@dataclass(frozen=True)
class SPolyData:
    """``s = c1*X^m1*f + c2*X^m2*g``."""

    value: MultiPoly
    c1: Any
    m1: tuple
    c2: Any
    m2: tuple


def s_poly_data(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> SPolyData:
    order.require_total()
    R, n = f.ring, f.n
    if f.is_zero() or g.is_zero():
        zero = (0,) * n
        return SPolyData(MultiPoly.zero(R, n), R.zero(), zero, R.zero(), zero)
    a, b = f.lm(order), g.lm(order)
    lf, lg = f.terms[a], g.terms[b]
    gamma = mono_lcm(a, b)
    m1, m2 = mono_div(gamma, a), mono_div(gamma, b)
    if R.divides(lg, lf):
        c1, c2 = R.one(), R.neg(R.exact_div(lf, lg))
    elif R.divides(lf, lg):
        c1, c2 = R.exact_div(lg, lf), R.neg(R.one())
    else:
        raise IncomparableCoefficientsError(
            f"leading coefficients {R.format(lf)} and {R.format(lg)} are incomparable")
    value = f.mul_term(c1, m1) + g.mul_term(c2, m2)
    return SPolyData(value, c1, m1, c2, m2)


def s_poly(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    return s_poly_data(f, g, order).value


def _gcd_combination(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> SPolyData:
    """Over Z: ``u*X^m1*f + v*X^m2*g`` with leading coefficient ``gcd(LC f, LC g)``."""
    a, b = f.lm(order), g.lm(order)
    x, y = f.terms[a], g.terms[b]
    gamma = mono_lcm(a, b)
    u, v = _ext_gcd(x, y)[1:]
    m1, m2 = mono_div(gamma, a), mono_div(gamma, b)
    return SPolyData(f.mul_term(u, m1) + g.mul_term(v, m2), u, m1, v, m2)


def _lcm_combination(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> SPolyData:
    """Over Z: the S-polynomial cancelling ``lcm(LC f, LC g)``."""
    a, b = f.lm(order), g.lm(order)
    x, y = f.terms[a], g.terms[b]
    L = abs(x * y) // _ext_gcd(x, y)[0]
    gamma = mono_lcm(a, b)
    m1, m2 = mono_div(gamma, a), mono_div(gamma, b)
    c1, c2 = L // x, -(L // y)
    return SPolyData(f.mul_term(c1, m1) + g.mul_term(c2, m2), c1, m1, c2, m2)


def _annihilator_multiple(f: MultiPoly, order: MonomialOrder) -> SPolyData | None:
    """Over Z/p^a: ``p^(a - v(LC f)) * f``, which kills the leading term."""
    R = f.ring
    v = R.valuation(f.lc(order))
    if v == 0:
        return None
    c = R.from_int(R.p ** (R.alpha - v))
    zero = (0,) * f.n
    return SPolyData(f.scale(c), c, zero, R.zero(), zero)


def top_reduce(p: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder) -> MultiPoly:
    """Cancel leading terms of ``p`` by term multiples of ``basis`` while possible."""
    R = p.ring
    lts = [(_lt_tuple(g, order), g) for g in basis if not g.is_zero()]
    while not p.is_zero():
        e, c = _lt_tuple(p, order)
        for (m, a), g in lts:
            if mono_divides(m, e) and R.divides(a, c):
                p = p - g.mul_term(R.exact_div(c, a), mono_div(e, m))
                break
        else:
            return p
    return p


def _top_reduce_steps(p: MultiPoly, entries: Sequence["SEntry"], lts: Sequence[tuple],
                      order: MonomialOrder) -> tuple:
    """Top-reduce ``p`` by the entries; returns the remainder and the steps taken."""
    R = p.ring
    steps = []
    while not p.is_zero():
        e, c = _lt_tuple(p, order)
        for k, (m, a) in enumerate(lts):
            if mono_divides(m, e) and R.divides(a, c):
                coef, shift = R.neg(R.exact_div(c, a)), mono_div(e, m)
                p = p + entries[k].poly.mul_term(coef, shift)
                steps.append((coef, shift, k))
                break
        else:
            break
    return p, tuple(steps)


def _ext_gcd(x: int, y: int) -> tuple:
    """``(d, u, v)`` with ``u*x + v*y = d = gcd(x, y) >= 0``."""
    r0, r1, s0, s1, t0, t1 = x, y, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


# -- S-sets with derivations ------------------------------------------------

@dataclass
class SEntry:
    poly: MultiPoly
    generation: int
    parents: tuple | None = None      # (i, j) indices into the entry list
    mult: tuple | None = None         # (c1, m1, c2, m2)
    origin: int | None = None         # index of the input generator
    steps: tuple = ()                 # reduction steps (c, m, k): add c*X^m*entries[k]


def _assoc_signature(p: MultiPoly) -> tuple:
    R = p.ring
    return tuple(sorted((e, R.assoc_key(c)) for e, c in p.terms.items()))


def _low(p: MultiPoly) -> tuple:
    return tuple(min(k) for k in zip(*p.terms))


def strip_monomial(p: MultiPoly) -> MultiPoly:
    """Divide out the largest monomial dividing every term."""
    low = _low(p)
    if not any(low):
        return p
    return p.shift(tuple(-k for k in low))


class _AssocIndex:
    """Buckets polynomials so associates (``p = u*q``, ``u`` a unit) are found quickly.

    With ``monomial=True`` two polynomials are also identified when they
    differ by a monomial factor.
    """

    def __init__(self, order: MonomialOrder, monomial: bool = False):
        self.order = order
        self.monomial = monomial
        self.buckets: dict = {}

    def _key(self, p):
        return strip_monomial(p) if self.monomial else p

    def find(self, p: MultiPoly, entries: Sequence[SEntry]) -> int | None:
        """An entry ``q`` with ``p = u*X^m*q`` (``m = 0`` unless ``monomial``)."""
        R = p.ring
        raw, p = p, self._key(p)
        lm = p.lm(self.order)
        for idx in self.buckets.get(_assoc_signature(p), ()):
            q_raw = entries[idx].poly
            q = self._key(q_raw)
            if lm not in q.terms:
                continue
            for u in R.associate_units(p.terms[lm], q.terms[lm]):
                if p == q.scale(u):
                    # only a multiple of q is redundant; a proper divisor of q is new
                    if self.monomial and not mono_divides(_low(q_raw), _low(raw)):
                        break
                    return idx
        return None

    def add(self, p: MultiPoly, idx: int):
        self.buckets.setdefault(_assoc_signature(self._key(p)), []).append(idx)


def s_set_step(G: Sequence[MultiPoly], order: MonomialOrder) -> list:
    """``G`` together with all pairwise S-polynomials, zeros dropped, deduplicated up to units."""
    entries: list = []
    index = _AssocIndex(order)
    for g in G:
        if g.is_zero():
            continue
        if index.find(g, entries) is None:
            index.add(g, len(entries))
            entries.append(SEntry(g, 0))
    base = len(entries)
    for i in range(base):
        for j in range(i + 1, base):
            s = s_poly(entries[i].poly, entries[j].poly, order)
            if s.is_zero() or index.find(s, entries) is not None:
                continue
            index.add(s, len(entries))
            entries.append(SEntry(s, 1, (i, j)))
    return [e.poly for e in entries]


# -- leading-term presentations ------------------------------------------------

def _term(p: MultiPoly) -> tuple:
    (e, c), = p.terms.items()
    return e, c


def term_in_ideal(gens: Sequence[tuple], ring: CoeffRing, e: tuple, c) -> bool:
    """Is ``c*X^e`` in the ideal generated by the terms ``(exp, coeff)`` in ``gens``?"""
    if ring.is_zero(c):
        return True
    coeffs = [a for (m, a) in gens if mono_divides(m, e)]
    if not coeffs:
        return False
    if isinstance(ring, Integers):
        return ring.divides(reduce(ring.gcd, coeffs), c)
    if ring.is_field or ring.is_valuation_ring:
        return any(ring.divides(a, c) for a in coeffs)
    raise RingError(f"term membership is not implemented over {ring.descriptor}")


@dataclass
class LTIdealPresentation:
    ring: CoeffRing
    n: int
    generators: list                  # one-term MultiPoly, discovery order
    source: "SaturationTrace | None" = None

    def terms(self) -> list:
        return [_term(t) for t in self.generators]

    def contains(self, t: MultiPoly) -> bool:
        return lt_membership(self, t)

    def is_whole_ring(self) -> bool:
        return term_in_ideal(self.terms(), self.ring, (0,) * self.n, self.ring.one())

    def minimal_generators(self) -> list:
        """Drop generators lying in the ideal of the others (first occurrence kept)."""
        kept: list = []
        for t in self.generators:
            e, c = _term(t)
            if not term_in_ideal([_term(k) for k in kept], self.ring, e, c):
                kept = [k for k in kept if not term_in_ideal([(e, c)], self.ring, *_term(k))]
                kept.append(t)
        return kept


def lt_membership(pres: LTIdealPresentation, t: MultiPoly) -> bool:
    if not t.is_term():
        raise ValueError("membership query needs a single nonzero term")
    e, c = _term(t)
    return term_in_ideal(pres.terms(), pres.ring, e, c)


@dataclass
class SaturationTrace:
    order: MonomialOrder
    entries: list                     # SEntry, in discovery order
    generation_sizes: list            # number of new entries per generation
    new_lt_per_generation: list
    stop: str = "depth_limit"
    depth_used: int = 0
    dedup: str = "unit"
    reduced: bool = False
    _cof: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self) -> CoeffRing:
        return self.entries[0].poly.ring

    @property
    def n(self) -> int:
        return self.entries[0].poly.n

    def generation(self, q: int) -> list:
        return [e.poly for e in self.entries if e.generation == q]

    def snapshot(self, q: int) -> list:
        """The S-set ``S^q`` (deduplicated)."""
        return [e.poly for e in self.entries if e.generation <= q]

    @property
    def generations(self) -> list:
        return [self.generation(q) for q in range(len(self.generation_sizes))]

    def cofactors(self, idx: int, n_inputs: int) -> list:
        """Polynomials ``h_k`` with ``entries[idx] = sum_k h_k * input_k``."""
        if idx in self._cof:
            return self._cof[idx]
        R, n = self.ring, self.n
        ent = self.entries[idx]
        if ent.parents is None:
            out = [MultiPoly.zero(R, n) for _ in range(n_inputs)]
            out[ent.origin] = MultiPoly.constant(R, n, R.one())
        else:
            i, j = ent.parents
            for k in (i, j, *(st[2] for st in ent.steps)):
                if k not in self._cof:
                    self.cofactors(k, n_inputs)
            c1, m1, c2, m2 = ent.mult
            ci, cj = self._cof[i], self._cof[j]
            out = [a.mul_term(c1, m1) + b.mul_term(c2, m2) for a, b in zip(ci, cj)]
            for c, m, k in ent.steps:
                out = [a + b.mul_term(c, m) for a, b in zip(out, self._cof[k])]
        self._cof[idx] = out
        return out

    def to_json(self, names: Sequence[str] | None = None) -> dict:
        R = self.ring
        return {
            "ring": R.descriptor,
            "n": self.n,
            "order": [[str(x) for x in row] for row in self.order.matrix.rows],
            "generations": [[p.to_str(self.order, names) for p in gen] for gen in self.generations],
            "derivations": [
                {"origin": e.origin} if e.parents is None else {
                    "parents": list(e.parents),
                    "c1": R.format(e.mult[0]), "m1": list(e.mult[1]),
                    "c2": R.format(e.mult[2]), "m2": list(e.mult[3]),
                    **({"steps": [[R.format(c), list(m), k] for c, m, k in e.steps]}
                       if e.steps else {}),
                }
                for e in self.entries
            ],
            "new_lt_per_generation": list(self.new_lt_per_generation),
            "stop": self.stop,
            "depth_used": self.depth_used,
            "dedup": self.dedup,
            "reduced": self.reduced,
        }


def trace_from_json(data: dict, order: MonomialOrder | None = None) -> SaturationTrace:
    from .coeffrings import ring_from_descriptor
    from .monorder import order_from_matrix
    from .parsing import parse_poly
    from .scalars import parse_scalar

    R = ring_from_descriptor(data["ring"])
    n = data["n"]
    if order is None:
        order = order_from_matrix([[parse_scalar(x) for x in row] for row in data["order"]])
    entries: list = []
    derivs = data["derivations"]
    for q, gen in enumerate(data["generations"]):
        for text in gen:
            d = derivs[len(entries)]
            p = parse_poly(R, n, text)
            if "origin" in d:
                entries.append(SEntry(p, q, origin=d["origin"]))
            else:
                steps = tuple((R.parse(c), tuple(m), k) for c, m, k in d.get("steps", ()))
                entries.append(SEntry(p, q, tuple(d["parents"]),
                                      (R.parse(d["c1"]), tuple(d["m1"]),
                                       R.parse(d["c2"]), tuple(d["m2"])), steps=steps))
    return SaturationTrace(order, entries, [len(g) for g in data["generations"]],
                           list(data["new_lt_per_generation"]), data["stop"], data["depth_used"],
                           data.get("dedup", "unit"), data.get("reduced", False))


def _lt_tuple(p: MultiPoly, order: MonomialOrder) -> tuple:
    e = p.lm(order)
    return e, p.terms[e]


def saturate(G: Sequence[MultiPoly], order: MonomialOrder, depth_limit: int,
             stop_on_monic: bool = False, size_limit: int | None = None,
             dedup: str = "unit", reduce: bool = False) -> SaturationTrace:
    """Iterated S-sets ``S^0 ⊆ S^1 ⊆ ...`` with derivations.

    Generation ``q`` holds the S-polynomials of every pair involving an element
    of generation ``q-1``.  The run stops as ``"stabilized"`` once every such
    S-polynomial top-reduces to zero modulo ``S^(q-1)`` (Buchberger's
    criterion, so the leading terms of the set generate the leading-term
    ideal) or once a unit constant appears.  Over Z, pairs with incomparable
    leading coefficients contribute both the lcm S-polynomial and the gcd
    combination; over Z/p^a each element also contributes its annihilator
    multiple.

    With ``reduce=True`` each S-polynomial is first top-reduced by the current
    set (the steps are recorded in the derivation) and dropped when it
    reduces to zero.  This is plain Buchberger completion and keeps the sets
    much smaller; the default keeps raw S-polynomials.
    """
    order.require_total()
    if depth_limit < 0:
        raise ValueError("depth_limit must be nonnegative")
    nonzero = [g for g in G if not g.is_zero()]
    if not nonzero:
        raise ZeroPolynomialError("all generators are zero")
    R = nonzero[0].ring
    for g in nonzero:
        if not g.is_polynomial():
            raise ValueError("generators must be polynomials, not Laurent polynomials")

    if dedup not in ("unit", "unit_monomial"):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    entries: list = []
    index = _AssocIndex(order, monomial=dedup == "unit_monomial")
    lts: list = []
    for k, g in enumerate(G):
        if g.is_zero() or index.find(g, entries) is not None:
            continue
        index.add(g, len(entries))
        entries.append(SEntry(g, 0, origin=k))
    for ent in entries:
        lts.append(_lt_tuple(ent.poly, order))

    def has_unit_lc(p):
        return R.is_unit(p.lc(order))

    trace = SaturationTrace(order, entries, [len(entries)], [len(entries)], dedup=dedup,
                            reduced=reduce)
    n = entries[0].poly.n
    zero_exp = (0,) * n
    split_gcd = isinstance(R, Integers)
    annihilate = isinstance(R, IntegersModPrimePower)

    def whole_ring():
        return term_in_ideal(lts, R, zero_exp, R.one())

    if whole_ring() or (len(entries) == 1 and not annihilate):
        trace.stop, trace.depth_used = "stabilized", 0
        return trace
    if stop_on_monic and any(has_unit_lc(e.poly) for e in entries):
        trace.stop, trace.depth_used = "monic_found", 0
        return trace

    def over_size():
        return size_limit is not None and len(entries) > size_limit

    prev_start = 0
    for q in range(1, depth_limit + 1):
        size_before = len(entries)
        new_lt_terms: list = []
        produced: list = []           # every candidate, kept or not
        for j in range(prev_start, size_before):
            fj = entries[j].poly
            jobs = []
            if annihilate:
                jobs.append(((j, j), [_annihilator_multiple(fj, order)]))
            for i in range(j):
                fi = entries[i].poly
                try:
                    jobs.append(((i, j), [s_poly_data(fi, fj, order)]))
                except IncomparableCoefficientsError:
                    if not split_gcd:
                        raise
                    jobs.append(((i, j), [_lcm_combination(fi, fj, order),
                                          _gcd_combination(fi, fj, order)]))
            for parents, datas in jobs:
                for data in datas:
                    if data is None or data.value.is_zero():
                        continue
                    s = data.value
                    steps: tuple = ()
                    if reduce:
                        s, steps = _top_reduce_steps(s, entries, lts, order)
                        if s.is_zero():
                            continue
                    produced.append(s)
                    if index.find(s, entries) is not None:
                        continue
                    index.add(s, len(entries))
                    entries.append(SEntry(s, q, parents, (data.c1, data.m1, data.c2, data.m2),
                                          steps=steps))
                    t = _lt_tuple(s, order)
                    if not term_in_ideal(lts, R, *t):
                        new_lt_terms.append(t)
                    if reduce:
                        lts.append(t)
                    if over_size():
                        break
                if over_size():
                    break
            if over_size():
                break
        added = len(entries) - size_before
        trace.generation_sizes.append(added)
        if not reduce:
            for ent in entries[size_before:]:
                lts.append(_lt_tuple(ent.poly, order))
        trace.new_lt_per_generation.append(len(new_lt_terms))
        trace.depth_used = q
        if over_size():
            trace.stop = "size_limit"
            return trace
        if whole_ring():
            trace.stop = "stabilized"
            return trace
        if not new_lt_terms:
            basis = [e.poly for e in entries[:size_before]]
            if all(top_reduce(s, basis, order).is_zero() for s in produced):
                trace.stop = "stabilized"
                return trace
        if stop_on_monic and any(has_unit_lc(e.poly) for e in entries[size_before:]):
            trace.stop = "monic_found"
            return trace
        prev_start = size_before
    trace.stop = "depth_limit"
    trace.depth_used = depth_limit
    return trace


def lt_ideal(G: Sequence[MultiPoly], order: MonomialOrder, depth_limit: int = 8,
             size_limit: int | None = None) -> tuple:
    """Leading-term ideal of ``<G>`` from the saturated S-set.

    Returns ``(presentation, trace)``; ``trace.stop`` tells whether the
    presentation is the fixpoint or only a lower bound.
    """
    trace = saturate(G, order, depth_limit, size_limit=size_limit)
    gens = [e.poly.lt(order) for e in trace.entries]
    return LTIdealPresentation(trace.ring, trace.n, gens, trace), trace


# -- monic membership -------------------------------------------------------

@dataclass
class MonicResult:
    found: bool
    witness: MultiPoly | None
    witness_index: int | None
    trace: SaturationTrace

    @property
    def status(self) -> str:
        if self.found:
            return "found"
        return "not_found" if self.trace.stop == "stabilized" else "not_found_at_depth"


def monic_membership(G: Sequence[MultiPoly], order: MonomialOrder, depth_limit: int = 8,
                     size_limit: int | None = None, dedup: str = "unit_monomial",
                     reduce: bool = True) -> MonicResult:
    """Semidecide whether ``<G>`` contains a polynomial with unit leading coefficient.

    By default the S-polynomials are top-reduced as they arrive, so a
    stabilized run is a completed basis and ``not_found`` is definitive.
    Monomial multiples of earlier elements never change the answer and are
    dropped.
    """
    trace = saturate(G, order, depth_limit, stop_on_monic=True, size_limit=size_limit,
                     dedup=dedup, reduce=reduce)
    R = trace.ring
    best = None
    for idx, ent in enumerate(trace.entries):
        if R.is_unit(ent.poly.lc(order)):
            # prefer the smallest leading monomial among unit-LC elements
            if best is None or order.key(ent.poly.lm(order)) < order.key(trace.entries[best].poly.lm(order)):
                best = idx
    if best is None:
        return MonicResult(False, None, None, trace)
    p = trace.entries[best].poly
    w = p.scale(R.inverse(p.lc(order)))
    return MonicResult(True, w, best, trace)


# -- transport lemmas -------------------------------------------------------

def _phi_exp(M, e):
    return tuple(sum(a * k for a, k in zip(row, e)) for row in M)


def transport_s_poly(f: MultiPoly, g: MultiPoly, M, order_M: MonomialOrder,
                     check: bool = True, target: MonomialOrder | None = None) -> tuple:
    """``N`` with ``phi_M(S_order_M(f, g)) = X^N * S_lex(phi_M f, phi_M g)``.

    ``target`` defaults to the identity-matrix lex order, the order that
    ``phi_M`` transports ``order_M`` onto.
    """
    if any(a < 0 for row in M for a in row):
        raise ValueError("transport needs a nonnegative matrix")
    target = target or idlex_order(f.n)
    a, b = f.lm(order_M), g.lm(order_M)
    top = _phi_exp(M, mono_lcm(a, b))
    bottom = mono_lcm(_phi_exp(M, a), _phi_exp(M, b))
    N = mono_div(top, bottom)
    verified = None
    if check:
        lhs = phi_m(s_poly(f, g, order_M), M)
        rhs = s_poly(phi_m(f, M), phi_m(g, M), target).shift(N)
        verified = lhs == rhs
        if not verified:
            raise VerificationError("transported S-polynomial identity failed")
    return N, verified


def scale_s_poly(f: MultiPoly, g: MultiPoly, m1: tuple, m2: tuple, order: MonomialOrder,
                 check: bool = True) -> tuple:
    """``N`` with ``S(X^m1 f, X^m2 g) = X^N * S(f, g)``."""
    a, b = f.lm(order), g.lm(order)
    top = mono_lcm(tuple(x + y for x, y in zip(m1, a)), tuple(x + y for x, y in zip(m2, b)))
    N = mono_div(top, mono_lcm(a, b))
    verified = None
    if check:
        lhs = s_poly(f.shift(m1), g.shift(m2), order)
        rhs = s_poly(f, g, order).shift(N)
        verified = lhs == rhs
        if not verified:
            raise VerificationError("scaled S-polynomial identity failed")
    return N, verified


# -- factorization of the leading-term ideal --------------------------------

@dataclass
class LTFactorization:
    a: Any
    J_generators: list
    monomial_witness: tuple


def lt_factorization(pres: LTIdealPresentation) -> LTFactorization:
    """``LT(I) = a * J`` with ``J`` containing a monomial with coefficient 1."""
    R = pres.ring
    if not pres.generators:
        raise FactorizationError("empty presentation")
    if not R.is_valuation_ring and not R.is_field:
        raise FactorizationError(f"needs a valuation ring, got {R.descriptor}")
    terms = pres.terms()
    a = terms[0][1]
    for _, c in terms[1:]:
        if not R.divides(a, c):
            a = c
    J: list = []
    witness = None
    for e, c in terms:
        q = R.exact_div(c, a)
        if R.is_unit(q):
            q = R.one()
            if witness is None:
                witness = e
        J.append(MultiPoly.monomial(R, pres.n, e, q))
    if witness is None:
        raise FactorizationError("no unit coefficient after division; saturate deeper")
    return LTFactorization(a, J, witness)


def presentation_to_json(pres: LTIdealPresentation, order: MonomialOrder,
                         names: Sequence[str] | None = None) -> dict:
    return {
        "ring": pres.ring.descriptor,
        "n": pres.n,
        "generators": [t.to_str(order, names) for t in pres.generators],
        "whole_ring": pres.is_whole_ring(),
    }


def presentation_from_json(data: dict) -> LTIdealPresentation:
    from .coeffrings import ring_from_descriptor
    from .parsing import parse_poly
    R = ring_from_descriptor(data["ring"])
    return LTIdealPresentation(R, data["n"], [parse_poly(R, data["n"], s) for s in data["generators"]])


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
