"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 depth limit reached, 4 inputs not
coprime, 5 a result failed its own verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Sequence

from .coeffrings import RingError, ring_from_descriptor
from .monorder import OrderError, idlex_order, parse_order
from .parsing import ParseError, parse_poly, parse_ring_element
from .polyring import MultiPoly, SingularMatrixError, ZeroPolynomialError, phi_m
from .scalars import format_quad, quad_to_decimal

EXIT_OK, EXIT_INPUT, EXIT_DEPTH, EXIT_NOT_COPRIME, EXIT_VERIFY = 0, 2, 3, 4, 5


class InputError(Exception):
    pass


class VerifyFailure(Exception):
    pass


@dataclass
class CliConfig:
    ring: str = "Q"
    order: str = "lex"
    vars: int | None = None
    depth: int = 8
    json: bool = False
    trace: bool = False
    oracle: bool = False


# -- input handling ----------------------------------------------------------------

def _read_inputs(args) -> list:
    items = [a.strip() for a in args.inputs]
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    items.append(line)
    return items


_VARNUM = re.compile(r"[Xx](\d+)")


def _guess_vars(texts: Sequence[str], order_spec: str) -> int:
    if order_spec not in ("lex", "idlex", "grlex"):
        return len(order_spec.split(";")[0].split(","))
    n = 1
    for t in texts:
        n = max([n] + [int(k) for k in _VARNUM.findall(t)])
        if re.search(r"(?<![A-Za-z_])Z(?![A-Za-z_0-9])", t):
            n = max(n, 3)
        elif re.search(r"(?<![A-Za-z_])Y(?![A-Za-z_0-9])", t):
            n = max(n, 2)
    return n


def _setup(cfg: CliConfig, texts: Sequence[str]):
    R = ring_from_descriptor(cfg.ring)
    n = cfg.vars or _guess_vars(texts, cfg.order)
    order = parse_order(cfg.order, n)
    if order.n != n:
        raise InputError(f"order has {order.n} columns but {n} variables were requested")
    return R, n, order


def _polys(R, n, texts: Sequence[str], count: int | None = None) -> list:
    if count is not None and len(texts) != count:
        raise InputError(f"expected {count} polynomials, got {len(texts)}")
    if not texts:
        raise InputError("no polynomials given")
    return [parse_poly(R, n, t) for t in texts]


def _emit(cfg: CliConfig, data: dict, lines: Sequence[str]) -> None:
    if cfg.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- subcommands -------------------------------------------------------------------

def cmd_order(cfg: CliConfig, args) -> int:
    from .monorder import InvalidColumnError
    spec = args.inputs[0].strip() if args.inputs else cfg.order
    try:
        order = parse_order(spec, cfg.vars or _guess_vars([], spec))
    except InvalidColumnError as exc:
        _emit(cfg, {"spec": spec, "valid": False, "reason": "invalid-column", "detail": str(exc)},
              [f"{spec}: invalid-column ({exc})"])
        return EXIT_INPUT
    kind = "order" if order.is_total_order else "preorder"
    data = {"spec": spec, "valid": True, "kind": kind, "rational": order.is_rational,
            "graded": order.is_graded, "matrix": str(order.matrix)}
    words = [kind, "rational" if order.is_rational else "irrational",
             "graded" if order.is_graded else "not graded"]
    _emit(cfg, data, [f"{spec}: " + ", ".join(words)])
    return EXIT_OK


def cmd_ltideal(cfg: CliConfig, args) -> int:
    from .oracle import OracleBounds, oracle_term_membership
    from .sgroebner import lt_ideal, presentation_to_json
    texts = _read_inputs(args)
    R, n, order = _setup(cfg, texts)
    G = _polys(R, n, texts)
    pres, trace = lt_ideal(G, order, depth_limit=cfg.depth)
    minimal = pres.minimal_generators()
    whole = pres.is_whole_ring()
    witness_idx = None
    if whole:
        witness_idx = next((k for k, e in enumerate(trace.entries)
                            if e.poly.is_constant() and R.is_unit(e.poly.constant_coeff())), None)
    data = presentation_to_json(pres, order)
    data.update({"minimal_generators": [t.to_str(order) for t in minimal],
                 "stop": trace.stop, "depth_used": trace.depth_used})
    lines = [f"leading terms: {', '.join(t.to_str(order) for t in minimal)}",
             f"stop: {trace.stop} at depth {trace.depth_used}"]
    if witness_idx is not None:
        # rebuild the unit from the inputs before printing it
        cof = trace.cofactors(witness_idx, len(G))
        unit = sum((h * g for h, g in zip(cof, G)), MultiPoly.zero(R, n))
        if unit != trace.entries[witness_idx].poly:
            raise VerifyFailure("unit witness does not follow from the inputs")
        data["witness"] = unit.to_str(order)
        data["witness_cofactors"] = [h.to_str(order) for h in cof]
        lines.append(f"whole ring: {unit.to_str(order)} = "
                     + " + ".join(f"({h.to_str(order)})*g{k + 1}" for k, h in enumerate(cof)))
    elif whole:
        lines.append("whole ring")
    if cfg.trace:
        data["trace"] = trace.to_json()
        lines.append(json.dumps(trace.to_json(), indent=2))
    if cfg.oracle:
        ok = all(oracle_term_membership(G, t, order, OracleBounds(cfg.depth))
                 for t in minimal)
        data["oracle_confirms_generators"] = ok
        lines.append(f"oracle: generators {'confirmed' if ok else 'NOT confirmed'} "
                     f"within multiplier degree {cfg.depth}")
    _emit(cfg, data, lines)
    if trace.stop in ("depth_limit", "size_limit"):
        return EXIT_DEPTH
    return EXIT_OK


def cmd_spoly(cfg: CliConfig, args) -> int:
    from .sgroebner import s_poly_data
    texts = _read_inputs(args)
    R, n, order = _setup(cfg, texts)
    f, g = _polys(R, n, texts, 2)
    d = s_poly_data(f, g, order)
    if d.value != f.mul_term(d.c1, d.m1) + g.mul_term(d.c2, d.m2):
        raise VerifyFailure("S-polynomial recomputation mismatch")
    mono = MultiPoly.monomial
    data = {"s": d.value.to_str(order), "c1": R.format(d.c1), "m1": list(d.m1),
            "c2": R.format(d.c2), "m2": list(d.m2)}
    _emit(cfg, data, [
        f"S = {d.value.to_str(order)}",
        f"  = ({R.format(d.c1)})*{mono(R, n, d.m1, R.one()).to_str(order)}*f"
        f" + ({R.format(d.c2)})*{mono(R, n, d.m2, R.one()).to_str(order)}*g",
    ])
    return EXIT_OK


def cmd_phi(cfg: CliConfig, args) -> int:
    from .sgroebner import transport_s_poly
    texts = _read_inputs(args)
    R, n, order = _setup(cfg, texts)
    M = [list(r) for r in order.matrix.rows]
    if order.matrix.irrational or any(not isinstance(x, int) or x < 0 for r in M for x in r):
        raise InputError("phi needs a nonnegative integer matrix order")
    if len(M) != n:
        raise InputError("phi needs a square matrix")
    fs = _polys(R, n, texts)
    if len(fs) > 2:
        raise InputError("phi takes one or two polynomials")
    target = idlex_order(n)
    data: dict = {"images": []}
    lines = []
    for f in fs:
        img = phi_m(f, M)
        lt_ok = phi_m(f.lt(order), M) == img.lt(target)
        if not lt_ok:
            raise VerifyFailure("phi_M(LT f) differs from LT(phi_M f)")
        data["images"].append(img.to_str(target))
        lines.append(f"phi({f.to_str(order)}) = {img.to_str(target)}")
    if len(fs) == 2:
        N, ok = transport_s_poly(fs[0], fs[1], M, order)
        data["N"] = list(N)
        lines.append(f"phi(S(f, g)) = X^{list(N)} * S_lex(phi f, phi g): verified")
    _emit(cfg, data, lines)
    return EXIT_OK


def cmd_bezout(cfg: CliConfig, args) -> int:
    from .serrering import bezout_serre
    texts = _read_inputs(args)
    R, n, order = _setup(cfg, texts)
    f, g = _polys(R, n, texts, 2)
    out = bezout_serre(f, g, order, depth_limit=cfg.depth)
    if out.status == "not_coprime":
        gtxt = str(out.gcd.gcd)
        _emit(cfg, {"status": out.status, "gcd": gtxt}, [f"not coprime: gcd = {gtxt}"])
        return EXIT_NOT_COPRIME
    if out.status != "identity":
        _emit(cfg, {"status": out.status, "depth": cfg.depth},
              [f"no identity found up to depth {cfg.depth}"])
        return EXIT_DEPTH
    ident = out.identity
    # independent re-check by cross-multiplication: p0*f + q0*g = s with LC(s) = 1
    s = ident.p0 * f + ident.q0 * g
    if s != ident.witness or not R.is_one(s.lc(order)):
        raise VerifyFailure("Bezout identity failed re-verification")
    data = {"status": "identity", **ident.to_json(order)}
    lines = [f"p = ({ident.p0.to_str(order)}) / ({ident.witness.to_str(order)})",
             f"q = ({ident.q0.to_str(order)}) / ({ident.witness.to_str(order)})",
             f"p*f + q*g = 1 verified (denominator leading coefficient 1, depth {ident.depth})"]
    if cfg.trace:
        data["trace"] = out.search.trace.to_json()
        lines.append(json.dumps(data["trace"], indent=2))
    _emit(cfg, data, lines)
    return EXIT_OK


def cmd_gcd(cfg: CliConfig, args) -> int:
    from .polygcd import poly_divides
    from .serrering import gcd_serre
    texts = _read_inputs(args)
    R, n, order = _setup(cfg, texts)
    f, g = _polys(R, n, texts, 2)
    res = gcd_serre(f, g, order)
    h = res.gcd.num
    if not (poly_divides(h, f) and poly_divides(h, g)):
        raise VerifyFailure("gcd does not divide both inputs")
    data = {"gcd": str(res.gcd), "unit": res.is_unit()}
    lines = [f"gcd = {res.gcd}" + (" (a unit)" if res.is_unit() else "")]
    if res.extraction is not None:
        data["ring_gcd"] = R.format(res.extraction)
        lines.append(f"gcd in {R.descriptor}: {R.format(res.extraction)}")
    _emit(cfg, data, lines)
    return EXIT_OK


def _ring_pair(cfg: CliConfig, args) -> tuple:
    texts = _read_inputs(args)
    if len(texts) != 2:
        raise InputError("expected two ring elements a b")
    R = ring_from_descriptor(cfg.ring)
    return R, parse_ring_element(R, texts[0]), parse_ring_element(R, texts[1])


def cmd_dimcert(cfg: CliConfig, args) -> int:
    from .serrering import dim_one_certificate
    R, a, b = _ring_pair(cfg, args)
    if R.is_zero(a) or R.is_zero(b):
        raise InputError("a and b must be nonzero")
    cert = dim_one_certificate(R, a, b)
    if not cert.check():
        raise VerifyFailure("certificate failed re-verification")
    data = cert.to_json()
    _emit(cfg, data, [
        f"(1 - alpha*a)*a^n = quotient*b with",
        f"  alpha = {data['alpha']}, n = {cert.n}, quotient = {data['quotient']}",
        "verified",
    ])
    return EXIT_OK


def cmd_lexdep(cfg: CliConfig, args) -> int:
    from .monorder import lex_order
    from .oracle import oracle_lexdep_search
    from .serrering import lex_dependence_pair
    R, a, b = _ring_pair(cfg, args)
    w = lex_dependence_pair(R, a, b)
    if not w.check():
        raise VerifyFailure("lex-dependence witness failed re-verification")
    names = ["Y1", "Y2"]
    lex2 = lex_order(2)
    data = {"P": w.P.to_str(lex2, names), "trailing_coefficient": R.format(w.trailing_coefficient)}
    lines = [f"P = {data['P']}", "P(a, b) = 0 and TC_lex(P) = 1 verified"]
    if cfg.oracle:
        bound = max(sum(e) for e in w.P.terms)
        hit = oracle_lexdep_search(R, [a, b], bound)
        data["oracle"] = None if hit is None else hit.to_str(lex2, names)
        lines.append(f"oracle (degree <= {bound}): {data['oracle'] or 'none found'}")
        if hit is None:
            raise VerifyFailure("oracle found no dependence although a witness exists")
    _emit(cfg, data, lines)
    return EXIT_OK


def cmd_counterexample(cfg: CliConfig, args) -> int:
    from .serrering import counterexample_report
    rep = counterexample_report(cfg.depth)
    data = rep.to_json()
    lines = ["gen  new  min LC valuation (exact)   approx (20 digits)"]
    for q, row in enumerate(rep.rows):
        m = rep.min_valuations[q]
        exact = format_quad(m) if m is not None else "-"
        approx = quad_to_decimal(m, 20) if m is not None else "-"
        lines.append(f"{q:>3}  {len(row):>3}  {exact:<25}  {approx}")
    if rep.first_valuation is not None:
        lines.append(f"first S-polynomial LC valuation: {format_quad(rep.first_valuation)}")
    checks = data["checks"]
    lines += [
        f"all new LC valuations > 0:              {checks['all_positive']}",
        f"all new LC valuations < 1+sqrt2:        {checks['all_below_1_plus_sqrt2']}",
        f"per-generation minimum strictly falls:  {checks['min_strictly_decreasing']}",
        f"running minimum non-increasing:         {checks['running_min_nonincreasing']}",
        f"unit leading coefficient found:         {checks['unit_lc_found']}",
        f"stop: {rep.stop}; lex contrast: {data['lex_contrast']}",
    ]
    _emit(cfg, data, lines)
    return EXIT_OK


COMMANDS = {
    "order": cmd_order, "ltideal": cmd_ltideal, "spoly": cmd_spoly, "phi": cmd_phi,
    "bezout": cmd_bezout, "gcd": cmd_gcd, "dimcert": cmd_dimcert, "lexdep": cmd_lexdep,
    "counterexample": cmd_counterexample,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="serreloc", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("inputs", nargs="*", help="polynomials, ring elements or an order spec")
    parser.add_argument("--ring", default="Q", help="Q, Z, Zp:P, Zmod:P^A or Vsqrt2")
    parser.add_argument("--order", default="lex",
                        help="lex, idlex, grlex or a matrix like '1,1;1,0' or '1,sqrt2'")
    parser.add_argument("--vars", type=int, default=None)
    parser.add_argument("--depth", type=int, default=8)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--trace", action="store_true")
    parser.add_argument("--file", help="read inputs, one per line ('#' starts a comment)")
    parser.add_argument("--oracle", action="store_true", help="cross-check with the bounded oracle")
    return parser


def _protect_negatives(argv: Sequence[str]) -> list:
    # "-1+X" is an input, not a flag; a leading space hides it from argparse
    return [" " + a if len(a) > 1 and a[0] == "-" and a[1] not in "-h" else a for a in argv]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _protect_negatives(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = CliConfig(args.ring, args.order, args.vars, args.depth, args.json, args.trace, args.oracle)
    if cfg.depth < 0:
        print("error: --depth must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](cfg, args)
    except VerifyFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, ParseError, RingError, OrderError, ZeroPolynomialError,
            SingularMatrixError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
