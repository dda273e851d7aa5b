"""Text grammar for polynomials and ring elements.

::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (['*'|'/'] power)*        # '*' may be omitted
    power  := atom ['^' int]
    atom   := number | '(' expr ')' | variable | ring atom

Variables are ``X1 .. Xn``; ``X``, ``Y``, ``Z`` are accepted as ``X1``, ``X2``,
``X3``.  Division is only by a constant and must be exact in the ring.  Ring
atoms are ``gen_a``, ``gen_b`` and ``t^(m+n*sqrt2)`` over ``Vsqrt2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .coeffrings import CoeffRing, RingError
from .monorder import MonomialOrder
from .polyring import MultiPoly

_ALIASES = {"X": 0, "Y": 1, "Z": 2}
_VAR = re.compile(r"[Xx](\d+)")


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, ring: CoeffRing, n: int, text: str, names: Sequence[str] | None):
        self.ring = ring
        self.n = n
        self.s = text
        self.i = 0
        self.names = {name: k for k, name in enumerate(names)} if names else None

    # -- lexing helpers --
    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def fail(self, msg: str):
        raise ParseError(f"{msg} at position {self.i} in {self.s!r}")

    def read_int(self) -> int:
        self.skip()
        m = re.compile(r"[+-]?\d+").match(self.s, self.i)
        if not m:
            self.fail("expected an integer")
        self.i = m.end()
        return int(m.group())

    def read_ident(self) -> str:
        self.skip()
        m = re.compile(r"[A-Za-z_][A-Za-z_0-9]*").match(self.s, self.i)
        if not m:
            self.fail("expected a name")
        self.i = m.end()
        return m.group()

    def read_parenthesized_raw(self) -> str:
        if not self.eat("("):
            self.fail("expected '('")
        depth, start = 1, self.i
        while self.i < len(self.s) and depth:
            if self.s[self.i] == "(":
                depth += 1
            elif self.s[self.i] == ")":
                depth -= 1
            self.i += 1
        if depth:
            self.fail("unbalanced parentheses")
        return self.s[start:self.i - 1]

    # -- grammar --
    def const(self, c) -> MultiPoly:
        return MultiPoly.constant(self.ring, self.n, c)

    def parse(self) -> MultiPoly:
        out = self.expr()
        if self.peek():
            self.fail("unexpected input")
        return out

    def expr(self) -> MultiPoly:
        neg = False
        if self.eat("-"):
            neg = True
        else:
            self.eat("+")
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            if self.eat("+"):
                acc = acc + self.term()
            elif self.eat("-"):
                acc = acc - self.term()
            else:
                return acc

    def _starts_atom(self) -> bool:
        ch = self.peek()
        return ch.isdigit() or ch == "(" or ch.isalpha() or ch == "_"

    def term(self) -> MultiPoly:
        acc = self.power()
        while True:
            if self.eat("*"):
                acc = acc * self.power()
            elif self.eat("/"):
                d = self.power()
                if not d.is_constant() or d.is_zero():
                    self.fail("division only by a nonzero constant")
                try:
                    acc = acc.exact_div_scalar(d.constant_coeff())
                except (RingError, ZeroDivisionError) as exc:
                    raise ParseError(str(exc)) from None
            elif self._starts_atom():
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.eat("^"):
            if self.peek() == "(":
                self.i += 1
                k = self.read_int()
                if not self.eat(")"):
                    self.fail("expected ')'")
            else:
                k = self.read_int()
            if k >= 0:
                return base ** k
            return self.invert_term(base) ** (-k)
        return base

    def invert_term(self, base: MultiPoly) -> MultiPoly:
        if not base.is_term():
            self.fail("negative exponent needs a single term")
        (e, c), = base.terms.items()
        if not self.ring.is_unit(c):
            self.fail("negative exponent of a term with non-unit coefficient")
        return MultiPoly.monomial(self.ring, self.n, tuple(-k for k in e), self.ring.inverse(c))

    def atom(self) -> MultiPoly:
        ch = self.peek()
        if ch == "(":
            self.i += 1
            inner = self.expr()
            if not self.eat(")"):
                self.fail("expected ')'")
            return inner
        if ch.isdigit():
            return self.const(self.ring.from_int(self.read_int()))
        if ch.isalpha() or ch == "_":
            name = self.read_ident()
            return self.named(name)
        self.fail("expected a number, variable or '('")

    def named(self, name: str) -> MultiPoly:
        idx = None
        if self.names is not None and name in self.names:
            idx = self.names[name]
        elif m := _VAR.fullmatch(name):
            idx = int(m.group(1)) - 1
        elif name in _ALIASES and self.n <= 3:
            idx = _ALIASES[name]
        if idx is not None:
            if not 0 <= idx < self.n:
                self.fail(f"variable {name} outside 1..{self.n}")
            return MultiPoly.variable(self.ring, self.n, idx)
        if name == "t":
            exponent = None
            save = self.i
            if self.eat("^"):
                if self.peek() == "(":
                    exponent = self.read_parenthesized_raw()
                else:
                    exponent = str(self.read_int())
            value = self.ring.atom("t", exponent)
            if value is None:
                self.i = save
                self.fail(f"ring {self.ring.descriptor} has no atom 't'")
            return self.const(value)
        value = self.ring.atom(name, None)
        if value is None:
            self.fail(f"unknown name {name!r}")
        return self.const(value)


def parse_poly(ring: CoeffRing, n: int, text: str, names: Sequence[str] | None = None) -> MultiPoly:
    try:
        return _Parser(ring, n, text, names).parse()
    except ParseError:
        raise
    except (RingError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def parse_ring_element(ring: CoeffRing, text: str):
    p = parse_poly(ring, 0, text)
    return p.constant_coeff()


# -- formatting ---------------------------------------------------------------

def _default_names(n: int) -> list:
    return [f"X{i + 1}" for i in range(n)]


def _coeff_parts(ring: CoeffRing, c) -> tuple:
    """Split a coefficient into (negative?, body, needs_parens)."""
    if isinstance(c, (int, Fraction)):
        neg = c < 0
        body = ring.format(-c if neg else c)
        return neg, body, "/" in body
    one = ring.one()
    if ring.eq(c, one):
        return False, "1", False
    if ring.eq(c, ring.neg(one)):
        return True, "1", False
    body = ring.format(c)
    flat = _strip_groups(body)
    if flat.startswith("-") and not re.search(r"[+-]", flat[1:]):
        return True, body[1:], False
    return False, body, bool(re.search(r"[ +/-]", flat))


def _strip_groups(text: str) -> str:
    """Drop parenthesized groups so only top-level operators remain."""
    out, depth = [], 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0:
            out.append(ch)
    return "".join(out)


def format_monomial(e, names: Sequence[str]) -> str:
    parts = []
    for k, name in zip(e, names):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}" if k > 0 else f"{name}^({k})")
    return "*".join(parts)


def format_poly(f: MultiPoly, order: MonomialOrder | None = None,
                names: Sequence[str] | None = None) -> str:
    """Deterministic text: terms sorted descending by ``order`` (plain tuple order if none)."""
    if f.is_zero():
        return "0"
    names = list(names) if names else _default_names(f.n)
    exps = f.sorted_exps(order) if order is not None else sorted(f.terms, reverse=True)
    out = ""
    for idx, e in enumerate(exps):
        neg, body, paren = _coeff_parts(f.ring, f.terms[e])
        mono = format_monomial(e, names)
        if mono:
            if body == "1":
                text = mono
            else:
                text = f"({body})*{mono}" if paren else f"{body}*{mono}"
        else:
            compound = bool(re.search(r"[+-]", _strip_groups(body)[1:]))
            text = f"({body})" if compound and len(exps) > 1 else body
        if idx == 0:
            out = ("-" if neg else "") + text
        else:
            out += (" - " if neg else " + ") + text
    return out
