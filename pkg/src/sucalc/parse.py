"""Recursive-descent parser for ring, series and operation literals.

Grammar (whitespace is insignificant):

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' INT)?
    atom  := INT | 'b'N | 'u' | 'v' | 'd'K | '(' expr ')'

``bN`` is the generator [CP^N], ``u``/``v`` are formal variables (series
literals only), ``dK`` is the operation d_K (operation literals only).
Division is allowed by rational constants only, so printed output such as
``-3/2*b1^3`` parses back unchanged.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GradedPoly
from .fgl import FglContext
from .ops import SuOp
from .series import PowerSeries, embed

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z]\d*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


@dataclass
class Tok:
    kind: str  # num, id, op, end
    value: str
    pos: int


def tokenize(text: str) -> list[Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            toks.append(Tok("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(Tok("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            toks.append(Tok("op", ch, m.start(3)))
        pos = m.end()
    toks.append(Tok("end", "", len(text.rstrip()) if text.strip() else 0))
    return toks


class _Rational:
    """A bare rational constant (kept separate so '/' can be checked)."""
    __slots__ = ("q",)

    def __init__(self, q):
        self.q = Fraction(q)


class _Parser:
    def __init__(self, text: str, ctx: FglContext, mode: str, order: int | None = None):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.cap = ctx.weight_cap
        self.mode = mode  # poly, series, op
        self.order = order if order is not None else ctx.full_order
        self.nvars = 1

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self):
        if self.peek().kind == "end":
            self.error("empty expression")
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().value!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            op = self.take()
            w = self.term()
            v = self.add(v, w, op)
        return v

    def term(self):
        v = self.unary()
        while self.peek().kind == "op" and self.peek().value in "*/":
            op = self.take()
            w = self.unary()
            v = self.mul(v, w, op) if op.value == "*" else self.div(v, w, op)
        return v

    def unary(self):
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            v = self.unary()
            return v if t.value == "+" else self.neg(v)
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            op = self.take()
            e = self.take()
            if e.kind != "num":
                self.error("exponent must be a non-negative integer", e)
            v = self.pow(v, int(e.value), op)
        return v

    def atom(self):
        t = self.take()
        if t.kind == "num":
            return _Rational(int(t.value))
        if t.kind == "op" and t.value == "(":
            v = self.expr()
            c = self.take()
            if c.kind != "op" or c.value != ")":
                self.error("expected ')'", c)
            return v
        if t.kind == "id":
            return self.ident(t)
        if t.kind == "end":
            self.error("unexpected end of input", t)
        self.error(f"unexpected {t.value!r}", t)

    # atoms

    def ident(self, t: Tok):
        name = t.value
        if name[0] == "b" and len(name) > 1:
            n = int(name[1:])
            if n < 1:
                self.error(f"unknown generator {name}", t)
            if n > self.cap:
                self.error(f"generator {name} has weight over the cap {self.cap}", t)
            return GradedPoly.gen(n, self.cap)
        if name in ("u", "v") and self.mode == "series":
            if name == "v":
                self.nvars = 2
            return ("var", name)
        if name[0] == "d" and len(name) > 1 and self.mode == "op":
            k = int(name[1:])
            return SuOp({k: GradedPoly.one(self.cap)}, -k, self.cap, None)
        self.error(f"unknown symbol {name}", t)

    # value algebra: rationals, polys, variables/series, ops

    def _series(self, v, nvars):
        zero = GradedPoly.zero(self.cap)
        if isinstance(v, tuple):
            var = 0 if v[1] == "u" else 1
            return PowerSeries.variable(var, self.order, zero, nvars)
        if isinstance(v, _Rational):
            v = GradedPoly.const(v.q, self.cap)
        if isinstance(v, GradedPoly):
            return PowerSeries.constant(v, self.order, zero, nvars)
        if v.nvars < nvars:
            return embed(v, nvars, 0)
        return v

    def _poly(self, v):
        return GradedPoly.const(v.q, self.cap) if isinstance(v, _Rational) else v

    def _is_series(self, v):
        return isinstance(v, (tuple, PowerSeries))

    def add(self, a, b, op):
        if isinstance(a, _Rational) and isinstance(b, _Rational):
            return _Rational(a.q + b.q if op.value == "+" else a.q - b.q)
        if self._is_series(a) or self._is_series(b):
            nv = 2 if self.nvars == 2 else 1
            x, y = self._series(a, nv), self._series(b, nv)
            return x + y if op.value == "+" else x - y
        if isinstance(a, SuOp) or isinstance(b, SuOp):
            if not (isinstance(a, SuOp) and isinstance(b, SuOp)):
                self.error("cannot add a ring element to an operation", op)
            if not a.is_zero() and not b.is_zero() and a.defect != b.defect:
                self.error("operation terms have inconsistent degrees", op)
            return a + b if op.value == "+" else a - b
        a, b = self._poly(a), self._poly(b)
        return a + b if op.value == "+" else a - b

    def neg(self, v):
        if isinstance(v, _Rational):
            return _Rational(-v.q)
        if isinstance(v, tuple):
            return -self._series(v, self.nvars)
        return -v

    def _check_weight(self, a: GradedPoly, b: GradedPoly, tok):
        if a.is_zero() or b.is_zero():
            return
        if max(a.weights()) + max(b.weights()) > self.cap:
            self.error(f"product has weight over the cap {self.cap}", tok)

    def mul(self, a, b, op):
        if isinstance(a, _Rational) and isinstance(b, _Rational):
            return _Rational(a.q * b.q)
        if self._is_series(a) or self._is_series(b):
            nv = 2 if self.nvars == 2 else 1
            x, y = self._series(a, nv), self._series(b, nv)
            return x * y
        if isinstance(a, SuOp) and isinstance(b, SuOp):
            self.error("operations can only be multiplied by ring elements", op)
        if isinstance(b, SuOp):
            a = self._poly(a)
            if not a.is_homogeneous():
                self.error("operation coefficients must be homogeneous", op)
            return b.scale(a)
        if isinstance(a, SuOp):
            b = self._poly(b)
            if not b.is_homogeneous():
                self.error("operation coefficients must be homogeneous", op)
            return a.scale(b)
        a, b = self._poly(a), self._poly(b)
        self._check_weight(a, b, op)
        return a * b

    def div(self, a, b, op):
        if not isinstance(b, _Rational):
            self.error("division is only by rational constants", op)
        if b.q == 0:
            self.error("division by zero", op)
        if isinstance(a, _Rational):
            return _Rational(a.q / b.q)
        if isinstance(a, tuple):
            a = self._series(a, self.nvars)
        if isinstance(a, PowerSeries):
            return a.scale(1 / b.q)
        if isinstance(a, SuOp):
            return a.scale(1 / b.q)
        return a / b.q

    def pow(self, v, e, op):
        if isinstance(v, _Rational):
            return _Rational(v.q ** e)
        if self._is_series(v):
            return self._series(v, 2 if self.nvars == 2 else 1) ** e
        if isinstance(v, SuOp):
            self.error("powers of operations are not supported", op)
        if e and not v.is_zero() and max(v.weights()) * e > self.cap:
            self.error(f"power has weight over the cap {self.cap}", op)
        return v ** e


def _scan_nvars(text: str) -> int:
    return 2 if re.search(r"(?<![a-z0-9])v(?![a-z0-9])", text) else 1


def parse_poly(text: str, ctx: FglContext) -> GradedPoly:
    """Parse a ring element such as ``9*b1^2 - 8*b2``."""
    p = _Parser(text, ctx, "poly")
    v = p.parse()
    return p._poly(v)


def parse_series(text: str, ctx: FglContext, order: int | None = None) -> PowerSeries:
    """Parse ``u + b1*u^2`` (one variable) or an expression in u and v."""
    p = _Parser(text, ctx, "series", order)
    p.nvars = _scan_nvars(text)
    v = p.parse()
    s = p._series(v, p.nvars)
    if _is_grade2(s):
        s.grade = 2
    return s


def _is_grade2(s: PowerSeries) -> bool:
    for k, c in s.items():
        ws = c.weights()
        if ws and ws != {sum(k) - 1}:
            return False
    return True


def parse_op(text: str, ctx: FglContext) -> SuOp:
    """Parse ``d0 + (b1^2-b2)*d2``."""
    p = _Parser(text, ctx, "op")
    v = p.parse()
    if isinstance(v, SuOp):
        return v
    v = p._poly(v)
    if v.is_zero():
        return SuOp({}, 0, ctx.weight_cap, None)
    raise ParseError("an operation literal needs at least one dK term", 0, text)
