"""Exact graded polynomial ring Q[b1, b2, ...] truncated at a weight cap.

The generator ``b_n`` stands for the bordism class of complex projective
space CP^n and has weight ``n`` (homological degree ``2n``).  A monomial is
stored as its exponent vector ``(e_1, ..., e_D)`` where ``D`` is the weight
cap; monomials of weight above the cap are discarded by every operation,
so a ``GradedPoly`` is an element of the quotient ``Q[b]/(weight > D)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Iterator, Mapping

Monomial = tuple  # exponent vector (e_1, ..., e_D)


class CapMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def mono_weight(m: Monomial) -> int:
    return sum((i + 1) * e for i, e in enumerate(m))


@lru_cache(maxsize=None)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def _partitions(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


@lru_cache(maxsize=None)
def monomials_of_weight(weight: int, cap: int) -> tuple[Monomial, ...]:
    """All monomials of the given weight, in descending lexicographic order.

    >>> monomials_of_weight(2, 3)
    ((2, 0, 0), (0, 1, 0))
    """
    if weight > cap or weight < 0:
        return ()
    out = []
    for parts in _partitions(weight, weight):
        e = [0] * cap
        for p in parts:
            e[p - 1] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class GradedPoly:
    """Element of Q[b1..bD] with monomials of weight > D dropped."""

    __slots__ = ("terms", "cap", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, cap: int = 8):
        self.cap = cap
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != cap:
                    raise CapMismatch(f"monomial {m} has length {len(m)}, cap is {cap}")
                c = _as_fraction(c)
                if c and mono_weight(m) <= cap:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: dict, cap: int) -> GradedPoly:
        p = object.__new__(cls)
        p.terms = terms
        p.cap = cap
        p._hash = None
        return p

    @classmethod
    def zero(cls, cap: int) -> GradedPoly:
        return cls._raw({}, cap)

    @classmethod
    def const(cls, c, cap: int) -> GradedPoly:
        c = _as_fraction(c)
        return cls._raw({(0,) * cap: c} if c else {}, cap)

    @classmethod
    def one(cls, cap: int) -> GradedPoly:
        return cls.const(1, cap)

    @classmethod
    def gen(cls, n: int, cap: int) -> GradedPoly:
        """The generator b_n; b_0 is the unit."""
        if n == 0:
            return cls.one(cap)
        if n < 0:
            raise ValueError("generator index must be non-negative")
        if n > cap:
            return cls.zero(cap)
        e = [0] * cap
        e[n - 1] = 1
        return cls._raw({tuple(e): Fraction(1)}, cap)

    @classmethod
    def monomial(cls, m: Monomial, c=1, cap: int | None = None) -> GradedPoly:
        cap = len(m) if cap is None else cap
        return cls({m: c}, cap)

    def zero_like(self) -> GradedPoly:
        return GradedPoly.zero(self.cap)

    def one_like(self) -> GradedPoly:
        return GradedPoly.one(self.cap)

    # ring structure

    def _coerce(self, other) -> GradedPoly | None:
        if isinstance(other, GradedPoly):
            if other.cap != self.cap:
                raise CapMismatch(f"weight caps differ: {self.cap} vs {other.cap}")
            return other
        if isinstance(other, (int, Rational)):
            return GradedPoly.const(other, self.cap)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GradedPoly._raw(out, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly._raw({m: -c for m, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = _as_fraction(other)
            if not c:
                return self.zero_like()
            return GradedPoly._raw({m: v * c for m, v in self.terms.items()}, self.cap)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cap = self.cap
        out: dict = {}
        for m1, c1 in self.terms.items():
            w1 = mono_weight(m1)
            for m2, c2 in other.terms.items():
                if w1 + mono_weight(m2) > cap:
                    continue
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return GradedPoly._raw(out, cap)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / _as_fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.one_like()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = GradedPoly.const(other, self.cap)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cap, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # grading

    def weights(self) -> set[int]:
        return {mono_weight(m) for m in self.terms}

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if not ws:
            return True
        if len(ws) > 1:
            return False
        return weight is None or ws == {weight}

    def weight(self) -> int | None:
        """Weight of a homogeneous non-zero poly; None for zero."""
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError(f"not homogeneous: {self}")
        return ws.pop()

    def component(self, weight: int) -> GradedPoly:
        return GradedPoly._raw(
            {m: c for m, c in self.terms.items() if mono_weight(m) == weight}, self.cap
        )

    def truncate(self, max_weight: int) -> GradedPoly:
        if all(mono_weight(m) <= max_weight for m in self.terms):
            return self
        return GradedPoly._raw(
            {m: c for m, c in self.terms.items() if mono_weight(m) <= max_weight}, self.cap
        )

    def with_cap(self, cap: int) -> GradedPoly:
        """Re-embed into the ring with another weight cap."""
        if cap == self.cap:
            return self
        out = {}
        for m, c in self.terms.items():
            if mono_weight(m) > cap:
                continue
            if cap > self.cap:
                out[m + (0,) * (cap - self.cap)] = c
            else:
                if any(m[cap:]):
                    continue
                out[m[:cap]] = c
        return GradedPoly._raw(out, cap)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.cap, Fraction(0))

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def linear_coefficient(self, k: int) -> Fraction:
        """Coefficient of the single generator b_k."""
        if k < 1 or k > self.cap:
            return Fraction(0)
        e = [0] * self.cap
        e[k - 1] = 1
        return self.terms.get(tuple(e), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def content_denominator(self) -> int:
        d = 1
        for c in self.terms.values():
            d = d * c.denominator // gcd(d, c.denominator)
        return d

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"GradedPoly({format_poly(self)!r}, cap={self.cap})"


def poly_arith(a: GradedPoly, b, op: str) -> GradedPoly:
    """Dispatch helper: op is one of 'add', 'sub', 'mul', 'scale'."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        if not isinstance(b, GradedPoly):
            raise TypeError("mul expects two polynomials; use 'scale' for scalars")
        return a * b
    if op == "scale":
        return a * _as_fraction(b)
    raise ValueError(f"unknown op {op!r}")


def s_number(p: GradedPoly, k: int) -> Fraction:
    """Characteristic number s_k, normalised by s_k(b_k) = k + 1.

    s_k kills every product of positive-weight elements, so only the
    coefficient of the linear monomial b_k contributes.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not p.is_homogeneous(k):
        raise ValueError(f"s_{k} needs a homogeneous element of weight {k}, got {p}")
    return (k + 1) * p.linear_coefficient(k)


def reduce_mod_decomposables(p: GradedPoly) -> GradedPoly:
    """Project onto constants plus linear monomials (quotient by J^2)."""
    return GradedPoly._raw({m: c for m, c in p.terms.items() if sum(m) <= 1}, p.cap)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"b{i + 1}")
        elif e > 1:
            parts.append(f"b{i + 1}^{e}")
    return "*".join(parts)


def sorted_monomials(terms: Iterable[Monomial]) -> list[Monomial]:
    return sorted(terms, key=lambda m: (mono_weight(m), tuple(-e for e in m)))


def format_poly(p: GradedPoly) -> str:
    """Canonical text form, e.g. ``9*b1^2 - 8*b2``; parses back unchanged."""
    if not p.terms:
        return "0"
    out = []
    for m in sorted_monomials(p.terms):
        c = p.terms[m]
        mono = format_monomial(m)
        mag = abs(c)
        if not mono:
            body = format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coefficient(mag)}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)
