"""Truncated formal power series in one or more variables.

Coefficients live in any commutative ring whose elements support ``+ - *``,
scalar multiplication by rationals, ``is_zero()``, ``zero_like()`` and
``one_like()`` (``GradedPoly``, the Gamma extension, the W-ring wrapper).
A series of order N keeps monomials of total degree <= N.
"""
from __future__ import annotations

import csv
import io
from itertools import product
from numbers import Rational
from typing import Callable, Iterable, Mapping

Index = tuple  # exponent tuple, one entry per variable

VAR_NAMES = ("u", "v", "w", "x", "y", "z")


class SeriesError(ValueError):
    pass


def _norm_index(key, nvars: int) -> Index:
    if isinstance(key, int):
        key = (key,)
    key = tuple(key)
    if len(key) != nvars:
        raise SeriesError(f"index {key} does not match {nvars} variable(s)")
    return key


class PowerSeries:
    nvars = 0

    __slots__ = ("coeffs", "order", "zero", "grade")

    def __init__(self, coeffs: Mapping, order: int, zero, grade: int | None = None):
        self.order = order
        self.zero = zero
        self.grade = grade
        clean = {}
        for k, c in coeffs.items():
            k = _norm_index(k, self.nvars)
            if min(k) < 0:
                raise SeriesError(f"negative exponent in {k}")
            if sum(k) <= order and not c.is_zero():
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs, order, zero, grade=None):
        s = object.__new__(cls)
        s.coeffs = coeffs
        s.order = order
        s.zero = zero
        s.grade = grade
        return s

    def _like(self, coeffs, order=None, grade="keep"):
        return _series_class(self.nvars)._raw(
            coeffs, self.order if order is None else order, self.zero,
            self.grade if grade == "keep" else grade)

    # constructors

    @classmethod
    def variable(cls, i: int, order: int, zero, nvars: int | None = None) -> PowerSeries:
        """The i-th coordinate variable (0-based) as a series."""
        nvars = cls.nvars if nvars is None else nvars
        idx = tuple(int(j == i) for j in range(nvars))
        return _series_class(nvars)._raw({idx: zero.one_like()}, order, zero, 2)

    @classmethod
    def constant(cls, c, order: int, zero, nvars: int | None = None) -> PowerSeries:
        nvars = cls.nvars if nvars is None else nvars
        idx = (0,) * nvars
        return _series_class(nvars)._raw({} if c.is_zero() else {idx: c}, order, zero)

    def zero_series(self) -> PowerSeries:
        return self._like({}, grade=None)

    # access

    def __getitem__(self, key):
        return self.coeffs.get(_norm_index(key, self.nvars), self.zero)

    def coefficient(self, *idx):
        return self[idx if len(idx) != 1 else idx[0]]

    def items(self):
        return self.coeffs.items()

    def constant_term(self):
        return self[(0,) * self.nvars]

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise SeriesError("cannot raise the truncation order")
        return self._like({k: c for k, c in self.coeffs.items() if sum(k) <= order}, order)

    def extended(self, order: int) -> PowerSeries:
        """Relabel to a higher order; only valid when every dropped term is known to vanish."""
        if order < self.order:
            return self.truncate(order)
        return self._like(dict(self.coeffs), order)

    def map_coefficients(self, fn: Callable, zero=None) -> PowerSeries:
        zero = self.zero if zero is None else zero
        out = {}
        for k, c in self.coeffs.items():
            d = fn(c)
            if not d.is_zero():
                out[k] = d
        return _series_class(self.nvars)._raw(out, self.order, zero, self.grade)

    def homogeneous_part(self, degree: int) -> PowerSeries:
        return self._like({k: c for k, c in self.coeffs.items() if sum(k) == degree})

    # arithmetic

    def _check_compatible(self, other: PowerSeries):
        if other.nvars != self.nvars:
            raise SeriesError("series have different numbers of variables")
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            if k in out:
                s = out[k] + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        grade = self.grade if self.grade == other.grade else None
        return self._like(out, grade=grade)

    def __neg__(self):
        return self._like({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> PowerSeries:
        """Multiply every coefficient by a ring element or rational."""
        out = {}
        for k, a in self.coeffs.items():
            d = a * c if isinstance(c, (int, Rational)) else c * a
            if not d.is_zero():
                out[k] = d
        return self._like(out, grade=self.grade if isinstance(c, (int, Rational)) else None)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            if isinstance(other, (int, Rational)) or hasattr(other, "one_like"):
                return self.scale(other)
            return NotImplemented
        self._check_compatible(other)
        order = self.order
        out: dict = {}
        for k1, c1 in self.coeffs.items():
            d1 = sum(k1)
            for k2, c2 in other.coeffs.items():
                if d1 + sum(k2) > order:
                    continue
                k = tuple(a + b for a, b in zip(k1, k2))
                p = c1 * c2
                if k in out:
                    p = out[k] + p
                out[k] = p
        out = {k: c for k, c in out.items() if not c.is_zero()}
        grade = None
        if self.grade is not None and other.grade is not None:
            grade = self.grade + other.grade
        return self._like(out, grade=grade)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)) or hasattr(other, "one_like"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only non-negative integer powers")
        result = PowerSeries.constant(self.zero.one_like(), self.order, self.zero, self.nvars)
        if n == 0:
            return result
        base = self
        result = None
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (self.nvars == other.nvars and self.order == other.order
                and self.coeffs.keys() == other.coeffs.keys()
                and all(c == other.coeffs[k] for k, c in self.coeffs.items()))

    __hash__ = None

    def agrees_with(self, other: PowerSeries, order: int | None = None) -> bool:
        """Equality of all coefficients up to ``order`` (default: min order)."""
        order = min(self.order, other.order) if order is None else order
        keys = {k for k in self.coeffs if sum(k) <= order} | {k for k in other.coeffs if sum(k) <= order}
        return all((self[k] - other[k]).is_zero() for k in keys)

    # composition

    def substitute(self, *inners: PowerSeries) -> PowerSeries:
        """outer(inner_1, ..., inner_n) with every inner free of constant term."""
        if len(inners) != self.nvars:
            raise SeriesError(f"need {self.nvars} inner series")
        m = inners[0].nvars
        for s in inners:
            if s.nvars != m:
                raise SeriesError("inner series must share their variables")
            if not s.constant_term().is_zero():
                raise SeriesError("inner series has a non-zero constant term")
        order = min([self.order] + [s.order for s in inners])
        inners = [s if s.order == order else s.truncate(order) for s in inners]
        one = PowerSeries.constant(self.zero.one_like(), order, inners[0].zero, m)
        powers: list[list[PowerSeries]] = []
        for s in inners:
            top = max((k[len(powers)] for k in self.coeffs), default=0)
            ps = [one]
            for _ in range(top):
                ps.append(ps[-1] * s)
            powers.append(ps)
        acc: dict = {}
        mixed: dict = {}
        for k, c in self.coeffs.items():
            if sum(k) > order:
                continue
            if self.nvars == 1:
                term = powers[0][k[0]]
            else:
                term = mixed.get(k)
                if term is None:
                    term = one
                    for var, e in enumerate(k):
                        if e:
                            term = term * powers[var][e]
                    mixed[k] = term
            for idx, a in term.coeffs.items():
                p = c * a
                if idx in acc:
                    p = acc[idx] + p
                acc[idx] = p
        acc = {k: c for k, c in acc.items() if not c.is_zero()}
        return _series_class(m)._raw(acc, order, inners[0].zero, None)

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_series(self)!r}, order={self.order})"


class Series1(PowerSeries):
    nvars = 1

    def compositional_inverse(self) -> Series1:
        """g with self(g(u)) = u, solved degree by degree."""
        return compositional_inverse(self)

    def leading(self):
        return self[1]


class Series2(PowerSeries):
    nvars = 2


class Series3(PowerSeries):
    nvars = 3


def _series_class(nvars: int):
    return {1: Series1, 2: Series2, 3: Series3}.get(nvars) or _generic_class(nvars)


_GENERIC: dict = {}


def _generic_class(nvars: int):
    if nvars not in _GENERIC:
        _GENERIC[nvars] = type(f"Series{nvars}", (PowerSeries,), {"nvars": nvars, "__slots__": ()})
    return _GENERIC[nvars]


def series1(coeffs: Mapping[int, object], order: int, zero, grade: int | None = None) -> Series1:
    return Series1({(i,): c for i, c in coeffs.items()}, order, zero, grade)


def series2(coeffs: Mapping[tuple, object], order: int, zero, grade: int | None = None) -> Series2:
    return Series2(coeffs, order, zero, grade)


def series_arith(a: PowerSeries, b, op: str) -> PowerSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def substitute(outer: PowerSeries, *inners: PowerSeries) -> PowerSeries:
    return outer.substitute(*inners)


def embed(s: PowerSeries, nvars: int, var: int) -> PowerSeries:
    """View a one-variable series as a series in ``nvars`` variables (in slot ``var``)."""
    if s.nvars != 1:
        raise SeriesError("embed expects a one-variable series")
    out = {}
    for (i,), c in s.coeffs.items():
        idx = [0] * nvars
        idx[var] = i
        out[tuple(idx)] = c
    return _series_class(nvars)._raw(out, s.order, s.zero, s.grade)


def compositional_inverse(s: Series1) -> Series1:
    if s.nvars != 1:
        raise SeriesError("compositional inverse needs a one-variable series")
    if not s.constant_term().is_zero():
        raise SeriesError("series has a non-zero constant term")
    one = s.zero.one_like()
    if not (s[1] - one).is_zero():
        raise SeriesError("leading coefficient must be 1")
    g = Series1._raw({(1,): one}, s.order, s.zero, s.grade)
    for n in range(2, s.order + 1):
        c = s.substitute(g)[n]
        if not c.is_zero():
            coeffs = dict(g.coeffs)
            coeffs[(n,)] = -c
            g = Series1._raw(coeffs, s.order, s.zero, s.grade)
    return g


def is_graded(s: PowerSeries, grade: int, weight_of: Callable[[object], set[int]]) -> bool:
    """Coefficient of a degree-d monomial is homogeneous of weight d - grade/2."""
    shift = grade // 2
    for k, c in s.coeffs.items():
        ws = weight_of(c)
        if ws and ws != {sum(k) - shift}:
            return False
    return True


def format_monomial(idx: Index) -> str:
    parts = []
    for var, e in enumerate(idx):
        if e == 1:
            parts.append(VAR_NAMES[var])
        elif e > 1:
            parts.append(f"{VAR_NAMES[var]}^{e}")
    return "*".join(parts)


def format_series(s: PowerSeries, fmt: Callable[[object], str] = str) -> str:
    if not s.coeffs:
        return "0"
    out = []
    for k in sorted(s.coeffs, key=lambda k: (sum(k), tuple(-e for e in k))):
        c = s.coeffs[k]
        mono = format_monomial(k)
        text = fmt(c)
        if not mono:
            out.append(f"({text})" if text.startswith("-") or " " in text else text)
        elif text == "1":
            out.append(mono)
        else:
            out.append(f"({text})*{mono}")
    return " + ".join(out)


def series_to_rows(s: PowerSeries, fmt: Callable[[object], str] = str) -> list[list[str]]:
    rows = []
    for k in sorted(s.coeffs, key=lambda k: (sum(k), k)):
        rows.append([str(e) for e in k] + [fmt(s.coeffs[k])])
    return rows


def series_to_csv(s: PowerSeries, fmt: Callable[[object], str] = str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list("ijk"[: s.nvars]) + ["coefficient"])
    w.writerows(series_to_rows(s, fmt))
    return buf.getvalue()


def all_indices(nvars: int, order: int) -> Iterable[Index]:
    for k in product(range(order + 1), repeat=nvars):
        if sum(k) <= order:
            yield k
