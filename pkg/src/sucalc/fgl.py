"""The formal group law of complex cobordism over Q[b1, b2, ...].

F is presented through the Mishchenko logarithm
    log(u) = sum_{n>=0} b_n u^{n+1} / (n+1),   b_0 = 1,
so that F(u, v) = exp(log u + log v).  Every grade-2 series here has its
u^n coefficient in weight n-1, hence vanishes beyond order D+1 under a
weight cap D.  Internally series are therefore built at order max(N, D+1),
where they are complete, and truncated to N for display.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .algebra import GradedPoly
from .series import Series1, Series2, PowerSeries, embed, series1

DEFAULT_ORDER = 10
DEFAULT_WEIGHT_CAP = 8


class ConfigError(ValueError):
    pass


@dataclass(eq=False)
class FglContext:
    order: int
    weight_cap: int
    log: Series1
    exp: Series1
    F: Series2
    inv: Series1
    full_order: int
    _F_full: Series2 = field(repr=False)
    _log_full: Series1 = field(repr=False)
    _exp_full: Series1 = field(repr=False)
    _inv_full: Series1 = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    @property
    def cap(self) -> int:
        return self.weight_cap

    def zero(self) -> GradedPoly:
        return GradedPoly.zero(self.weight_cap)

    def one(self) -> GradedPoly:
        return GradedPoly.one(self.weight_cap)

    def b(self, n: int) -> GradedPoly:
        return GradedPoly.gen(n, self.weight_cap)

    def u(self, order: int | None = None) -> Series1:
        order = self.full_order if order is None else order
        return Series1._raw({(1,): self.one()}, order, self.zero(), 2)

    def alpha(self, i: int, j: int) -> GradedPoly:
        """Coefficient alpha_ij of u^i v^j in F."""
        return self._F_full[(i, j)]

    def _memo(self, key, build):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = build()
        with self._lock:
            return self._cache.setdefault(key, value)

    def log_full(self) -> Series1:
        return self._log_full

    def exp_full(self) -> Series1:
        return self._exp_full

    def inv_full(self) -> Series1:
        return self._inv_full

    def F_full(self) -> Series2:
        return self._F_full


def check_caps(order: int, weight_cap: int) -> None:
    if weight_cap < 1:
        raise ConfigError("weight cap must be at least 1")
    if order < 1:
        raise ConfigError("order must be at least 1")
    if order > weight_cap + 2:
        raise ConfigError(f"order {order} exceeds weight cap + 2 = {weight_cap + 2}")


_CONTEXTS: dict = {}
_CONTEXTS_LOCK = threading.Lock()


def build_context(order: int = DEFAULT_ORDER, weight_cap: int = DEFAULT_WEIGHT_CAP) -> FglContext:
    """Build (or fetch the cached) context for the given truncation."""
    check_caps(order, weight_cap)
    key = (order, weight_cap)
    with _CONTEXTS_LOCK:
        ctx = _CONTEXTS.get(key)
    if ctx is not None:
        return ctx
    ctx = _build(order, weight_cap)
    with _CONTEXTS_LOCK:
        return _CONTEXTS.setdefault(key, ctx)


def _build(order: int, D: int) -> FglContext:
    M = max(order, D + 1)
    zero = GradedPoly.zero(D)
    log = series1({n + 1: GradedPoly.gen(n, D) / (n + 1) for n in range(0, D + 1)}, M, zero, 2)
    exp = log.compositional_inverse()
    inv = exp.substitute(-log)
    inv.grade = 2
    F = exp.substitute(embed(log, 2, 0) + embed(log, 2, 1))
    F.grade = 2
    return FglContext(
        order=order, weight_cap=D,
        log=log.truncate(order), exp=exp.truncate(order), F=F.truncate(order),
        inv=inv.truncate(order), full_order=M,
        _F_full=F, _log_full=log, _exp_full=exp, _inv_full=inv,
    )


def k_power(ctx: FglContext, k: int) -> Series1:
    """[k](u) = exp(k log u), at the full internal order."""
    def build():
        if k == 0:
            return Series1._raw({}, ctx.full_order, ctx.zero(), 2)
        s = ctx.exp_full().substitute(ctx.log_full() * k)
        s.grade = 2
        return s
    return ctx._memo(("kpow", k), build)


def k_power_inductive(ctx: FglContext, k: int) -> Series1:
    """[k](u) from [0]=0 and [k](u) = F([k-1](u), u); negative k via the inverse."""
    u = ctx.u()
    cur = Series1._raw({}, ctx.full_order, ctx.zero(), 2)
    F = ctx.F_full()
    for _ in range(abs(k)):
        cur = F.substitute(cur, u) if not cur.is_zero() else u
    if k < 0:
        cur = cur.substitute(ctx.inv_full()) if not cur.is_zero() else cur
    return cur


def alpha_power(ctx: FglContext, k: int) -> Series2:
    """(F(u,v))^k = sum alpha^(k)_ij u^i v^j, complete at order D + k."""
    if k < 0:
        raise ValueError("k must be non-negative")

    def build():
        order = ctx.weight_cap + max(k, 1)
        F = ctx.F_full().extended(order)
        if k == 0:
            return PowerSeries.constant(ctx.one(), order, ctx.zero(), 2)
        prev = alpha_power(ctx, k - 1)
        s = F if k == 1 else prev.extended(order) * F
        s.grade = 2 * k
        return s
    return ctx._memo(("alpha", k), build)


def beta_coeffs(ctx: FglContext, k: int, m: int) -> Series1:
    """([1-m](u))^k u^m = sum beta^(k,m)_i u^i, complete at order D + k + m."""
    if k < 0 or m < 0:
        raise ValueError("k and m must be non-negative")

    def build():
        order = ctx.weight_cap + k + m
        base = k_power(ctx, 1 - m).extended(order)
        u = ctx.u(order)
        s = (base ** k) * (u ** m) if (k or m) else PowerSeries.constant(ctx.one(), order, ctx.zero(), 1)
        s.grade = 2 * (k + m)
        return s
    return ctx._memo(("beta", k, m), build)


def u_bar_power(ctx: FglContext, i: int, order: int | None = None) -> Series1:
    """u * ubar^i at the given order (complete at D + i + 1)."""
    order = ctx.weight_cap + i + 1 if order is None else order

    def build():
        o = ctx.weight_cap + i + 1
        s = ctx.u(o) * (ctx.inv_full().extended(o) ** i)
        s.grade = 2 * (i + 1)
        return s
    return ctx._memo(("uubar", i), build).extended(order)
