"""SU-linear operations as finite coefficient maps in the d-basis.

An operation is f = sum mu_i d_i with d_i the Conner-Floyd operations and
weight(mu_i) = i + defect.  Coefficients live in Q[b] truncated at weight D,
but operations lower weight, so an operation built from truncated data is
only known up to some coefficient weight.  ``SuOp.prec`` records that bound
(``None`` means exact: every omitted coefficient is genuinely zero).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebra import GradedPoly, mono_weight
from .fgl import FglContext, alpha_power, beta_coeffs, k_power, u_bar_power
from .series import Series1


class PrecisionError(ArithmeticError):
    """The requested value depends on coefficients lost to truncation."""


def _min_prec(*ps):
    ps = [p for p in ps if p is not None]
    return min(ps) if ps else None


@dataclass(frozen=True, eq=False)
class SuOp:
    coeffs: Mapping[int, GradedPoly]
    defect: int
    cap: int
    prec: int | None = None

    def __post_init__(self):
        clean = {}
        for i, mu in self.coeffs.items():
            if i < 0:
                raise ValueError("d-basis index must be non-negative")
            if mu.cap != self.cap:
                raise ValueError("coefficient has the wrong weight cap")
            if mu.is_zero():
                continue
            if not mu.is_homogeneous(i + self.defect):
                raise ValueError(f"coefficient of d{i} must have weight {i + self.defect}, got {mu}")
            if self.prec is not None and i + self.defect > self.prec:
                continue
            clean[i] = mu
        object.__setattr__(self, "coeffs", clean)

    @property
    def known_weight(self) -> int:
        """Largest coefficient weight that is reliably known."""
        return self.cap if self.prec is None else min(self.cap, self.prec)

    def __getitem__(self, i: int) -> GradedPoly:
        return self.coeffs.get(i, GradedPoly.zero(self.cap))

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: SuOp) -> SuOp:
        if not isinstance(other, SuOp):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.defect != self.defect:
            raise ValueError("cannot add operations of different defect")
        out = dict(self.coeffs)
        for i, mu in other.coeffs.items():
            out[i] = out[i] + mu if i in out else mu
        return SuOp(out, self.defect, self.cap, _min_prec(self.prec, other.prec))

    def __neg__(self):
        return SuOp({i: -mu for i, mu in self.coeffs.items()}, self.defect, self.cap, self.prec)

    def __sub__(self, other: SuOp) -> SuOp:
        return self + (-other)

    def scale(self, c) -> SuOp:
        """Left multiplication by a rational or a homogeneous ring element."""
        if isinstance(c, GradedPoly):
            w = c.weight()
            if w is None:
                return SuOp({}, self.defect, self.cap, self.prec)
            return SuOp({i: c * mu for i, mu in self.coeffs.items()}, self.defect + w, self.cap,
                        None if self.prec is None else self.prec + w)
        return SuOp({i: mu * c for i, mu in self.coeffs.items()}, self.defect, self.cap, self.prec)

    def __rmul__(self, c):
        return self.scale(c)

    def __str__(self):
        return format_op(self)

    def __repr__(self):
        return f"SuOp({format_op(self)!r}, defect={self.defect}, prec={self.prec})"


def format_op(op: SuOp) -> str:
    if op.is_zero():
        return "0"
    parts = []
    for i in op.support():
        text = str(op.coeffs[i])
        if text == "1":
            parts.append(f"d{i}")
        else:
            parts.append(f"({text})*d{i}")
    return " + ".join(parts)


def identity_op(ctx: FglContext) -> SuOp:
    return partial_op(ctx, 0)


def partial_op(ctx: FglContext, k: int) -> SuOp:
    """The basis operation d_k (exact)."""
    return SuOp({k: ctx.one()}, -k, ctx.weight_cap, None)


def zero_op(ctx: FglContext, defect: int = 0) -> SuOp:
    return SuOp({}, defect, ctx.weight_cap, None)


# action on the coefficient ring

def partial_on_generator(ctx: FglContext, k: int, n: int) -> GradedPoly:
    """d_k [CP^n]: expand ([n+1](x))^k = sum c_j x^j, return sum_{j<=n} c_j b_{n-j}."""
    if n < 0 or k < 0:
        raise ValueError("k and n must be non-negative")
    if k == 0:
        return ctx.b(n)
    if k > n:
        return ctx.zero()

    def build():
        P = k_power(ctx, n + 1) ** k
        acc = ctx.zero()
        for j in range(k, n + 1):
            c = P[j]
            if not c.is_zero():
                acc = acc + c * ctx.b(n - j)
        return acc
    return ctx._memo(("dgen", k, n), build)


def _partial_monomial(ctx: FglContext, k: int, m: tuple) -> GradedPoly:
    w = mono_weight(m)
    if k == 0:
        return GradedPoly.monomial(m, 1, ctx.weight_cap)
    if k > w:
        return ctx.zero()
    n = next(i + 1 for i, e in enumerate(m) if e)
    if sum(m) == 1:
        return partial_on_generator(ctx, k, n)

    def build():
        rest = list(m)
        rest[n - 1] -= 1
        rest = tuple(rest)
        wr = w - n
        acc = ctx.zero()
        for (i, j), a in alpha_power(ctx, k).items():
            if i > n or j > wr:
                continue
            x = partial_on_generator(ctx, i, n)
            if x.is_zero():
                continue
            y = _partial_monomial(ctx, j, rest)
            if y.is_zero():
                continue
            acc = acc + a * x * y
        return acc
    return ctx._memo(("dmono", k, m), build)


def apply_partial(ctx: FglContext, k: int, p: GradedPoly) -> GradedPoly:
    """d_k(p), extended from generators by the product rule."""
    acc = ctx.zero()
    for m, c in p.items():
        d = _partial_monomial(ctx, k, m)
        if not d.is_zero():
            acc = acc + d * c
    return acc


def apply(op: SuOp, p: GradedPoly, ctx: FglContext) -> GradedPoly:
    if p.cap != ctx.weight_cap:
        raise ValueError("element and context have different weight caps")
    if op.prec is not None:
        for w in p.weights():
            if op.prec < w + op.defect <= ctx.weight_cap:
                raise PrecisionError(
                    f"result weight {w + op.defect} exceeds the operation's known weight {op.prec}")
    acc = ctx.zero()
    for i, mu in op.coeffs.items():
        d = apply_partial(ctx, i, p)
        if not d.is_zero():
            acc = acc + mu * d
    return acc


# composition

def compose(f: SuOp, g: SuOp, ctx: FglContext) -> SuOp:
    """The d-basis expansion of f o g.

    d_k(nu d_m) = sum_{i,j} alpha^(k)_ij d_i(nu) d_j d_m and
    d_j d_m = sum_l beta^(j,m)_l d_l.
    """
    D = ctx.weight_cap
    d = f.defect + g.defect
    prec = _min_prec(f.prec, None if g.prec is None else g.prec + min(0, f.defect))
    if f.prec is not None or g.prec is not None:
        prec = min(D, prec)
    top = D if prec is None else min(D, prec)
    out: dict[int, GradedPoly] = {}
    for m, nu in g.coeffs.items():
        wnu = m + g.defect
        # T[j] = sum_k mu_k sum_i alpha^(k)_ij d_i(nu)
        T: dict[int, GradedPoly] = {}
        for k, mu in f.coeffs.items():
            for (i, j), a in alpha_power(ctx, k).items():
                if i > wnu:
                    continue
                # weight of the final coefficient is j + m + d + (l - j - m) ... bounded below by j+m+d
                if j + m + d > top:
                    continue
                di = apply_partial(ctx, i, nu)
                if di.is_zero():
                    continue
                term = mu * a * di
                if not term.is_zero():
                    T[j] = T[j] + term if j in T else term
        for j, t in T.items():
            for (l,), b in beta_coeffs(ctx, j, m).items():
                if l + d > top:
                    continue
                c = t * b
                if not c.is_zero():
                    out[l] = out[l] + c if l in out else c
    return SuOp(out, d, D, prec)


def ops_equal(f: SuOp, g: SuOp, upto: int | None = None) -> bool:
    """Coefficientwise equality for all coefficient weights <= the common known bound."""
    bound = min(f.known_weight, g.known_weight)
    if upto is not None:
        bound = min(bound, upto)
    if f.defect != g.defect and not (f.is_zero() or g.is_zero()):
        return False
    d = f.defect if not f.is_zero() else g.defect
    keys = set(f.coeffs) | set(g.coeffs)
    return all((f[i] - g[i]).is_zero() for i in keys if i + d <= bound)


def op_difference(f: SuOp, g: SuOp, upto: int | None = None) -> dict[int, GradedPoly]:
    bound = min(f.known_weight, g.known_weight)
    if upto is not None:
        bound = min(bound, upto)
    d = f.defect if not f.is_zero() else g.defect
    out = {}
    for i in sorted(set(f.coeffs) | set(g.coeffs)):
        if i + d <= bound:
            diff = f[i] - g[i]
            if not diff.is_zero():
                out[i] = diff
    return out


# conversion to and from series in the canonical orientation u

def op_to_series(op: SuOp, ctx: FglContext, basis: str = "u_powers") -> Series1:
    """f(u) = sum mu_i u ubar^i, to the order the known coefficients allow.

    ``basis='u_ubar_powers'`` returns the coefficients in the {u ubar^i} basis
    instead, i.e. mu_i sitting on u^{i+1}.
    """
    order = op.known_weight - op.defect + 1
    if order < 1:
        raise PrecisionError("operation is not known in any degree")
    zero = ctx.zero()
    if basis == "u_ubar_powers":
        s = Series1({(i + 1,): mu for i, mu in op.coeffs.items() if i + 1 <= order}, order, zero)
        s.grade = 2 - 2 * op.defect
        return s
    if basis != "u_powers":
        raise ValueError(f"unknown basis {basis!r}")
    acc: dict = {}
    for i, mu in op.coeffs.items():
        if i + 1 > order:
            continue
        for (j,), c in u_bar_power(ctx, i).items():
            if j > order:
                continue
            t = mu * c
            if not t.is_zero():
                acc[(j,)] = acc[(j,)] + t if (j,) in acc else t
    return Series1(acc, order, zero, 2 - 2 * op.defect)


def series_defect(s: Series1) -> int:
    """Defect d of the operation with s = f(u): coefficient of u^j has weight j - 1 + d."""
    ds = set()
    for (j,), c in s.items():
        for w in c.weights():
            ds.add(w - j + 1)
    if len(ds) > 1:
        raise ValueError(f"series is not homogeneous: {s}")
    if ds:
        return ds.pop()
    if s.grade is not None:
        return (2 - s.grade) // 2
    return 0


def op_from_series(s: Series1, ctx: FglContext, basis: str = "u_powers",
                   defect: int | None = None, exact: bool = False) -> SuOp:
    """The operation f with f(u) = s.

    With ``basis='u_powers'`` the series is in powers of u and is converted to
    the d-basis by a triangular solve against u ubar^i = (-1)^i u^{i+1} + ...;
    with ``basis='u_ubar_powers'`` the coefficient of u^{i+1} is read as mu_i.
    ``exact`` declares that every omitted coefficient is zero.
    """
    if not s.constant_term().is_zero():
        raise ValueError("a class series must have zero constant term")
    d = series_defect(s) if defect is None else defect
    D = ctx.weight_cap
    prec = None if exact else min(D, s.order - 1 + d)
    if basis == "u_ubar_powers":
        return SuOp({j - 1: c for (j,), c in s.items()}, d, D, prec)
    if basis != "u_powers":
        raise ValueError(f"unknown basis {basis!r}")
    top = s.order if prec is None else min(s.order, prec - d + 1)
    rem = {j: c for (j,), c in s.items() if j <= top}
    mu: dict[int, GradedPoly] = {}
    for j in range(1, top + 1):
        c = rem.get(j)
        if c is None or c.is_zero():
            continue
        i = j - 1
        coef = c if i % 2 == 0 else -c
        mu[i] = coef
        for (jj,), b in u_bar_power(ctx, i).items():
            if jj > top:
                continue
            t = coef * b
            if not t.is_zero():
                rem[jj] = rem[jj] - t if jj in rem else -t
    return SuOp(mu, d, D, prec)


def delta_series(ctx: FglContext, k1: int, k2: int) -> Series1:
    """Delta_(k1,k2) u = u ubar^k1 u^k2, complete at order D + k1 + k2 + 1."""
    order = ctx.weight_cap + k1 + k2 + 1
    s = u_bar_power(ctx, k1, order) * (ctx.u(order) ** k2) if k2 else u_bar_power(ctx, k1, order)
    s.grade = 2 * (1 + k1 + k2)
    return s


def delta_op(ctx: FglContext, k1: int, k2: int) -> SuOp:
    """d-basis expansion of Delta_(k1,k2); Delta = (1,1), d_k = (k,0), dbar_k = (0,k)."""
    if k1 < 0 or k2 < 0:
        raise ValueError("k1, k2 must be non-negative")
    if k2 == 0:
        return partial_op(ctx, k1)
    return ctx._memo(("delta", k1, k2),
                     lambda: op_from_series(delta_series(ctx, k1, k2), ctx, defect=-(k1 + k2)))


def big_delta(ctx: FglContext) -> SuOp:
    return delta_op(ctx, 1, 1)


def dbar_op(ctx: FglContext, k: int) -> SuOp:
    return delta_op(ctx, 0, k)


def apply_to_class(op: SuOp, cls: Series1, ctx: FglContext) -> Series1:
    """op applied to the class cls(u) in the cohomology of CP^infinity."""
    g = op_from_series(cls, ctx)
    return op_to_series(compose(op, g, ctx), ctx)
