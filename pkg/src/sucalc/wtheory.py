"""Coefficient-level c1-spherical bordism W.

W_* is realised inside Q[b] as ker Delta.  This module covers SU-linear
projections MU -> W, the SU-bilinear multiplications a*b = ab + delta da db,
the extension ring Gamma = MU[t]/(t^2 = -b1 t + delta) with phi(x) = x + t dx,
orientations w = pi(f(u)) and the formal group law F_W they define.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from numbers import Rational
from typing import Mapping

from .algebra import GradedPoly, reduce_mod_decomposables, s_number
from .fgl import FglContext
from .integral import element_with_s, s_gcd, s_of, w_lattice
from .lattice import lattice_from_generators
from .numtheory import m_k
from .ops import (SuOp, apply, apply_partial, apply_to_class, big_delta, compose, identity_op,
                  op_difference, op_from_series, partial_op, zero_op)
from .series import PowerSeries, Series1, Series2, embed


class NotInW(ValueError):
    pass


def is_in_W(p: GradedPoly, ctx: FglContext) -> bool:
    return apply(big_delta(ctx), p, ctx).is_zero()


def _require_W(p: GradedPoly, ctx: FglContext, what: str = "element"):
    if not is_in_W(p, ctx):
        raise NotInW(f"{what} {p} is not in ker Delta")


def V_class(ctx: FglContext) -> GradedPoly:
    """[V] = alpha_12 = b1^2 - b2, with Delta[V] = 1."""
    return ctx.alpha(1, 2)


def d(p: GradedPoly, ctx: FglContext) -> GradedPoly:
    return apply_partial(ctx, 1, p)


# projections

@dataclass(frozen=True)
class ProjectionSpec:
    lambdas: Mapping[int, GradedPoly]

    def to_op(self, ctx: FglContext) -> SuOp:
        coeffs = {0: ctx.one()}
        for i, lam in self.lambdas.items():
            if i < 2:
                raise ValueError("projection coefficients start at d2")
            coeffs[i] = lam
        return SuOp(coeffs, 0, ctx.weight_cap, ctx.weight_cap)

    @classmethod
    def from_op(cls, op: SuOp) -> ProjectionSpec:
        if op.defect != 0 or op[0] != 1 or not op[1].is_zero():
            raise ValueError("a projection has the form 1 + sum_{i>=2} lambda_i d_i")
        return cls({i: mu for i, mu in op.coeffs.items() if i >= 2})

    def validity_defect(self, ctx: FglContext) -> dict[int, GradedPoly]:
        """Non-zero coefficients of Delta o pi (empty for a valid projection)."""
        return op_difference(compose(big_delta(ctx), self.to_op(ctx), ctx), zero_op(ctx, -2))

    def is_valid(self, ctx: FglContext) -> bool:
        return not self.validity_defect(ctx)


def stong_projection(ctx: FglContext) -> ProjectionSpec:
    """pi_0 = 1 + sum_{k>=2} alpha_1k d_k."""
    return ProjectionSpec({k: ctx.alpha(1, k) for k in range(2, ctx.weight_cap + 1)})


def projection_family(ctx: FglContext, f: SuOp) -> ProjectionSpec:
    """pi_0 o (1 + f o Delta) for an operation f of defect 2."""
    if not f.is_zero() and f.defect != 2:
        raise ValueError("f must have defect 2")
    pi0 = stong_projection(ctx).to_op(ctx)
    inner = identity_op(ctx) + compose(f, big_delta(ctx), ctx) if not f.is_zero() else identity_op(ctx)
    return ProjectionSpec.from_op(compose(pi0, inner, ctx))


def project(spec: ProjectionSpec, p: GradedPoly, ctx: FglContext) -> GradedPoly:
    return apply(spec.to_op(ctx), p, ctx)


# multiplications

@dataclass(frozen=True)
class MultiplicationSpec:
    """a*b = ab + delta da db with Delta(delta) = 2.

    ``omega`` is the W_4 parameter of the form delta = 2[V] - omega.
    """
    delta: GradedPoly
    omega: GradedPoly

    @classmethod
    def from_omega(cls, omega: GradedPoly, ctx: FglContext) -> MultiplicationSpec:
        return cls(2 * V_class(ctx) - omega, omega)

    @classmethod
    def from_projection_omega(cls, omega: GradedPoly, ctx: FglContext) -> MultiplicationSpec:
        """The parametrisation delta = 2([V] - omega)."""
        return cls(2 * (V_class(ctx) - omega), 2 * omega)

    @classmethod
    def from_delta(cls, delta: GradedPoly, ctx: FglContext) -> MultiplicationSpec:
        return cls(delta, 2 * V_class(ctx) - delta)

    @classmethod
    def from_projection(cls, spec: ProjectionSpec, ctx: FglContext) -> MultiplicationSpec:
        """The multiplication a*b = pi(ab): on W only lambda_2 contributes, delta = 2 lambda_2."""
        lam2 = spec.lambdas.get(2, ctx.zero())
        return cls.from_delta(2 * lam2, ctx)

    def validate(self, ctx: FglContext) -> list[str]:
        errs = []
        if not self.delta.is_homogeneous(2) or not self.omega.is_homogeneous(2):
            errs.append("delta and omega must be homogeneous of weight 2")
        Delta = big_delta(ctx)
        if apply(Delta, self.delta, ctx) != 2:
            errs.append(f"Delta(delta) = {apply(Delta, self.delta, ctx)}, expected 2")
        if not apply(Delta, self.omega, ctx).is_zero():
            errs.append("omega is not in ker Delta")
        if self.delta + self.omega != 2 * V_class(ctx):
            errs.append("delta + omega != 2[V]")
        return errs


def stong_multiplication(ctx: FglContext) -> MultiplicationSpec:
    return MultiplicationSpec.from_omega(ctx.zero(), ctx)


def w_multiply(a: GradedPoly, b: GradedPoly, m: MultiplicationSpec, ctx: FglContext,
               check: bool = True) -> GradedPoly:
    if check:
        _require_W(a, ctx, "left factor")
        _require_W(b, ctx, "right factor")
    da = d(a, ctx)
    if da.is_zero():
        return a * b
    db = d(b, ctx)
    return a * b + m.delta * da * db


class WElt:
    """W-coefficient with * as its product, for series arithmetic."""

    __slots__ = ("p", "m", "ctx", "_d")

    def __init__(self, p: GradedPoly, m: MultiplicationSpec, ctx: FglContext):
        self.p = p
        self.m = m
        self.ctx = ctx
        self._d = None

    def _wrap(self, p):
        return WElt(p, self.m, self.ctx)

    def dp(self) -> GradedPoly:
        if self._d is None:
            self._d = d(self.p, self.ctx)
        return self._d

    def __add__(self, o):
        return self._wrap(self.p + o.p)

    def __sub__(self, o):
        return self._wrap(self.p - o.p)

    def __neg__(self):
        return self._wrap(-self.p)

    def __mul__(self, o):
        if isinstance(o, (int, Rational)):
            return self._wrap(self.p * o)
        prod = self.p * o.p
        da = self.dp()
        if not da.is_zero():
            db = o.dp()
            if not db.is_zero():
                prod = prod + self.m.delta * da * db
        return self._wrap(prod)

    def __eq__(self, o):
        return isinstance(o, WElt) and self.p == o.p

    __hash__ = None

    def is_zero(self):
        return self.p.is_zero()

    def zero_like(self):
        return self._wrap(self.ctx.zero())

    def one_like(self):
        return self._wrap(self.ctx.one())

    def __str__(self):
        return str(self.p)


# the Gamma extension

@dataclass(frozen=True)
class GammaElt:
    """a + t b in MU[t]/(t^2 = -b1 t + delta), truncated by total weight (t has weight 1)."""
    a: GradedPoly
    b: GradedPoly
    delta: GradedPoly

    def __post_init__(self):
        cap = self.a.cap
        object.__setattr__(self, "b", self.b.truncate(cap - 1))

    @property
    def cap(self):
        return self.a.cap

    def _lift(self, x):
        if isinstance(x, GammaElt):
            return x
        if isinstance(x, GradedPoly):
            return GammaElt(x, x.zero_like(), self.delta)
        if isinstance(x, (int, Rational)):
            z = self.a.zero_like()
            return GammaElt(z + x, z, self.delta)
        return None

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return GammaElt(self.a + o.a, self.b + o.b, self.delta)

    __radd__ = __add__

    def __neg__(self):
        return GammaElt(-self.a, -self.b, self.delta)

    def __sub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, (int, Rational)):
            return GammaElt(self.a * o, self.b * o, self.delta)
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return gamma_product(self, o)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = self._lift(o)
        return o is not None and self.a == o.a and self.b == o.b

    __hash__ = None

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def zero_like(self):
        z = self.a.zero_like()
        return GammaElt(z, z, self.delta)

    def one_like(self):
        return GammaElt(self.a.one_like(), self.a.zero_like(), self.delta)

    def weights(self) -> set[int]:
        return self.a.weights() | {w + 1 for w in self.b.weights()}

    def __str__(self):
        if self.b.is_zero():
            return str(self.a)
        tb = f"t*({self.b})"
        return tb if self.a.is_zero() else f"{self.a} + {tb}"


def gamma_product(x: GammaElt, y: GammaElt) -> GammaElt:
    bd = x.b * y.b
    if bd.is_zero():
        return GammaElt(x.a * y.a, x.a * y.b + x.b * y.a, x.delta)
    b1 = GradedPoly.gen(1, x.cap)
    return GammaElt(x.a * y.a + x.delta * bd, x.a * y.b + x.b * y.a - b1 * bd, x.delta)


def gamma_mul(x: GammaElt, y: GammaElt, m: MultiplicationSpec) -> GammaElt:
    x = GammaElt(x.a, x.b, m.delta)
    y = GammaElt(y.a, y.b, m.delta)
    return gamma_product(x, y)


def gamma_t(m: MultiplicationSpec) -> GammaElt:
    z = m.delta.zero_like()
    return GammaElt(z, z.one_like(), m.delta)


def phi(p: GradedPoly, m: MultiplicationSpec, ctx: FglContext, check: bool = True) -> GammaElt:
    if check:
        _require_W(p, ctx)
    return GammaElt(p, d(p, ctx), m.delta)


def reduce_mod_J2_tJ(x: GammaElt) -> GammaElt:
    """Image in R = Gamma/(J^2 + tJ): a mod decomposables, b its constant."""
    b = x.b.component(0)
    return GammaElt(reduce_mod_decomposables(x.a), b, x.delta)


# orientations and F_W

@dataclass(frozen=True)
class OrientationSpec:
    """f(u) = u + sum_{i>=1} lambda_i u^{i+1} together with a projection."""
    f_coeffs: Mapping[int, GradedPoly]
    projection: ProjectionSpec

    def f_series(self, ctx: FglContext) -> Series1:
        coeffs = {(1,): ctx.one()}
        for i, lam in self.f_coeffs.items():
            if i < 1:
                raise ValueError("orientation coefficients start at u^2")
            if not lam.is_homogeneous(i):
                raise ValueError(f"lambda_{i} must have weight {i}")
            coeffs[(i + 1,)] = lam
        return Series1(coeffs, ctx.full_order, ctx.zero(), 2)

    def lam(self, ctx: FglContext) -> GradedPoly:
        """lambda: the d1-coefficient of the operation f (f = 1 + lambda d + g Delta)."""
        return op_from_series(self.f_series(ctx), ctx, exact=True)[1]


def standard_orientation(ctx: FglContext) -> OrientationSpec:
    return OrientationSpec({}, stong_projection(ctx))


def build_orientation(spec: OrientationSpec, ctx: FglContext) -> Series1:
    """w = pi(f(u))."""
    f = spec.f_series(ctx)
    w = apply_to_class(spec.projection.to_op(ctx), f, ctx)
    return w.extended(ctx.full_order)


@dataclass
class FWResult:
    spec: OrientationSpec
    mult: MultiplicationSpec
    w: Series1
    gamma: Series1          # over GammaElt
    phi_fw: Series2         # over GammaElt
    omega: Series2          # t-free part, over GradedPoly
    tpart: Series2          # t-part, over GradedPoly
    order: int

    def omega_ij(self, i: int, j: int) -> GradedPoly:
        return self.omega[(i, j)]


def gamma_series(w: Series1, m: MultiplicationSpec, ctx: FglContext) -> Series1:
    """gamma(u) = phi(w) = w + t dw, with dw the operation d applied to the class w."""
    dw = apply_to_class(partial_op(ctx, 1), w, ctx).extended(w.order)
    zero = GammaElt(ctx.zero(), ctx.zero(), m.delta)
    coeffs = {}
    for j in range(1, w.order + 1):
        g = GammaElt(w[j], dw[j], m.delta)
        if not g.is_zero():
            coeffs[(j,)] = g
    return Series1(coeffs, w.order, zero, 2)


def compute_fw(spec: OrientationSpec, m: MultiplicationSpec, ctx: FglContext) -> FWResult:
    """phi_* F_W = gamma F_U(gamma^-1 u, gamma^-1 v) over Gamma, split into t-free part and t-part."""
    w = build_orientation(spec, ctx)
    gam = gamma_series(w, m, ctx)
    ginv = gam.compositional_inverse()
    zero = gam.zero
    FU = ctx.F_full().map_coefficients(lambda c: GammaElt(c, ctx.zero(), m.delta), zero)
    inner = FU.substitute(embed(ginv, 2, 0), embed(ginv, 2, 1))
    phi_fw = gam.substitute(inner)
    omega = phi_fw.map_coefficients(lambda g: g.a, ctx.zero()).truncate(ctx.order)
    tpart = phi_fw.map_coefficients(lambda g: g.b, ctx.zero()).truncate(ctx.order)
    return FWResult(spec, m, w, gam, phi_fw, omega, tpart, ctx.order)


def fw_tpart_mismatches(fw: FWResult, ctx: FglContext) -> list[tuple]:
    """(i, j) where the t-part differs from d(omega_ij)."""
    bad = []
    for i in range(0, fw.order + 1):
        for j in range(0, fw.order + 1 - i):
            if i + j == 0:
                continue
            if fw.tpart[(i, j)] != d(fw.omega[(i, j)], ctx):
                bad.append((i, j))
    return bad


def fw_coefficients(fw: FWResult) -> dict[tuple, GradedPoly]:
    """omega_ij for i, j >= 1."""
    return {k: c for k, c in fw.omega.items() if k[0] >= 1 and k[1] >= 1}


# associativity over an arbitrary coefficient ring

def associativity_defect(F: Series2) -> dict:
    """Non-zero coefficients of F(F(u,v),w) - F(u,F(v,w)) (three variables).

    Powers are taken of the two-variable series only, then shifted into
    three variables, which keeps the work quadratic in the number of terms.
    """
    order = F.order
    one = F.zero.one_like()
    powers = [PowerSeries.constant(one, order, F.zero, 2)]
    top = max((max(k) for k in F.coeffs), default=0)
    for _ in range(top):
        powers.append(powers[-1] * F)
    lhs: dict = {}
    rhs: dict = {}

    def acc(target, idx, c):
        if sum(idx) > order:
            return
        if idx in target:
            target[idx] = target[idx] + c
        else:
            target[idx] = c
    for (i, j), c in F.coeffs.items():
        # F(F(u,v), w): c * F(u,v)^i * w^j
        for (a, b), e in powers[i].coeffs.items():
            acc(lhs, (a, b, j), c * e)
        # F(u, F(v,w)): c * u^i * F(v,w)^j
        for (a, b), e in powers[j].coeffs.items():
            acc(rhs, (i, a, b), c * e)
    out = {}
    for k in set(lhs) | set(rhs):
        x = lhs.get(k)
        y = rhs.get(k)
        diff = x - y if x is not None and y is not None else (x if y is None else -y)
        if not diff.is_zero():
            out[k] = diff
    return out


def symmetry_defect(F: Series2) -> list[tuple]:
    return [(i, j) for (i, j) in F.coeffs if not (F[(i, j)] - F[(j, i)]).is_zero()]


def fw_over_W(fw: FWResult, ctx: FglContext) -> Series2:
    return fw.omega.map_coefficients(lambda c: WElt(c, fw.mult, ctx), WElt(ctx.zero(), fw.mult, ctx))


# closed forms mod J^2 + tJ

@dataclass
class GammaReductionReport:
    lam: GradedPoly
    ell: int
    gamma2: GammaElt
    expected_gamma2: GammaElt
    omegas: dict[int, GradedPoly]
    bad_omegas: list[int]
    ok: bool


def _reduced_series(s: PowerSeries) -> PowerSeries:
    z = reduce_mod_J2_tJ(s.zero)
    return s.map_coefficients(reduce_mod_J2_tJ, z)


def ell_of(lam: GradedPoly, ctx: FglContext) -> int:
    two_ell = d(lam, ctx)
    c = two_ell.constant_term()
    if not two_ell.is_homogeneous(0) or c.denominator != 1 or c.numerator % 2:
        raise ValueError(f"d(lambda) = {two_ell} is not an even integer")
    return c.numerator // 2


def w_mod_J2_gcd(i: int) -> int:
    """gcd of s_i over W in weight i: 24 at i = 2, m_i m_{i-1} from i = 3 on."""
    if i == 2:
        return 24
    if i == 1:
        return 2
    return m_k(i).value * m_k(i - 1).value


def check_gamma_reduction(fw: FWResult, ctx: FglContext) -> GammaReductionReport:
    """gamma = u - (lambda + (2l+1)t)u^2 + sum gamma_{i+1} u^{i+1} mod J^2+tJ,
    with gamma_{i+1} - (-1)^i alpha_1i = omega_i in W mod J^2."""
    red = _reduced_series(fw.gamma)
    lam = fw.spec.lam(ctx)
    ell = ell_of(lam, ctx)
    delta = fw.mult.delta
    expected2 = GammaElt(-reduce_mod_decomposables(lam), GradedPoly.const(-(2 * ell + 1), ctx.weight_cap), delta)
    ok = red[1] == GammaElt(ctx.one(), ctx.zero(), delta) and red[2] == expected2
    omegas = {}
    bad = []
    for i in range(2, min(fw.gamma.order - 1, ctx.weight_cap) + 1):
        g = red[i + 1]
        if not g.b.is_zero():
            bad.append(i)
            continue
        om = g.a - reduce_mod_decomposables((-1) ** i * ctx.alpha(1, i))
        omegas[i] = om
        s = s_number(om, i)
        if s.denominator != 1 or s.numerator % w_mod_J2_gcd(i):
            bad.append(i)
    return GammaReductionReport(lam, ell, red[2], expected2, omegas, bad, ok and not bad)


def fw_reduced_closed_form(fw: FWResult, ctx: FglContext) -> Series2:
    """The right-hand side of the mod J^2+tJ formula for phi_* F_W, computed over Gamma."""
    delta = fw.mult.delta
    zero = GammaElt(ctx.zero(), ctx.zero(), delta)
    red_g = _reduced_series(fw.gamma)
    lam = fw.spec.lam(ctx)
    ell = ell_of(lam, ctx)
    t = gamma_t(fw.mult)
    order = fw.phi_fw.order
    lift = lambda c: GammaElt(c, ctx.zero(), delta)
    coeffs: dict = {}

    def add(idx, c):
        if sum(idx) > order:
            return
        coeffs[idx] = coeffs[idx] + c if idx in coeffs else c
    add((1, 0), lift(ctx.one()))
    add((0, 1), lift(ctx.one()))
    q = lift(lam) + t * (2 * ell + 1)
    add((1, 1), q * -2)
    r = lift(delta) * (-2 * (2 * ell + 1) ** 2)
    add((1, 2), r)
    add((2, 1), r)
    for (i, j), a in ctx.F_full().items():
        if i >= 1 and j >= 1:
            add((i, j), lift(a))
    for n in range(3, order + 1):
        gn = red_g[n]
        if gn.is_zero():
            continue
        for i in range(1, n):
            add((i, n - i), gn * comb(n, i))
    return Series2(coeffs, order, zero)


def check_fw_reduction(fw: FWResult, ctx: FglContext) -> list[tuple]:
    """Monomials where reduced phi_* F_W and the closed form disagree."""
    lhs = _reduced_series(fw.phi_fw)
    rhs = _reduced_series(fw_reduced_closed_form(fw, ctx))
    keys = set(lhs.coeffs) | set(rhs.coeffs)
    return sorted(k for k in keys if lhs[k] != rhs[k])


def check_higher_coefficients(fw: FWResult, ctx: FglContext) -> list[tuple]:
    """omega_ij = alpha_ij + gamma_{k+1} binom(k+1, i) mod J^2 for i+j = k+1, k >= 3."""
    red_g = _reduced_series(fw.gamma)
    bad = []
    for n in range(4, min(fw.order, ctx.weight_cap + 1) + 1):
        g = red_g[n]
        for i in range(1, n):
            lhs = reduce_mod_decomposables(fw.omega[(i, n - i)])
            rhs = reduce_mod_decomposables(ctx.alpha(i, n - i) + g.a * comb(n, i))
            if lhs != rhs:
                bad.append((i, n - i))
    return bad


# s-number analysis

@dataclass
class SnumberAnalysis:
    k: int
    s_values: dict[tuple, int]
    gcd: int
    signed: int | None
    c_k: int | None
    consistent: bool

    @property
    def predicted(self) -> int | None:
        if self.c_k is None:
            return None
        return abs(gcd_formula(self.k, self.c_k))


def gcd_formula(k: int, c: int) -> int:
    """m_k (1 + (-1)^k (k+1) + c m_k m_{k-1}), signed."""
    mk = m_k(k).value
    mk1 = m_k(k - 1).value
    return mk * (1 + (-1) ** k * (k + 1) + c * mk * mk1)


def snumber_gcd_analysis(fw_coeffs: Mapping[tuple, GradedPoly], k: int,
                         reach: int | None = None) -> SnumberAnalysis:
    """gcd of |s_k(omega_ij)| over i+j = k+1 and the integer c_k it determines.

    ``reach`` is the largest weight for which coefficients were computed.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if reach is not None and k > reach:
        raise ValueError(f"weight {k} is out of reach (computed up to {reach})")
    keys = [(i, k + 1 - i) for i in range(1, k + 1)]
    vals = {}
    for key in keys:
        c = fw_coeffs.get(key)
        vals[key] = s_of(c, k) if c is not None and not c.is_zero() else 0
    g = gcd(*vals.values())
    mk = m_k(k).value
    mk1 = m_k(k - 1).value
    # omega_ij = -binom(k+1, i)/m_k * Y mod J^2, so s_k(Y) = -m_k s_k(omega_1k)/(k+1)
    num = -mk * vals[(1, k)]
    signed = None
    consistent = False
    c = None
    if num % (k + 1) == 0:
        signed = num // (k + 1)
        consistent = all(-mk * v == comb(k + 1, i) * signed for (i, _), v in vals.items())
        consistent = consistent and abs(signed) == g
        rest = signed - mk * (1 + (-1) ** k * (k + 1))
        if rest % (mk * mk * mk1) == 0:
            c = rest // (mk * mk * mk1)
    return SnumberAnalysis(k, vals, g, signed, c, consistent and c is not None)


def predicted_c_shift(p: GradedPoly, k: int) -> Fraction:
    """Change of c_k when f gains p u^{k+1} with p in W: -s_k(p)/(m_k m_{k-1})."""
    return Fraction(-s_number(p, k), m_k(k).value * m_k(k - 1).value)


# the subring generated by the coefficients

def a_lattices(fw: FWResult, ctx: FglContext, top: int | None = None) -> dict:
    """Weight components (1..top) of the *-subring generated by the omega_ij."""
    top = ctx.weight_cap if top is None else top
    coeffs = fw_coefficients(fw)
    by_weight: dict[int, list[GradedPoly]] = {}
    for (i, j), c in coeffs.items():
        by_weight.setdefault(i + j - 1, []).append(c)
    lats = {}
    for n in range(1, top + 1):
        gens = list(by_weight.get(n, []))
        for w in range(1, n):
            for om in by_weight.get(w, []):
                for v in lats[n - w].vectors():
                    gens.append(w_multiply(v, om, fw.mult, ctx, check=False))
        lats[n] = lattice_from_generators(n, gens, ctx.weight_cap, allow_rational=True)
    return lats


@dataclass
class NonGenerationReport:
    k: int
    a_gcd: int
    w_gcd: int
    generates: bool
    solvable_c: int | None
    witness: bool


def non_generation_witness(fw: FWResult, ctx: FglContext, k: int, lats: dict | None = None) -> NonGenerationReport:
    if k < 3 or k > ctx.weight_cap:
        raise ValueError(f"k = {k} out of reach")
    lats = a_lattices(fw, ctx, k) if lats is None else lats
    a_g = s_gcd(lats[k], k)
    w_g = s_gcd(w_lattice(ctx, k), k)
    c = solve_c_for_gcd(k, w_g)
    return NonGenerationReport(k, a_g, w_g, a_g == w_g, c, a_g != w_g and c is None)


def solve_c_for_gcd(k: int, target: int, search: int = 10_000) -> int | None:
    """Integer c with |gcd_formula(k, c)| = target, if any."""
    mk = m_k(k).value
    mk1 = m_k(k - 1).value
    base = mk * (1 + (-1) ** k * (k + 1))
    step = mk * mk * mk1
    for sign in (1, -1):
        if (sign * target - base) % step == 0:
            return (sign * target - base) // step
    return None


# orientation realising prescribed c_k

def orientation_for_c(ctx: FglContext, targets: Mapping[int, int],
                      projection: ProjectionSpec | None = None) -> OrientationSpec:
    """f = u + sum p_k u^{k+1} with p_k = -c_k x_k, x_k in W with s_k(x_k) = m_k m_{k-1}.

    Starting from the standard orientation (c_k = 0), this sets c_k to the targets.
    """
    projection = stong_projection(ctx) if projection is None else projection
    coeffs = {}
    for k, c in targets.items():
        if not c:
            continue
        target = m_k(k).value * m_k(k - 1).value
        x = element_with_s(w_lattice(ctx, k), k, target)
        if x is None:
            raise ValueError(f"no W element of weight {k} with s_k = {target}")
        coeffs[k] = x * (-c)
    return OrientationSpec(coeffs, projection)
