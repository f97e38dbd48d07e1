"""Batch verification of every computational claim at a configurable truncation.

Each check is a pure function of the configuration.  Randomised checks draw
from a ``random.Random`` seeded by the configuration and the check name, so
reports are reproducible byte for byte.
"""
from __future__ import annotations

import fnmatch
import json
import random
import zlib
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .algebra import s_number
from .fgl import (ConfigError, DEFAULT_ORDER, DEFAULT_WEIGHT_CAP, build_context, check_caps,
                  k_power, k_power_inductive)
from .integral import element_with_s, mu_lattice, random_element, s_gcd, w_lattice
from .numtheory import cases_solver, fermat_solutions, m_k, mk_closed_form, mk_gcd, excluded_form
from .ops import (PrecisionError, SuOp, apply, big_delta, compose, dbar_op, identity_op,
                  op_difference, partial_op)
from .parse import parse_op, parse_poly
from .wtheory import (MultiplicationSpec, OrientationSpec, ProjectionSpec, a_lattices,
                      associativity_defect, check_fw_reduction, check_gamma_reduction, check_higher_coefficients, compute_fw,
                      fw_coefficients, fw_over_W, fw_tpart_mismatches, gamma_product, gamma_t, gcd_formula,
                      is_in_W, non_generation_witness, orientation_for_c, phi, predicted_c_shift,
                      projection_family, snumber_gcd_analysis, standard_orientation,
                      stong_multiplication, stong_projection, symmetry_defect, w_multiply)


@dataclass
class VerifyConfig:
    order: int = DEFAULT_ORDER
    weight_cap: int = DEFAULT_WEIGHT_CAP
    seed: int = 0
    only: str | None = None
    k: int | None = None
    lambdas: str | None = None      # user projection as an operation literal
    omega: str | None = None        # W_4 parameter of the multiplication
    samples: int = 50
    random_orientations: int = 5

    def validate(self):
        check_caps(self.order, self.weight_cap)
        if self.k is not None and not 3 <= self.k <= self.weight_cap:
            raise ConfigError(f"k must lie in 3..{self.weight_cap}")
        if self.samples < 1 or self.random_orientations < 0:
            raise ConfigError("sample counts must be positive")


@dataclass
class CheckResult:
    check: str
    paper_ref: str
    status: str
    witness: str | None = None
    detail: str | None = None
    parameters: dict = field(default_factory=dict)

    def as_dict(self, degree_cap: int) -> dict:
        return {
            "name": self.check,
            "paper_ref": self.paper_ref,
            "degree_cap": degree_cap,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
            "parameters": self.parameters,
        }


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    caps: dict

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        cap = 2 * self.caps["weight_cap"]
        return {"caps": self.caps, "checks": [c.as_dict(cap) for c in self.checks],
                "status": "pass" if self.passed else "fail"}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():5} {c.check}: {c.paper_ref}"
            if c.detail:
                line += f" [{c.detail}]"
            lines.append(line)
            if c.witness:
                lines.append(f"      witness: {c.witness}")
        n_fail = sum(c.status == "fail" for c in self.checks)
        lines.append(f"{len(self.checks)} checks, {n_fail} failed")
        return "\n".join(lines)


class _Fail(Exception):
    pass


class _Check:
    """Collects sub-assertions; the first failure becomes the witness."""

    def __init__(self):
        self.failures: list[str] = []
        self.notes: list[str] = []

    def expect(self, cond: bool, witness: str):
        if not cond:
            self.failures.append(witness)

    def note(self, text: str):
        self.notes.append(text)


REGISTRY: dict[str, tuple[str, Callable]] = {}


def register(name: str, ref: str):
    def deco(fn):
        REGISTRY[name] = (ref, fn)
        return fn
    return deco


def _rng(cfg: VerifyConfig, name: str) -> random.Random:
    return random.Random(cfg.seed * 1_000_003 + zlib.crc32(name.encode()))


class _Env:
    """Lazily shared objects for one verification run."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.ctx = build_context(cfg.order, cfg.weight_cap)
        self._mult = None
        self._fw = None
        self._lats = None

    @property
    def mult(self) -> MultiplicationSpec:
        if self._mult is None:
            if self.cfg.omega:
                try:
                    om = parse_poly(self.cfg.omega, self.ctx)
                except ValueError as e:
                    raise ConfigError(f"bad omega {self.cfg.omega!r}: {e}") from e
                if self.ctx.weight_cap < 2 or not w_lattice(self.ctx, 2).contains(om):
                    raise ConfigError(f"omega {self.cfg.omega!r} is not in the weight-2 W lattice")
                self._mult = MultiplicationSpec.from_omega(om, self.ctx)
            else:
                self._mult = stong_multiplication(self.ctx)
        return self._mult

    @property
    def fw(self):
        if self._fw is None:
            self._fw = compute_fw(standard_orientation(self.ctx), self.mult, self.ctx)
        return self._fw

    @property
    def lats(self):
        if self._lats is None:
            self._lats = a_lattices(self.fw, self.ctx)
        return self._lats

    def params(self, **extra) -> dict:
        out = {"order": self.cfg.order, "weight_cap": self.cfg.weight_cap}
        out.update(extra)
        return out


def _k_range(env: _Env, lo: int = 3, hi: int = 8) -> list[int]:
    if env.cfg.k is not None:
        return [env.cfg.k]
    return list(range(lo, min(hi, env.ctx.weight_cap) + 1))


# 1
@register("fgl_axioms", "formal group law of complex cobordism: unit, commutativity, associativity, inverse")
def _fgl_axioms(env: _Env, c: _Check):
    ctx = env.ctx
    F = ctx.F
    u = ctx.u(ctx.order)
    zero_v = u.zero_series()
    c.expect(F.substitute(u, zero_v) == u, "F(u, 0) != u")
    c.expect(not symmetry_defect(F), f"F not symmetric at {symmetry_defect(F)[:3]}")
    assoc = associativity_defect(F)
    c.expect(not assoc, f"associativity fails at {sorted(assoc)[:3]}")
    inv = ctx.inv
    c.expect(F.substitute(u, inv).is_zero(), "F(u, ubar) != 0")
    for k in range(-5, 6):
        c.expect(k_power(ctx, k) == k_power_inductive(ctx, k), f"[{k}](u) disagrees with iterated F")
    c.note(f"order {ctx.order}")


# 2
@register("alpha_values", "alpha_11 = -[CP^1], alpha_12 = [CP^1]^2 - [CP^2], s-numbers of alpha_ij mod decomposables")
def _alpha_values(env: _Env, c: _Check):
    ctx = env.ctx
    b = ctx.b
    c.expect(ctx.alpha(1, 1) == -b(1), f"alpha_11 = {ctx.alpha(1, 1)}")
    if ctx.weight_cap >= 2:
        c.expect(ctx.alpha(1, 2) == b(1) ** 2 - b(2), f"alpha_12 = {ctx.alpha(1, 2)}")
    n = 0
    for i in range(1, 10):
        for j in range(1, 10 - i):
            w = i + j - 1
            if w > ctx.weight_cap or i + j > 9:
                continue
            s = s_number(ctx.alpha(i, j), w)
            c.expect(abs(s) == comb(i + j, i), f"|s_{w}(alpha_{i}{j})| = {abs(s)}, expected {comb(i + j, i)}")
            n += 1
    c.note(f"{n} s-numbers")


# 3
@register("partial_values", "d[CP^1] = 2, d_i[CP^1] = 0 (i >= 2), d[CP^2] = 0, d_2[CP^2] = 9, Delta[V] = 1")
def _partial_values(env: _Env, c: _Check):
    ctx = env.ctx
    b = ctx.b
    d1 = partial_op(ctx, 1)
    c.expect(apply(d1, b(1), ctx) == 2, f"d b1 = {apply(d1, b(1), ctx)}")
    for i in range(2, ctx.weight_cap + 1):
        c.expect(apply(partial_op(ctx, i), b(1), ctx).is_zero(), f"d_{i} b1 != 0")
    if ctx.weight_cap >= 2:
        c.expect(apply(d1, b(2), ctx).is_zero(), f"d b2 = {apply(d1, b(2), ctx)}")
        c.expect(apply(partial_op(ctx, 2), b(2), ctx) == 9, "d_2 b2 != 9")
        V = ctx.alpha(1, 2)
        c.expect(apply(big_delta(ctx), V, ctx) == 1, f"Delta[V] = {apply(big_delta(ctx), V, ctx)}")


def _sample_ops(ctx) -> list[tuple[str, SuOp]]:
    ops = [("d1", partial_op(ctx, 1)), ("d2", partial_op(ctx, 2)), ("d3", partial_op(ctx, 3)),
           ("Delta", big_delta(ctx)), ("pi0", stong_projection(ctx).to_op(ctx))]
    if ctx.weight_cap >= 2:
        ops.append(("dbar2", dbar_op(ctx, 2)))
    ops.append(("b1*d2", partial_op(ctx, 2).scale(ctx.b(1))))
    return ops


# 4
@register("composition", "composition of SU-linear operations via structure constants; d_k d = 0")
def _composition(env: _Env, c: _Check):
    ctx = env.ctx
    rng = _rng(env.cfg, "composition")
    ops = _sample_ops(ctx)
    comps = {}
    for nf, f in ops:
        for ng, g in ops:
            comps[(nf, ng)] = compose(f, g, ctx)
    checked = 0
    for n in range(1, ctx.weight_cap + 1):
        lat = mu_lattice(ctx, n)
        for _ in range(env.cfg.samples):
            p = random_element(lat, rng)
            (nf, f), (ng, g) = rng.choice(ops), rng.choice(ops)
            fg = comps[(nf, ng)]
            target = n + fg.defect
            if target < 0 or target > fg.known_weight or n + g.defect > g.known_weight:
                continue
            try:
                direct = apply(fg, p, ctx)
                seq = apply(f, apply(g, p, ctx), ctx)
            except PrecisionError:
                continue
            c.expect(direct == seq, f"({nf} o {ng})({p}) = {direct} but {nf}({ng}(p)) = {seq}")
            checked += 1
    d1 = partial_op(ctx, 1)
    for k in range(1, ctx.weight_cap + 1):
        dk = compose(partial_op(ctx, k), d1, ctx)
        c.expect(dk.is_zero(), f"d_{k} o d = {dk}")
    c.note(f"{checked} sampled compositions")


# 5
@register("stong_projection", "Stong projection: idempotent, d pi0 = pi0 d = d, fixes ker Delta")
def _stong(env: _Env, c: _Check):
    ctx = env.ctx
    b = ctx.b
    pi0 = stong_projection(ctx).to_op(ctx)
    d1 = partial_op(ctx, 1)
    diff = op_difference(compose(pi0, pi0, ctx), pi0)
    c.expect(not diff, f"pi0 o pi0 - pi0 has coefficients {diff}")
    diff = op_difference(compose(d1, pi0, ctx), d1)
    c.expect(not diff, f"d o pi0 - d = {diff}")
    diff = op_difference(compose(pi0, d1, ctx), d1)
    c.expect(not diff, f"pi0 o d - d = {diff}")
    if ctx.weight_cap >= 2:
        c.expect(apply(pi0, b(2), ctx) == 9 * b(1) ** 2 - 8 * b(2), f"pi0 b2 = {apply(pi0, b(2), ctx)}")
        c.expect(apply(pi0, ctx.alpha(1, 2), ctx).is_zero(), "pi0 [V] != 0")
    c.expect(apply(pi0, ctx.one(), ctx) == 1 and apply(pi0, b(1), ctx) == b(1), "pi0 moves 1 or b1")
    for n in range(1, ctx.weight_cap + 1):
        for v in w_lattice(ctx, n).vectors():
            c.expect(apply(pi0, v, ctx) == v, f"pi0 moves the W element {v}")


def _random_w(ctx, rng, weight):
    return random_element(w_lattice(ctx, weight), rng, 3)


def _random_omega(ctx, rng):
    if ctx.weight_cap < 2:
        return ctx.zero()
    return _random_w(ctx, rng, 2)


# 6
@register("multiplication", "SU-bilinear multiplications a*b = ab + (2[V] - omega) da db")
def _multiplication(env: _Env, c: _Check):
    ctx = env.ctx
    D = ctx.weight_cap
    rng = _rng(env.cfg, "multiplication")
    b1 = ctx.b(1)
    st = stong_multiplication(ctx)
    if D >= 2:
        c.expect(w_multiply(b1, b1, st, ctx) == 9 * b1 ** 2 - 8 * ctx.b(2), "b1*b1 != 9b1^2 - 8b2")
    Delta = big_delta(ctx)
    for _ in range(20):
        m = MultiplicationSpec.from_omega(_random_omega(ctx, rng), ctx)
        errs = m.validate(ctx)
        c.expect(not errs, f"invalid multiplication: {errs}")
        wa = rng.randint(1, max(1, D - 2))
        wb = rng.randint(1, max(1, D - wa - 1))
        wc = rng.randint(1, max(1, D - wa - wb))
        a, bb, cc = (_random_w(ctx, rng, w) for w in (wa, wb, wc))
        ab = w_multiply(a, bb, m, ctx)
        c.expect(ab == w_multiply(bb, a, m, ctx), f"a*b != b*a for a={a}, b={bb}")
        lhs = w_multiply(ab, cc, m, ctx)
        rhs = w_multiply(a, w_multiply(bb, cc, m, ctx), m, ctx)
        c.expect(lhs == rhs, f"(a*b)*c != a*(b*c) for a={a}, b={bb}, c={cc}, delta={m.delta}")
        c.expect(w_multiply(a, ctx.one(), m, ctx) == a, f"a*1 != a for {a}")
        c.expect(apply(Delta, ab, ctx).is_zero(), f"Delta(a*b) != 0 for a={a}, b={bb}")


# 7
@register("gamma_phi", "phi(x) = x + t dx is multiplicative into MU[t]/(t^2 = -[CP^1]t + delta)")
def _gamma_phi(env: _Env, c: _Check):
    ctx = env.ctx
    D = ctx.weight_cap
    rng = _rng(env.cfg, "gamma_phi")
    for _ in range(20):
        m = MultiplicationSpec.from_omega(_random_omega(ctx, rng), ctx)
        wx = rng.randint(1, max(1, D - 1))
        wy = rng.randint(1, max(1, D - wx))
        x, y = _random_w(ctx, rng, wx), _random_w(ctx, rng, wy)
        lhs = phi(w_multiply(x, y, m, ctx), m, ctx)
        rhs = gamma_product(phi(x, m, ctx), phi(y, m, ctx))
        c.expect(lhs == rhs, f"phi(x*y) != phi(x)phi(y) for x={x}, y={y}")
    t = gamma_t(env.mult)
    tt = gamma_product(t, t)
    c.expect(tt.a == env.mult.delta and tt.b == -ctx.b(1), f"t^2 = {tt}")


# 8
@register("fw_standard", "F_W for the standard orientation: coefficients in W, t-part = d(t-free part), FGL axioms")
def _fw_standard(env: _Env, c: _Check):
    ctx = env.ctx
    fw = env.fw
    c.expect(fw.omega_ij(1, 1) == -ctx.b(1), f"omega_11 = {fw.omega_ij(1, 1)}")
    bad = fw_tpart_mismatches(fw, ctx)
    c.expect(not bad, f"t-part differs from d(omega) at {bad[:3]}")
    coeffs = fw_coefficients(fw)
    notw = [k for k, v in coeffs.items() if not is_in_W(v, ctx)]
    c.expect(not notw, f"omega_ij not in ker Delta at {notw[:3]}")
    nonint = [k for k, v in coeffs.items() if not mu_lattice(ctx, k[0] + k[1] - 1).contains(v)]
    c.expect(not nonint, f"omega_ij not integral at {nonint[:3]}")
    c.expect(fw.omega[(1, 0)] == 1 and fw.omega[(0, 1)] == 1 and not fw.omega[(2, 0)],
             "F_W(u, 0) != u")
    c.expect(not symmetry_defect(fw.omega), "F_W not symmetric")
    assoc = associativity_defect(fw_over_W(fw, ctx))
    c.expect(not assoc, f"F_W not associative under * at {sorted(assoc)[:3]}")
    assoc = associativity_defect(fw.phi_fw.truncate(ctx.order))
    c.expect(not assoc, f"phi_* F_W not associative over Gamma at {sorted(assoc)[:3]}")


def _random_orientation(ctx, rng) -> OrientationSpec:
    coeffs = {i: random_element(mu_lattice(ctx, i), rng, 3) for i in range(1, ctx.weight_cap + 1)}
    return OrientationSpec(coeffs, stong_projection(ctx))


# 9
@register("fw_closed_forms", "reductions mod J^2 + tJ: gamma(u), phi_* F_W closed form, higher coefficients")
def _fw_closed_forms(env: _Env, c: _Check):
    ctx = env.ctx
    rng = _rng(env.cfg, "fw_closed_forms")
    specs = [("standard", standard_orientation(ctx))]
    for i in range(env.cfg.random_orientations):
        specs.append((f"random{i}", _random_orientation(ctx, rng)))
    for name, spec in specs:
        fw = env.fw if name == "standard" else compute_fw(spec, env.mult, ctx)
        g = check_gamma_reduction(fw, ctx)
        c.expect(g.ok, f"{name}: gamma mod J^2+tJ has gamma_2 = {g.gamma2}, expected {g.expected_gamma2}; "
                       f"bad omega_i at {g.bad_omegas}")
        if name == "standard":
            nz = {i: str(v) for i, v in g.omegas.items() if not v.is_zero()}
            c.expect(not nz, f"standard orientation has omega_i = {nz}")
        bad = check_fw_reduction(fw, ctx)
        c.expect(not bad, f"{name}: closed form of phi_* F_W fails at {bad[:3]}")
        bad = check_higher_coefficients(fw, ctx)
        c.expect(not bad, f"{name}: higher coefficient formula fails at {bad[:3]}")
    c.note(f"{len(specs)} orientations")


# 10
@register("coefficient_gcd", "gcd of s_k(omega_ij) = |m_k(1 + (-1)^k (k+1) + c_k m_k m_{k-1})|")
def _coefficient_gcd(env: _Env, c: _Check):
    ctx = env.ctx
    rng = _rng(env.cfg, "coefficient_gcd")
    coeffs = fw_coefficients(env.fw)
    gcds = []
    for k in _k_range(env):
        a = snumber_gcd_analysis(coeffs, k, ctx.weight_cap)
        c.expect(a.consistent, f"k={k}: s-numbers {a.s_values} do not fit the formula")
        c.expect(a.c_k == 0 or env.cfg.omega is not None, f"k={k}: standard orientation has c_k = {a.c_k}")
        c.expect(a.c_k is not None and a.gcd == abs(gcd_formula(k, a.c_k)),
                 f"k={k}: gcd {a.gcd} vs formula")
        gcds.append(a.gcd)
        p = _random_w(ctx, rng, k)
        while p.is_zero():
            p = _random_w(ctx, rng, k)
        fw = compute_fw(OrientationSpec({k: p}, stong_projection(ctx)), env.mult, ctx)
        b = snumber_gcd_analysis(fw_coefficients(fw), k, ctx.weight_cap)
        shift = predicted_c_shift(p, k)
        c.expect(b.consistent and b.c_k is not None and a.c_k is not None and b.c_k - a.c_k == shift,
                 f"k={k}: f = u + ({p})u^{k + 1} gives c_k = {b.c_k}, predicted {a.c_k} + {shift}")
    c.note("gcds " + ",".join(map(str, gcds)))


# 11
@register("non_generation", "the coefficients of F_W do not generate W_* (dimension 8 witness)")
def _non_generation(env: _Env, c: _Check):
    ctx = env.ctx
    k = env.cfg.k if env.cfg.k is not None else 4
    if k > ctx.weight_cap:
        raise _Skip(f"k = {k} exceeds the weight cap")
    r = non_generation_witness(env.fw, ctx, k, env.lats)
    expected_witness = excluded_form(k)
    c.expect(r.witness == expected_witness,
             f"k={k}: A-gcd {r.a_gcd}, W-gcd {r.w_gcd}, solvable c = {r.solvable_c}")
    if k == 4 and env.cfg.omega is None:
        c.expect(r.a_gcd == 30 and r.w_gcd == 10, f"A-gcd {r.a_gcd}, W-gcd {r.w_gcd}")
        c.expect(all(abs(30 + 50 * cc) != 10 for cc in range(-1000, 1001)), "|30 + 50c| = 10 solvable")
    c.note(f"k={k}: A-gcd {r.a_gcd}, W-gcd {r.w_gcd}, witness {r.witness}")


# 12
@register("w_lattices", "s_k gcd over W equals m_k m_{k-1}, over MU equals m_k; W_4 = Z(9[CP^1]^2 - 8[CP^2])")
def _w_lattices(env: _Env, c: _Check):
    ctx = env.ctx
    for k in range(1, ctx.weight_cap + 1):
        g = s_gcd(mu_lattice(ctx, k), k)
        c.expect(g == m_k(k).value, f"MU s_{k} gcd {g} != m_{k} = {m_k(k).value}")
    for k in range(3, ctx.weight_cap + 1):
        g = s_gcd(w_lattice(ctx, k), k)
        want = m_k(k).value * m_k(k - 1).value
        c.expect(g == want, f"W s_{k} gcd {g} != {want}")
    if ctx.weight_cap >= 2:
        W2 = w_lattice(ctx, 2)
        gen = 9 * ctx.b(1) ** 2 - 8 * ctx.b(2)
        c.expect(W2.rank == 1 and W2.vectors()[0] in (gen, -gen), f"W_4 lattice is {W2}")


# 13
@register("numtheory", "m_k closed form, p^s = 2^l + 1 solutions, solvability of c_k")
def _numtheory(env: _Env, c: _Check):
    for k in range(1, 201):
        c.expect(mk_gcd(k) == mk_closed_form(k), f"m_{k}: {mk_gcd(k)} vs {mk_closed_form(k)}")
    sols = fermat_solutions(20)
    want = [(3, 1, 1), (5, 1, 2), (3, 2, 3), (17, 1, 4), (257, 1, 8), (65537, 1, 16)]
    c.expect(sols == want, f"fermat_solutions(20) = {sols}")
    excluded = []
    for k in range(2, 61):
        r = cases_solver(k)
        c.expect(r.solvable != r.excluded, f"k={k}: solvable={r.solvable}, excluded={r.excluded}")
        if r.solvable:
            want = m_k(k).value * m_k(k - 1).value
            c.expect(r.gcd_with(r.c) == want, f"k={k}: c={r.c} gives {r.gcd_with(r.c)}, not {want}")
        else:
            excluded.append(k)
    c.expect(excluded == [2, 4, 8, 16], f"excluded k = {excluded}")
    c.note(f"excluded {excluded}")


# 14
@register("odd_generation", "an orientation whose F_W coefficients generate W_*[1/2] (through the cap)")
def _odd_generation(env: _Env, c: _Check):
    ctx = env.ctx
    D = ctx.weight_cap
    targets = {}
    for k in range(3, D + 1):
        r = cases_solver(k)
        targets[k] = r.c if r.solvable else r.exceptional_c
    spec = orientation_for_c(ctx, targets)
    fw = compute_fw(spec, env.mult, ctx)
    c.expect(fw.omega_ij(1, 1) == -ctx.b(1), f"omega_11 = {fw.omega_ij(1, 1)}, lambda should vanish")
    lats = a_lattices(fw, ctx)
    found = []
    if D >= 2:
        x2 = element_with_s(lats[2], 2, 24) or element_with_s(lats[2], 2, 48)
        c.expect(x2 is not None, f"no x_2 with |s_2| in {{24, 48}}; A_4 s-gcd {s_gcd(lats[2], 2)}")
        if x2 is not None:
            found.append(f"s_2={int(s_number(x2, 2))}")
    coeffs = fw_coefficients(fw)
    for k in range(3, D + 1):
        g = s_gcd(lats[k], k)
        want = m_k(k).value * m_k(k - 1).value
        ratio_odd = _odd_part(g) == _odd_part(want)
        c.expect(ratio_odd, f"k={k}: A s-gcd {g} is not {want} up to a power of 2")
        x = element_with_s(lats[k], k, g)
        c.expect(x is not None and abs(s_number(x, k)) == g, f"k={k}: no element realising s_k = {g}")
        a = snumber_gcd_analysis(coeffs, k, D)
        c.expect(a.c_k == targets[k], f"k={k}: realised c_k = {a.c_k}, intended {targets[k]}")
        found.append(f"k{k}:{g}")
    if D >= 8:
        c.expect(targets[8] == -2 and snumber_gcd_analysis(coeffs, 8, D).gcd == 6, "c_8 = -2 branch")
    if D >= 4:
        c.expect(s_gcd(lats[4], 4) == 80, f"k=4 branch gcd {s_gcd(lats[4], 4)} != 80")
    c.note(" ".join(found))


def _odd_part(n: int) -> int:
    n = abs(n)
    while n and n % 2 == 0:
        n //= 2
    return n


# extra
@register("projection_validity", "Delta o pi = 0 for the configured projection and for pi0(1 + f Delta)")
def _projection_validity(env: _Env, c: _Check):
    ctx = env.ctx
    if env.cfg.lambdas:
        spec = user_projection(env.cfg.lambdas, ctx)
        defect = spec.validity_defect(ctx)
        c.expect(not defect, "Delta o pi has " + ", ".join(f"d{i}: {v}" for i, v in list(defect.items())[:2]))
        return
    c.expect(stong_projection(ctx).is_valid(ctx), "Stong projection is not valid")
    rng = _rng(env.cfg, "projection_validity")
    for _ in range(3):
        f = SuOp({i: random_element(mu_lattice(ctx, i + 2), rng, 2) for i in range(0, ctx.weight_cap - 1)},
                 2, ctx.weight_cap, None)
        spec = projection_family(ctx, f)
        defect = spec.validity_defect(ctx)
        c.expect(not defect, f"pi0(1 + f Delta) invalid for f = {f}")


class _Skip(Exception):
    pass


def user_projection(text: str, ctx) -> ProjectionSpec:
    """A projection literal; the leading d0 may be omitted."""
    try:
        op = parse_op(text, ctx)
        if op.is_zero() or op[0].is_zero():
            op = identity_op(ctx) + op
        return ProjectionSpec.from_op(op)
    except ValueError as e:
        raise ConfigError(f"bad projection {text!r}: {e}") from e


def check_names() -> list[str]:
    return sorted(REGISTRY)


def verify_all(config: VerifyConfig | None = None) -> VerificationReport:
    cfg = config or VerifyConfig()
    cfg.validate()
    names = check_names()
    if cfg.only:
        names = [n for n in names if fnmatch.fnmatchcase(n, cfg.only)]
        if not names:
            raise ConfigError(f"no check matches {cfg.only!r}")
    env = _Env(cfg)
    if cfg.omega:
        errs = env.mult.validate(env.ctx)
        if errs:
            raise ConfigError("; ".join(errs))
    if cfg.lambdas:
        user_projection(cfg.lambdas, env.ctx)
    results = []
    for name in names:
        ref, fn = REGISTRY[name]
        chk = _Check()
        params = env.params(orientation="standard", omega=cfg.omega or "0")
        if name in ("coefficient_gcd", "non_generation") and cfg.k is not None:
            params["k"] = cfg.k
        if name in ("composition", "multiplication", "gamma_phi", "fw_closed_forms", "coefficient_gcd",
                    "projection_validity"):
            params["seed"] = cfg.seed
        if name == "projection_validity" and cfg.lambdas:
            params["lambdas"] = cfg.lambdas
        try:
            fn(env, chk)
        except _Skip as e:
            results.append(CheckResult(name, ref, "skipped", None, str(e), params))
            continue
        status = "fail" if chk.failures else "pass"
        witness = "; ".join(chk.failures[:3]) if chk.failures else None
        detail = "; ".join(chk.notes) if chk.notes else None
        results.append(CheckResult(name, ref, status, witness, detail, params))
    caps = {"order": cfg.order, "weight_cap": cfg.weight_cap, "seed": cfg.seed}
    return VerificationReport(results, caps)
