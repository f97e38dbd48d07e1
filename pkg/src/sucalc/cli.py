"""Command-line front end.

Every subcommand produces a small result object that can be rendered as
plain text, JSON or CSV.  Exit codes: 0 success, 1 a check failed,
2 bad configuration or input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .algebra import GradedPoly
from .fgl import (ConfigError, DEFAULT_ORDER, DEFAULT_WEIGHT_CAP, alpha_power, beta_coeffs,
                  build_context, k_power)
from .integral import mu_lattice, w_lattice
from .numtheory import cases_solver, fermat_solutions, m_k
from .ops import PrecisionError, SuOp, apply, compose, delta_op, op_to_series
from .parse import ParseError, parse_op, parse_poly, parse_series
from .series import PowerSeries, format_series, series_to_rows
from .verify import VerifyConfig, check_names, user_projection, verify_all
from .wtheory import (MultiplicationSpec, NotInW, OrientationSpec, compute_fw, fw_coefficients,
                      is_in_W, non_generation_witness, project, snumber_gcd_analysis, stong_multiplication,
                      stong_projection, w_multiply)


@dataclass
class Output:
    text: str
    data: object
    header: list[str] | None = None
    rows: list[list[str]] = field(default_factory=list)
    ok: bool = True

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True)
        if fmt == "csv":
            if self.header is None:
                raise ConfigError("this command has no tabular output; use --format text or json")
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue().rstrip("\n")
        return self.text


def _series_output(s: PowerSeries) -> Output:
    rows = series_to_rows(s)
    header = list("ijk"[: s.nvars]) + ["coefficient"]
    data = {"order": s.order, "terms": [dict(zip(header, r)) for r in rows]}
    return Output(format_series(s), data, header, rows)


def _op_output(op: SuOp) -> Output:
    rows = [[str(i), str(op.coeffs[i])] for i in op.support()]
    data = {"op": str(op), "defect": op.defect, "known_weight": op.known_weight,
            "coeffs": {str(i): str(op.coeffs[i]) for i in op.support()}}
    return Output(str(op), data, ["i", "coefficient"], rows)


def _poly_output(p: GradedPoly, **extra) -> Output:
    data = {"value": str(p)}
    data.update({k: str(v) for k, v in extra.items()})
    return Output(str(p), data, ["value"], [[str(p)]])


# fgl

def cmd_fgl_coeffs(args, ctx):
    if args.power is None:
        return _series_output(ctx.F)
    return _series_output(alpha_power(ctx, args.power).truncate(ctx.order))


def cmd_fgl_kpower(args, ctx):
    return _series_output(k_power(ctx, args.k).truncate(ctx.order))


def cmd_fgl_beta(args, ctx):
    if args.k < 1 or args.m < 0:
        raise ConfigError("beta needs k >= 1 and m >= 0")
    return _series_output(beta_coeffs(ctx, args.k, args.m).truncate(ctx.order))


def cmd_fgl_log(args, ctx):
    return _series_output({"log": ctx.log, "exp": ctx.exp, "inverse": ctx.inv}[args.which])


# op

def cmd_op_expand(args, ctx):
    k1, k2 = args.delta
    if k1 < 0 or k2 < 0:
        raise ConfigError("Delta indices must be non-negative")
    return _op_output(delta_op(ctx, k1, k2))


def cmd_op_apply(args, ctx):
    op = parse_op(args.op, ctx)
    p = parse_poly(args.elem, ctx)
    return _poly_output(apply(op, p, ctx))


def cmd_op_compose(args, ctx):
    if len(args.op) < 2:
        raise ConfigError("compose needs at least two --op arguments")
    ops = [parse_op(t, ctx) for t in args.op]
    out = ops[-1]
    for f in reversed(ops[:-1]):
        out = compose(f, out, ctx)
    return _op_output(out)


def cmd_op_series(args, ctx):
    s = op_to_series(parse_op(args.op, ctx), ctx, args.basis)
    return _series_output(s.truncate(min(s.order, ctx.order)))


# w

def _projection(args, ctx):
    if getattr(args, "lambdas", None):
        return user_projection(args.lambdas, ctx)
    return stong_projection(ctx)


def _multiplication(args, ctx) -> MultiplicationSpec:
    text = getattr(args, "omega", None)
    if not text:
        return stong_multiplication(ctx)
    om = parse_poly(text, ctx)
    if ctx.weight_cap < 2 or not w_lattice(ctx, 2).contains(om):
        raise ConfigError(f"omega {text!r} is not in the weight-2 W lattice")
    return MultiplicationSpec.from_omega(om, ctx)


def _orientation(args, ctx) -> OrientationSpec:
    proj = _projection(args, ctx)
    if not args.orientation:
        return OrientationSpec({}, proj)
    s = parse_series(args.orientation, ctx)
    if s.nvars != 1 or s.constant_term() != 0 or s[1] != 1:
        raise ConfigError("an orientation has the form u + lambda_1 u^2 + ...")
    coeffs = {}
    for i in range(1, s.order):
        c = s[i + 1]
        if c.is_zero():
            continue
        if not c.is_homogeneous(i):
            raise ConfigError(f"coefficient of u^{i + 1} must have weight {i}")
        coeffs[i] = c
    return OrientationSpec(coeffs, proj)


def cmd_w_project(args, ctx):
    p = parse_poly(args.elem, ctx)
    return _poly_output(project(_projection(args, ctx), p, ctx))


def cmd_w_multiply(args, ctx):
    m = _multiplication(args, ctx)
    a, b = parse_poly(args.a, ctx), parse_poly(args.b, ctx)
    return _poly_output(w_multiply(a, b, m, ctx), delta=m.delta)


def cmd_w_fgl(args, ctx):
    fw = compute_fw(_orientation(args, ctx), _multiplication(args, ctx), ctx)
    return _series_output(fw.omega)


def cmd_w_analyze(args, ctx):
    if not 3 <= args.k <= ctx.weight_cap:
        raise ConfigError(f"k must lie in 3..{ctx.weight_cap}")
    fw = compute_fw(_orientation(args, ctx), _multiplication(args, ctx), ctx)
    a = snumber_gcd_analysis(fw_coefficients(fw), args.k, ctx.weight_cap)
    r = non_generation_witness(fw, ctx, args.k)
    data = {"k": args.k, "s_values": {f"{i},{j}": v for (i, j), v in a.s_values.items()},
            "gcd": a.gcd, "c_k": a.c_k, "consistent": a.consistent, "predicted_gcd": a.predicted,
            "a_gcd": r.a_gcd, "w_gcd": r.w_gcd, "generates": r.generates,
            "solvable_c": r.solvable_c, "non_generation_witness": r.witness}
    lines = [f"k = {args.k}",
             "s_k(omega_ij): " + ", ".join(f"({i},{j}) {v}" for (i, j), v in a.s_values.items()),
             f"gcd {a.gcd}, c_k = {a.c_k}, formula {'agrees' if a.consistent else 'disagrees'}",
             f"subring s-gcd {r.a_gcd}, W s-gcd {r.w_gcd}, "
             + ("generated" if r.generates else "not generated")
             + ("" if r.generates or r.solvable_c is None else f", reachable with c = {r.solvable_c}")
             + (", no integer c reaches the W gcd" if r.witness else "")]
    rows = [[str(i), str(j), str(v)] for (i, j), v in a.s_values.items()]
    return Output("\n".join(lines), data, ["i", "j", "s_k"], rows, ok=a.consistent)


def cmd_w_member(args, ctx):
    p = parse_poly(args.elem, ctx)
    if not p.is_homogeneous():
        raise ConfigError("membership is tested on homogeneous elements")
    n = p.weight()
    integral = n == 0 and p.constant_term().denominator == 1 or n > 0 and mu_lattice(ctx, n).contains(p)
    in_ker = is_in_W(p, ctx)
    ok = integral and in_ker
    data = {"value": str(p), "weight": n, "integral": integral, "in_ker_delta": in_ker, "in_W": ok}
    text = f"{p}: {'in' if ok else 'not in'} W (integral: {integral}, Delta = 0: {in_ker})"
    return Output(text, data, ["value", "integral", "in_ker_delta"], [[str(p), str(integral), str(in_ker)]], ok)


# nt

def cmd_nt_mk(args, ctx):
    vals = [m_k(k) for k in range(1, args.upto + 1)]
    rows = [[str(v.k), str(v.value), v.branch] for v in vals]
    data = [{"k": v.k, "m_k": v.value, "prime": v.prime} for v in vals]
    text = "\n".join(f"m_{v.k} = {v.value}" for v in vals)
    return Output(text, data, ["k", "m_k", "branch"], rows)


def cmd_nt_fermat(args, ctx):
    sols = fermat_solutions(args.lmax)
    data = [{"p": p, "s": s, "l": l} for p, s, l in sols]
    text = "\n".join(f"{p}^{s} = 2^{l} + 1" for p, s, l in sols)
    return Output(text, data, ["p", "s", "l"], [[str(p), str(s), str(l)] for p, s, l in sols])


def cmd_nt_cases(args, ctx):
    res = [cases_solver(k) for k in range(2, args.upto + 1)]
    data = [{"k": r.k, "solvable": r.solvable, "c": r.c, "branch": r.branch,
             "exceptional_c": r.exceptional_c, "exceptional_gcd": r.exceptional_gcd} for r in res]
    lines = []
    for r in res:
        if r.solvable:
            lines.append(f"k = {r.k}: c = {r.c} ({r.branch})")
        else:
            lines.append(f"k = {r.k}: unsolvable, k = 2^l = p^s - 1; "
                         f"using c = {r.exceptional_c} gives {r.exceptional_gcd}")
    rows = [[str(r.k), str(r.solvable), "" if r.c is None else str(r.c), r.branch] for r in res]
    return Output("\n".join(lines), data, ["k", "solvable", "c", "branch"], rows)


# verify

def cmd_verify(args, ctx):
    cfg = VerifyConfig(order=ctx.order, weight_cap=ctx.weight_cap, seed=args.seed, only=args.only,
                       k=args.k, lambdas=args.lambdas, omega=args.omega)
    report = verify_all(cfg)
    rows = [[c.check, c.status, c.witness or ""] for c in report.checks]
    return Output(report.to_text(), report.to_dict(), ["name", "status", "witness"], rows, report.passed)


def cmd_list_checks(args, ctx):
    names = check_names()
    return Output("\n".join(names), names, ["name"], [[n] for n in names])


# parser

def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    p.add_argument("--order", type=int, help=f"series truncation order (default {DEFAULT_ORDER})",
                   **kw(DEFAULT_ORDER))
    p.add_argument("--weight-cap", type=int, help=f"weight cap D (default {DEFAULT_WEIGHT_CAP})",
                   **kw(DEFAULT_WEIGHT_CAP))
    p.add_argument("--format", choices=["text", "json", "csv"], **kw("text"))
    p.add_argument("--only", help="check-name glob (verify only)", **kw(None))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(False)
    parser = argparse.ArgumentParser(prog="sucalc", parents=[_global_flags(True)],
                                     description="Exact computations with SU-linear operations in complex cobordism.")
    sub = parser.add_subparsers(dest="group", required=True)

    def group(name, help_):
        g = sub.add_parser(name, help=help_, parents=[common])
        return g.add_subparsers(dest="cmd", required=True)

    def cmd(gsub, name, fn, help_):
        c = gsub.add_parser(name, help=help_, parents=[common])
        c.set_defaults(func=fn)
        return c

    fg = group("fgl", "formal group law tables")
    c = cmd(fg, "coeffs", cmd_fgl_coeffs, "coefficients of F(u, v) or F(u, v)^k")
    c.add_argument("--power", type=int)
    c = cmd(fg, "kpower", cmd_fgl_kpower, "the k-series [k](u)")
    c.add_argument("--k", type=int, required=True)
    c = cmd(fg, "beta", cmd_fgl_beta, "beta^(k,m) coefficients")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c = cmd(fg, "series", cmd_fgl_log, "logarithm, exponential or inverse series")
    c.add_argument("which", choices=["log", "exp", "inverse"])

    og = group("op", "SU-linear operations")
    c = cmd(og, "expand", cmd_op_expand, "expand Delta_(k1,k2) in the d_i basis")
    c.add_argument("--delta", type=int, nargs=2, metavar=("K1", "K2"), required=True)
    c = cmd(og, "apply", cmd_op_apply, "apply an operation to a ring element")
    c.add_argument("--op", required=True)
    c.add_argument("--elem", required=True)
    c = cmd(og, "compose", cmd_op_compose, "compose operations, leftmost applied last")
    c.add_argument("--op", action="append", required=True)
    c = cmd(og, "series", cmd_op_series, "the series representing an operation")
    c.add_argument("--op", required=True)
    c.add_argument("--basis", choices=["u_powers", "u_ubar_powers"], default="u_powers")

    wg = group("w", "the theory W: projections, multiplications, F_W")
    c = cmd(wg, "project", cmd_w_project, "apply a projection")
    m = c.add_mutually_exclusive_group()
    m.add_argument("--stong", action="store_true")
    m.add_argument("--lambdas")
    c.add_argument("--elem", required=True)
    c = cmd(wg, "multiply", cmd_w_multiply, "the product a*b")
    c.add_argument("--omega")
    c.add_argument("a")
    c.add_argument("b")
    for name, fn, help_ in (("fgl", cmd_w_fgl, "coefficients of F_W"),
                            ("analyze", cmd_w_analyze, "s-number gcds and generation at dimension 2k")):
        c = cmd(wg, name, fn, help_)
        c.add_argument("--orientation", help="f(u), e.g. 'u + b1*u^2'")
        c.add_argument("--omega")
        c.add_argument("--lambdas")
        if name == "analyze":
            c.add_argument("--k", type=int, required=True)
    c = cmd(wg, "member", cmd_w_member, "test membership in W")
    c.add_argument("--elem", required=True)

    ng = group("nt", "number theory")
    c = cmd(ng, "mk", cmd_nt_mk, "m_k for k = 1..K")
    c.add_argument("--upto", type=int, required=True)
    c = cmd(ng, "fermat", cmd_nt_fermat, "solutions of p^s = 2^l + 1")
    c.add_argument("--lmax", type=int, required=True)
    c = cmd(ng, "cases", cmd_nt_cases, "solve for c_k, k = 2..K")
    c.add_argument("--upto", type=int, required=True)

    v = sub.add_parser("verify", help="run the verification suite", parents=[common])
    v.set_defaults(func=cmd_verify)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--k", type=int)
    v.add_argument("--lambdas", help="projection to validate, e.g. 'd0 + b2*d2'")
    v.add_argument("--omega", help="W_4 parameter of the multiplication")
    v.add_argument("--list", action="store_const", const=cmd_list_checks, dest="func")
    return parser


def _bounds(args):
    for name in ("upto", "lmax"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise ConfigError(f"--{name} must be positive")
    if getattr(args, "upto", None) is not None and args.cmd == "cases" and args.upto < 2:
        raise ConfigError("--upto must be at least 2")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        _bounds(args)
        ctx = build_context(args.order, args.weight_cap)
        out = args.func(args, ctx)
        text = out.render(args.format)
    except (ConfigError, ParseError, NotInW, PrecisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(text)
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
