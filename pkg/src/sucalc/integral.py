"""Integral structure: the MU lattice and the ker-Delta (W) lattice per weight.

The integral cobordism ring is generated by the formal group law
coefficients alpha_ij, so its weight-n component is the Z-span of all
products of alpha's of total weight n.  In the CP^n basis these have
rational coordinates, hence the lattices carry a denominator.
"""
from __future__ import annotations

import random
from math import gcd

from .algebra import GradedPoly, s_number
from .fgl import FglContext
from .lattice import LatticeBasis, lattice_from_generators, linear_map_matrix
from .ops import apply, big_delta


def alpha_generators(ctx: FglContext, n: int) -> list[GradedPoly]:
    """The alpha_ij of weight n (i + j = n + 1), one of each symmetric pair."""
    return [ctx.alpha(i, n + 1 - i) for i in range(1, (n + 1) // 2 + 1)]


def mu_lattice(ctx: FglContext, n: int) -> LatticeBasis:
    """Weight-n component of the ring generated by the alpha_ij."""
    D = ctx.weight_cap
    if n > D:
        raise ValueError(f"weight {n} exceeds the cap {D}")

    def build():
        if n == 0:
            return lattice_from_generators(0, [ctx.one()], D)
        gens = list(alpha_generators(ctx, n))
        for w in range(1, n):
            for a in alpha_generators(ctx, w):
                for v in mu_lattice(ctx, n - w).vectors():
                    gens.append(a * v)
        return lattice_from_generators(n, gens, D, allow_rational=True)
    return ctx._memo(("mulattice", n), build)


def delta_matrix(ctx: FglContext, n: int):
    Delta = big_delta(ctx)
    return linear_map_matrix(lambda p: apply(Delta, p, ctx), n, n - 2, ctx.weight_cap)


def w_lattice(ctx: FglContext, n: int) -> LatticeBasis:
    """Weight-n component of W: the MU lattice intersected with ker Delta."""
    return ctx._memo(("wlattice", n),
                     lambda: mu_lattice(ctx, n).integral_kernel(delta_matrix(ctx, n)))


def random_element(lat: LatticeBasis, rng: random.Random, bound: int = 5) -> GradedPoly:
    if lat.rank == 0:
        return GradedPoly.zero(lat.cap)
    return lat.combination([rng.randint(-bound, bound) for _ in range(lat.rank)])


def element_with_s(lat: LatticeBasis, k: int, target: int) -> GradedPoly | None:
    """A lattice vector x with s_k(x) = target, or None if target is not a multiple of the gcd."""
    vals = lat.s_values(k)
    coeffs = _bezout([int(v) if v.denominator == 1 else None for v in vals])
    if coeffs is None:
        return None
    g, cs = coeffs
    if g == 0 or target % g:
        return None
    m = target // g
    return lat.combination([c * m for c in cs])


def _bezout(vals):
    """(g, coefficients) with sum c_i v_i = g = gcd(v_i) >= 0."""
    if any(v is None for v in vals):
        return None
    g = 0
    cs = [0] * len(vals)
    for idx, v in enumerate(vals):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            cs = [0] * len(vals)
            cs[idx] = 1 if v > 0 else -1
            continue
        # extended Euclid on (g, v)
        x0, x1, r0, r1 = 1, 0, g, v
        y0, y1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        if r0 < 0:
            r0, x0, y0 = -r0, -x0, -y0
        cs = [c * x0 for c in cs]
        cs[idx] += y0
        g = r0
    assert g == abs(gcd(*vals)) if vals else True
    return g, cs


def s_gcd(lat: LatticeBasis, k: int | None = None) -> int:
    g = lat.s_gcd(k)
    if g.denominator != 1:
        raise ValueError("s-numbers on an integral lattice must be integers")
    return int(g)


def s_of(p: GradedPoly, k: int) -> int:
    v = s_number(p, k)
    if v.denominator != 1:
        raise ValueError(f"s_{k}({p}) is not an integer")
    return int(v)
