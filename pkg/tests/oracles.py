"""Independent reference computations in sympy.

Everything here is rebuilt from the logarithm sum b_n t^{n+1}/(n+1) using
sympy's sparse polynomial rings, sharing no code with the package.  The
formal variables are the last generators of each ring, and truncation
filters terms by their degree in those variables.
"""
from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.rings import ring

from sucalc.algebra import GradedPoly


@lru_cache(maxsize=None)
def rings(D):
    names = [f"b{i}" for i in range(1, D + 1)]
    R1 = ring(names + ["t"], QQ)
    R2 = ring(names + ["x", "y"], QQ)
    return R1, R2


def trunc(p, nvars, n):
    """Drop terms of total degree > n in the last ``nvars`` variables."""
    R = p.ring
    return R({m: c for m, c in p.items() if sum(m[-nvars:]) <= n})


def to_graded(p, D) -> GradedPoly:
    """Coefficient polynomial (formal variables already stripped) as a GradedPoly."""
    terms = {}
    for m, c in p.items():
        terms[tuple(m[:D])] = Fraction(int(c.numerator), int(c.denominator))
    return GradedPoly(terms, D)


def coeff(p, nvars, idx):
    """Coefficient of the formal monomial idx, as a polynomial in the b's."""
    R = p.ring
    return R({m[:-nvars] + (0,) * nvars: c for m, c in p.items() if tuple(m[-nvars:]) == tuple(idx)})


def _compose1(outer, inner, N):
    """outer(inner) for one-variable series in t, truncated at N."""
    R = outer.ring
    acc = R.zero
    power = R.one
    by_deg = {}
    for m, c in outer.items():
        by_deg.setdefault(m[-1], R.zero)
        by_deg[m[-1]] += R({m[:-1] + (0,): c})
    for k in range(0, N + 1):
        if k:
            power = trunc(power * inner, 1, N)
        if k in by_deg:
            acc += by_deg[k] * power
    return trunc(acc, 1, N)


@lru_cache(maxsize=None)
def log_series(D, N):
    (R, *g), _ = rings(D)
    b, t = g[:D], g[D]
    return t + sum((b[n - 1] * t ** (n + 1) * QQ(1, n + 1) for n in range(1, min(D, N - 1) + 1)), R.zero)


@lru_cache(maxsize=None)
def exp_series(D, N):
    """Compositional inverse of the logarithm by undetermined coefficients."""
    (R, *g), _ = rings(D)
    t = g[D]
    log = log_series(D, N)
    e = t
    for k in range(2, N + 1):
        c = coeff(_compose1(log, e, k), 1, (k,))
        e = e - c * t ** k
    return e


@lru_cache(maxsize=None)
def fgl(D, N):
    """F(x, y) = exp(log x + log y) to total degree N, as {(i, j): GradedPoly}."""
    _, (R2, *_) = rings(D)

    def lift(p, var):
        return R2({m[:D] + ((m[D], 0) if var == 0 else (0, m[D])): c for m, c in p.items()})

    log = log_series(D, N)
    inner = lift(log, 0) + lift(log, 1)
    ex = exp_series(D, N)
    acc = R2.zero
    power = R2.one
    by_deg = {}
    for m, c in ex.items():
        by_deg.setdefault(m[D], R2.zero)
        by_deg[m[D]] += R2({m[:D] + (0, 0): c})
    for k in range(1, N + 1):
        power = trunc(power * inner, 2, N)
        if k in by_deg:
            acc += by_deg[k] * power
    acc = trunc(acc, 2, N)
    out = {}
    for m in {tuple(m[D:]) for m in acc.keys()}:
        out[m] = to_graded(coeff(acc, 2, m), D)
    return out


@lru_cache(maxsize=None)
def k_series(D, N, k):
    """[k](t) = exp(k log t), as {j: GradedPoly}."""
    log = log_series(D, N)
    val = _compose1(exp_series(D, N), log * k, N)
    return {j: to_graded(coeff(val, 1, (j,)), D) for j in range(1, N + 1)}


def partial_generator(D, k, n) -> GradedPoly:
    """d_k b_n: expand ([n+1](t))^k = sum c_j t^j, return sum_{j<=n} c_j b_{n-j}."""
    (R, *g), _ = rings(D)
    b = [R.one] + g[:D]
    ks = log_series(D, n + 1)
    ser = _compose1(exp_series(D, n + 1), ks * (n + 1), n + 1)
    P = R.one
    for _ in range(k):
        P = trunc(P * ser, 1, n)
    acc = R.zero
    for j in range(k, n + 1):
        acc += coeff(P, 1, (j,)) * b[n - j]
    return to_graded(acc, D)


def reversion(c: Fraction, n: int) -> list[Fraction]:
    """Coefficients 1..n of the inverse of t + c t^2 (Catalan numbers times powers of -c)."""
    from math import comb
    return [Fraction((-1) ** (k - 1) * comb(2 * (k - 1), k - 1), k) * c ** (k - 1) for k in range(1, n + 1)]
