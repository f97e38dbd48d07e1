import pytest

from sucalc.fgl import (ConfigError, alpha_power, beta_coeffs, build_context, k_power,
                        k_power_inductive, u_bar_power)
from sucalc.algebra import s_number
from sucalc.wtheory import associativity_defect, symmetry_defect
from math import comb
import oracles


def test_fgl_against_oracle(small):
    ref = oracles.fgl(4, 5)
    F = small.F_full()
    keys = {k for k in ref if sum(k) <= 5} | {k for k in F.coeffs if sum(k) <= 5}
    assert all(F[k] == ref.get(k, small.zero()) for k in keys)


def test_fgl_against_oracle_full_cap(ctx):
    ref = oracles.fgl(8, 9)
    F = ctx.F_full()
    assert all(F[k] == v for k, v in ref.items())


def test_alpha_known_values(ctx):
    b1, b2 = ctx.b(1), ctx.b(2)
    assert ctx.alpha(1, 1) == -b1
    assert ctx.alpha(1, 2) == b1 ** 2 - b2


def test_alpha_s_numbers(ctx):
    for i in range(1, 9):
        for j in range(1, 10 - i):
            w = i + j - 1
            assert abs(s_number(ctx.alpha(i, j), w)) == comb(i + j, i)


def test_axioms(small):
    F = small.F
    assert not symmetry_defect(F)
    assert not associativity_defect(F)
    u = small.u(small.order)
    assert F.substitute(u, u.zero_series()) == u
    assert F.substitute(u, small.inv).is_zero()


def test_k_powers(small):
    u = small.u()
    assert k_power(small, 0).is_zero()
    assert k_power(small, 1) == u
    F = small.F_full()
    assert k_power(small, 2) == F.substitute(u, u)
    for k in range(-3, 5):
        assert k_power(small, k) == k_power_inductive(small, k)
        ref = oracles.k_series(4, small.full_order, k)
        assert all(k_power(small, k)[j] == ref[j] for j in ref)


def test_k_power_leading_terms(small):
    b1 = small.b(1)
    two = k_power(small, 2)
    assert two[1] == 2 and two[2] == -b1
    assert k_power(small, -1) == small.inv_full()


def test_alpha_power(small):
    assert alpha_power(small, 0)[(0, 0)] == 1
    # F^k is complete through order D + k
    assert alpha_power(small, 1).order == 5
    assert alpha_power(small, 1).agrees_with(small.F_full())
    F = small.F_full()
    assert alpha_power(small, 3).agrees_with(F * F * F)
    # alpha^(2)_11 = 2
    assert alpha_power(small, 2)[(1, 1)] == 2


def test_beta(small):
    for k in range(1, 4):
        assert beta_coeffs(small, k, 1).is_zero()
    one = beta_coeffs(small, 1, 0)
    assert one[1] == 1 and all(one[i].is_zero() for i in range(2, one.order + 1))


def test_u_bar_powers(small):
    assert u_bar_power(small, 0).agrees_with(small.u())
    assert u_bar_power(small, 1).agrees_with(small.u() * small.inv_full())


def test_caps():
    with pytest.raises(ConfigError):
        build_context(11, 8)
    with pytest.raises(ConfigError):
        build_context(0, 8)
    with pytest.raises(ConfigError):
        build_context(3, 0)


def test_context_cached(ctx):
    assert build_context(10, 8) is ctx
