from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sucalc.algebra import GradedPoly
from sucalc.series import (PowerSeries, SeriesError, compositional_inverse, embed,
                           format_series, series1, series2, series_arith, series_to_csv, substitute)
import oracles

D = 4
Z = GradedPoly.zero(D)
ONE = GradedPoly.one(D)
b1 = GradedPoly.gen(1, D)


def u(order=5):
    return PowerSeries.variable(0, order, Z, 1)


def uv(order=5):
    return PowerSeries.variable(0, order, Z, 2), PowerSeries.variable(1, order, Z, 2)


def test_products():
    assert series_arith(u(), u(), "mul") == series1({2: ONE}, 5, Z)
    s = series1({1: ONE, 2: b1}, 5, Z)
    assert s * u() == series1({2: ONE, 3: b1}, 5, Z)


def test_additive_inverse(small):
    assert (small.F + (-small.F)).is_zero()
    assert series_arith(small.F, small.F, "sub").is_zero()


def test_order_mismatch():
    with pytest.raises(SeriesError):
        u(5) + u(4)


def test_truncation_drops_high_terms():
    assert (u(3) ** 4).is_zero()
    assert (u(5) ** 2).truncate(1).is_zero()


def test_substitute_binomial():
    x, y = uv()
    out = substitute(u() ** 2, x + y)
    assert out == x * x + 2 * (x * y) + y * y


def test_substitute_identity(small):
    assert substitute(u(small.order), small.F) == small.F
    g = series1({1: ONE, 2: -b1}, 5, Z)
    assert substitute(g, u()) == g


def test_substitute_needs_zero_constant():
    with pytest.raises(SeriesError):
        substitute(u(), u() + PowerSeries.constant(ONE, 5, Z, 1))


def test_inverse_identity():
    assert compositional_inverse(u()) == u()


@given(st.fractions(min_value=-4, max_value=4, max_denominator=5))
def test_reversion_against_catalan(c):
    s = series1({1: ONE, 2: GradedPoly.const(c, D)}, 6, Z)
    inv = compositional_inverse(s)
    want = oracles.reversion(Fraction(c), 6)
    assert [inv[k].constant_term() for k in range(1, 7)] == want
    assert substitute(s, inv) == u(6)


def test_inverse_needs_unit_leading():
    with pytest.raises(SeriesError):
        compositional_inverse(series1({1: 2 * ONE}, 4, Z))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_inverse_both_sides(cs):
    coeffs = {1: ONE, 2: cs[0] * b1, 3: cs[1] * b1 ** 2, 4: cs[2] * GradedPoly.gen(3, D)}
    s = series1(coeffs, 5, Z)
    inv = s.compositional_inverse()
    assert substitute(s, inv) == u() and substitute(inv, s) == u()


def test_embed_and_format():
    x, y = uv()
    assert embed(u(), 2, 1) == y
    assert format_series(series1({1: ONE, 2: -b1}, 3, Z)) == "u + (-b1)*u^2"
    assert format_series(x * y) == "u*v"


def test_csv():
    s = series2({(1, 0): ONE, (1, 1): -b1}, 3, Z)
    assert series_to_csv(s) == "i,j,coefficient\n1,0,1\n1,1,-b1\n"


def test_graded_series_pow_matches_repeated_product(small):
    F = small.F
    assert F ** 3 == F * F * F
