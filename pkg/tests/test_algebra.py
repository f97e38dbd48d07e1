from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sucalc.algebra import (CapMismatch, GradedPoly, monomials_of_weight, poly_arith,
                            reduce_mod_decomposables, s_number)
from strategies import homogeneous, polys

D = 4
b1, b2, b3, b4 = (GradedPoly.gen(n, D) for n in range(1, 5))


def test_monomial_product():
    p = poly_arith(b1, b1, "mul")
    assert p == b1 ** 2
    assert p.weight() == 2


def test_cancellation():
    assert (b1 ** 2 - b2) + b2 == b1 ** 2


def test_linear_combination():
    assert poly_arith(poly_arith(b1 ** 2, 3, "scale"), 8 * b2, "sub") == 3 * b1 ** 2 - 8 * b2
    assert str(3 * b1 ** 2 - 8 * b2) == "3*b1^2 - 8*b2"


def test_weight_cap_truncates():
    assert (b2 * b3).is_zero()
    assert (b1 ** 5).is_zero()
    assert b4 * b1 == GradedPoly.zero(D)


def test_cap_mismatch():
    with pytest.raises(CapMismatch):
        GradedPoly({(1, 0): 1}, 4)
    with pytest.raises(ValueError):
        b1 + GradedPoly.gen(1, 3)


def test_s_numbers():
    # s_2 of CP^2: total Chern class (1+x)^3, so s_2 = 3 x^2 = 3
    assert s_number(b2, 2) == 3
    assert s_number(b1 ** 2, 2) == 0
    assert s_number(9 * b1 ** 2 - 8 * b2, 2) == -24
    assert all(s_number(GradedPoly.gen(k, D), k) == k + 1 for k in range(1, D + 1))


def test_s_number_needs_matching_weight():
    with pytest.raises(ValueError):
        s_number(b1 + b2, 2)


def test_reduce_examples():
    assert reduce_mod_decomposables(b1 ** 2 - b2) == -b2
    assert reduce_mod_decomposables(b1) == b1
    assert reduce_mod_decomposables(GradedPoly.const(5, D)) == 5


def test_monomials_of_weight_counts_partitions():
    assert [len(monomials_of_weight(n, 8)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_rational_coefficients_stay_exact():
    p = b1 / 3 + Fraction(1, 6) * b1
    assert p == b1 / 2
    assert p.content_denominator() == 2 and not p.is_integral()


@given(homogeneous(3, D), homogeneous(3, D), st.integers(-9, 9))
def test_s_number_linear(p, q, c):
    assert s_number(p + c * q, 3) == s_number(p, 3) + c * s_number(q, 3)


@given(homogeneous(1, D), homogeneous(2, D), homogeneous(3, D))
def test_s_number_kills_products(a, bb, c):
    assert s_number(a * a, 2) == 0
    assert s_number(a * bb, 3) == 0
    assert s_number(a * c, 4) == 0 and s_number(bb * bb, 4) == 0


@given(polys(D))
def test_reduce_idempotent(p):
    r = reduce_mod_decomposables(p)
    assert reduce_mod_decomposables(r) == r


@given(polys(D), polys(D))
def test_reduce_is_ring_quotient(p, q):
    # the quotient by J^2 is a ring map to Q + J/J^2
    lhs = reduce_mod_decomposables(p * q)
    rhs = reduce_mod_decomposables(reduce_mod_decomposables(p) * reduce_mod_decomposables(q))
    assert lhs == rhs


@given(homogeneous(1, D), homogeneous(2, D))
def test_positive_weight_products_reduce_to_zero(p, q):
    assert reduce_mod_decomposables(p * q).is_zero()


@given(polys(D), polys(D), polys(D))
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == GradedPoly.zero(D)
