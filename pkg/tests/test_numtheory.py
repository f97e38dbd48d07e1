from math import comb, gcd
from functools import reduce

from hypothesis import given, strategies as st

from sucalc.numtheory import (cases_solver, excluded_form, fermat_solutions, is_power_of_two, m_k,
                              mk_closed_form, mk_gcd, prime_power_base)


def test_m_k_values():
    assert m_k(1).value == 2
    assert m_k(5).value == 1
    assert m_k(8).value == 3
    assert [m_k(k).value for k in range(1, 9)] == [2, 3, 2, 5, 1, 7, 2, 3]
    assert m_k(8).prime == 3 and m_k(5).prime is None


def test_closed_form_up_to_200():
    for k in range(1, 201):
        assert mk_gcd(k) == mk_closed_form(k)


@given(st.integers(1, 400))
def test_m_k_brute_force(k):
    assert m_k(k).value == reduce(gcd, (comb(k + 1, i) for i in range(1, k + 1)))


def test_fermat():
    want = [(3, 1, 1), (5, 1, 2), (3, 2, 3), (17, 1, 4), (257, 1, 8), (65537, 1, 16)]
    assert fermat_solutions(20) == want
    assert fermat_solutions(2) == [(3, 1, 1), (5, 1, 2)]
    assert [(p, s, l) for p, s, l in fermat_solutions(20) if s > 1] == [(3, 2, 3)]


@given(st.integers(1, 30), st.integers(1, 30))
def test_fermat_prefix_stable(a, b):
    lo, hi = sorted((a, b))
    small, big = fermat_solutions(lo), fermat_solutions(hi)
    assert big[:len(small)] == small


def test_cases_examples():
    r = cases_solver(3)
    assert r.solvable and r.c == 1
    assert 1 - 4 + r.c * 2 * 3 == 3
    r = cases_solver(4)
    assert not r.solvable and r.excluded
    r = cases_solver(8)
    assert r.exceptional_c == -2 and r.exceptional_gcd == -m_k(8).value * m_k(7).value


def test_excluded_exactly_on_the_form():
    excluded = [k for k in range(2, 61) if not cases_solver(k).solvable]
    assert excluded == [2, 4, 8, 16]
    for k in range(2, 61):
        form = is_power_of_two(k) and prime_power_base(k + 1) is not None
        assert excluded_form(k) == form == (k in excluded)


def test_solutions_give_m_k_m_k1():
    for k in range(3, 61):
        r = cases_solver(k)
        if r.solvable:
            assert r.gcd_with(r.c) == m_k(k).value * m_k(k - 1).value
