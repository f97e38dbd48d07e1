import random
from fractions import Fraction

from hypothesis import given, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from sucalc.algebra import GradedPoly, monomials_of_weight
from sucalc.integral import delta_matrix, mu_lattice, w_lattice
from sucalc.lattice import hnf, left_kernel, lattice_from_generators, linear_map_matrix
from strategies import homogeneous

D = 4
b1, b2, b3 = (GradedPoly.gen(n, D) for n in range(1, 4))


def test_weight_one_gcd():
    lat = lattice_from_generators(1, [2 * b1, 3 * b1])
    assert lat.vectors() == [b1]


def test_hnf_example():
    # HNF of [[1, 0], [9, -8]] over (b1^2, b2)
    lat = lattice_from_generators(2, [b1 ** 2, 9 * b1 ** 2 - 8 * b2])
    assert lat.vectors() == [b1 ** 2, 8 * b2]
    assert not lat.contains(b2)
    assert lat.contains(9 * b1 ** 2 - 8 * b2)


def test_empty_generators():
    lat = lattice_from_generators(2, [], D)
    assert lat.rank == 0 and lat.vectors() == []
    assert lat.contains(GradedPoly.zero(D))


def test_mu_weight_two(small):
    lat = mu_lattice(small, 2)
    assert lat.s_gcd(2) == 3


def test_delta_kernel_weight_two(small):
    W = w_lattice(small, 2)
    assert W.rank == 1
    assert W.vectors()[0] in (9 * b1 ** 2 - 8 * b2, -(9 * b1 ** 2 - 8 * b2))


def _sympy_index(rows):
    """|det| of a full-rank integer row lattice, via sympy's HNF."""
    H = hermite_normal_form(Matrix(rows).T)
    return abs(Matrix(H).det()) if H.shape[0] == H.shape[1] else None


@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3), min_size=3, max_size=5))
def test_hnf_agrees_with_sympy_index(rows):
    H = hnf(rows)
    if len(H) == 3:
        ours = abs(Matrix(H).det())
        assert ours == _sympy_index(rows)
    for r in rows:
        lat = lattice_from_generators(3, [GradedPoly(dict(zip(monomials_of_weight(3, D), r)), D)], D)
        assert lat.rank == (1 if any(r) else 0)


@given(st.lists(homogeneous(3, D, 9), min_size=1, max_size=5), st.randoms(use_true_random=False))
def test_hnf_canonical_under_permutation(gens, rnd):
    a = lattice_from_generators(3, gens, D)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    b = lattice_from_generators(3, shuffled, D)
    assert a.rows == b.rows and a.denominator == b.denominator
    assert all(a.contains(g) for g in gens)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=1, max_size=4))
def test_left_kernel_annihilates(rows):
    for k in left_kernel(rows):
        assert all(sum(c * r[j] for c, r in zip(k, rows)) == 0 for j in range(2))


def test_integral_kernel_maps_to_zero(small):
    for n in range(2, 5):
        M = delta_matrix(small, n)
        K = w_lattice(small, n)
        for row in K.rows:
            img = [sum(Fraction(x, K.denominator) * M[i][j] for i, x in enumerate(row))
                   for j in range(len(M[0]))] if M and M[0] else []
            assert not any(img)


def test_rational_lattice_membership(small):
    lat = mu_lattice(small, 3)
    # alpha_13 and alpha_22 are integral classes with rational CP-coordinates
    assert lat.contains(small.alpha(1, 3)) and lat.contains(small.alpha(2, 2))
    assert not lat.contains(small.alpha(2, 2) / 2)


def test_linear_map_matrix_identity():
    M = linear_map_matrix(lambda p: p, 2, 2, D)
    assert M == [[1, 0], [0, 1]]


def test_random_combination_is_member(small):
    rng = random.Random(1)
    lat = w_lattice(small, 4)
    for _ in range(10):
        v = lat.combination([rng.randint(-9, 9) for _ in range(lat.rank)])
        assert lat.contains(v)
