"""Integer lattices inside a fixed-weight component of Q[b].

Vectors are coordinates over ``monomials_of_weight(weight, cap)``.  A lattice
is stored as a canonical row Hermite normal form of integer rows together with
a common denominator, so lattices with rational coordinates (the integral
cobordism ring is not integral in the CP^n basis) are represented exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from .algebra import GradedPoly, Monomial, monomials_of_weight, s_number


def _reduce_column(A: list[list[int]], r: int, col: int) -> bool:
    """Euclid on rows r.. in column col; leaves the gcd in A[r][col] (>0).

    Returns False if the column is zero below row r.
    """
    n = len(A)
    while True:
        nz = [i for i in range(r, n) if A[i][col]]
        if not nz:
            return False
        piv = min(nz, key=lambda i: abs(A[i][col]))
        A[r], A[piv] = A[piv], A[r]
        if A[r][col] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][col]
        done = True
        for i in range(r + 1, n):
            if A[i][col]:
                q = A[i][col] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                if A[i][col]:
                    done = False
        if done:
            return True


def _echelon(A: list[list[int]], ncols: int) -> int:
    """In-place HNF over the first ncols columns; returns the rank."""
    r = 0
    for col in range(ncols):
        if r >= len(A):
            break
        if not _reduce_column(A, r, col):
            continue
        p = A[r][col]
        for i in range(r):
            q = A[i][col] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


def hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form with zero rows removed.

    Pivots are positive and entries above each pivot lie in [0, pivot).

    >>> hnf([[1, 0], [9, -8]])
    [[1, 0], [0, 8]]
    """
    A = [list(map(int, r)) for r in rows if any(r)]
    if not A:
        return []
    rank = _echelon(A, len(A[0]))
    return A[:rank]


def left_kernel(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """HNF basis of {c in Z^k : c . A = 0} for an integer k x m matrix A."""
    k = len(rows)
    if k == 0:
        return []
    m = len(rows[0])
    A = [list(map(int, r)) + [int(i == j) for j in range(k)] for i, r in enumerate(rows)]
    rank = _echelon(A, m)
    return hnf([row[m:] for row in A[rank:]])


@dataclass(frozen=True)
class LatticeBasis:
    weight: int
    cap: int
    monomials: tuple[Monomial, ...]
    rows: tuple[tuple[int, ...], ...]
    denominator: int = 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def vectors(self) -> list[GradedPoly]:
        return [_poly_from_coords(r, self.monomials, self.cap, self.denominator) for r in self.rows]

    def combination(self, coeffs: Sequence[int]) -> GradedPoly:
        """The lattice vector sum(c_i * row_i)."""
        if len(coeffs) != self.rank:
            raise ValueError("need one coefficient per basis row")
        acc = [0] * len(self.monomials)
        for c, r in zip(coeffs, self.rows):
            if c:
                acc = [a + c * x for a, x in zip(acc, r)]
        return _poly_from_coords(acc, self.monomials, self.cap, self.denominator)

    def coords(self, p: GradedPoly) -> list[Fraction]:
        self._check(p)
        return [p.coefficient(m) for m in self.monomials]

    def _check(self, p: GradedPoly) -> None:
        if p.cap != self.cap:
            raise ValueError(f"weight cap {p.cap} does not match lattice cap {self.cap}")
        if not p.is_homogeneous(self.weight):
            raise ValueError(f"element is not homogeneous of weight {self.weight}")

    def contains(self, p: GradedPoly) -> bool:
        v = [c * self.denominator for c in self.coords(p)]
        if any(c.denominator != 1 for c in v):
            return False
        v = [int(c) for c in v]
        for row in self.rows:
            col = next(i for i, x in enumerate(row) if x)
            if v[col] % row[col]:
                return False
            q = v[col] // row[col]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def __contains__(self, p: GradedPoly) -> bool:
        return self.contains(p)

    def s_values(self, k: int | None = None) -> list[Fraction]:
        k = self.weight if k is None else k
        return [s_number(v, k) for v in self.vectors()]

    def s_gcd(self, k: int | None = None) -> Fraction:
        """gcd of |s_k| over the lattice (s_k is linear, so over a basis)."""
        return rational_gcd(self.s_values(k))

    def integral_kernel(self, matrix: Sequence[Sequence[Fraction]]) -> LatticeBasis:
        """Sublattice of vectors whose image under ``matrix`` vanishes.

        ``matrix`` has one row per monomial of this lattice's basis (the image
        of that monomial in target coordinates).
        """
        if len(matrix) != len(self.monomials):
            raise ValueError("matrix must have one row per basis monomial")
        images = []
        for r in self.rows:
            ncols = len(matrix[0]) if matrix else 0
            img = [sum((Fraction(x) * matrix[i][j] for i, x in enumerate(r) if x), Fraction(0))
                   for j in range(ncols)]
            images.append(img)
        den = 1
        for img in images:
            for c in img:
                den = den * c.denominator // gcd(den, c.denominator)
        int_images = [[int(c * den) for c in img] for img in images]
        if not int_images or not int_images[0]:
            kern = hnf([[int(i == j) for j in range(self.rank)] for i in range(self.rank)])
        else:
            kern = left_kernel(int_images)
        new_rows = []
        for c in kern:
            acc = [0] * len(self.monomials)
            for ci, r in zip(c, self.rows):
                if ci:
                    acc = [a + ci * x for a, x in zip(acc, r)]
            new_rows.append(acc)
        return _normalised(self.weight, self.cap, self.monomials, new_rows, self.denominator)

    def __str__(self):
        vecs = ", ".join(str(v) for v in self.vectors())
        return f"<{vecs}>"


def rational_gcd(values: Sequence[Fraction]) -> Fraction:
    num = 0
    den = 1
    for v in values:
        v = Fraction(v)
        num = gcd(num, abs(v.numerator))
        den = den * v.denominator // gcd(den, v.denominator)
    return Fraction(num, den)


def _poly_from_coords(coords, monomials, cap, denominator) -> GradedPoly:
    return GradedPoly({m: Fraction(c, denominator) for m, c in zip(monomials, coords) if c}, cap)


def _normalised(weight, cap, monomials, int_rows, denominator) -> LatticeBasis:
    rows = hnf(int_rows)
    g = denominator
    for r in rows:
        for x in r:
            g = gcd(g, x)
    if g > 1:
        rows = [[x // g for x in r] for r in rows]
        denominator //= g
    return LatticeBasis(weight, cap, tuple(monomials), tuple(tuple(r) for r in rows), denominator)


def lattice_from_generators(weight: int, gens: Sequence[GradedPoly], cap: int | None = None,
                            allow_rational: bool = False) -> LatticeBasis:
    """HNF basis of the Z-span of ``gens`` (homogeneous of ``weight``).

    Non-integral generators are rejected unless ``allow_rational`` is set,
    in which case a common denominator is carried along.
    """
    if cap is None:
        if not gens:
            raise ValueError("cap is required when there are no generators")
        cap = gens[0].cap
    monomials = monomials_of_weight(weight, cap)
    den = 1
    for g in gens:
        if g.cap != cap:
            raise ValueError("generators have different weight caps")
        if not g.is_homogeneous(weight):
            raise ValueError(f"generator {g} is not homogeneous of weight {weight}")
        if not allow_rational and not g.is_integral():
            raise ValueError(f"non-integral generator {g}")
        d = g.content_denominator()
        den = den * d // gcd(den, d)
    rows = [[int(g.coefficient(m) * den) for m in monomials] for g in gens]
    return _normalised(weight, cap, monomials, rows, den)


def linear_map_matrix(fn: Callable[[GradedPoly], GradedPoly], weight: int, target_weight: int,
                      cap: int) -> list[list[Fraction]]:
    """Matrix (rows = source monomials) of a linear map between weight components."""
    src = monomials_of_weight(weight, cap)
    tgt = monomials_of_weight(target_weight, cap)
    out = []
    for m in src:
        img = fn(GradedPoly.monomial(m, 1, cap))
        if not img.is_homogeneous(target_weight):
            raise ValueError("map does not land in the target weight")
        out.append([img.coefficient(t) for t in tgt])
    return out
