from hypothesis import strategies as st

from sucalc.algebra import GradedPoly, monomials_of_weight


def homogeneous(weight, cap, bound=6):
    monos = monomials_of_weight(weight, cap)
    return st.lists(st.integers(-bound, bound), min_size=len(monos), max_size=len(monos)).map(
        lambda cs: GradedPoly(dict(zip(monos, cs)), cap))


def rational_homogeneous(weight, cap):
    monos = monomials_of_weight(weight, cap)
    frac = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(frac, min_size=len(monos), max_size=len(monos)).map(
        lambda cs: GradedPoly(dict(zip(monos, cs)), cap))


def polys(cap, max_weight=None, bound=4):
    top = cap if max_weight is None else max_weight

    def build(parts):
        acc = GradedPoly.zero(cap)
        for p in parts:
            acc = acc + p
        return acc
    return st.tuples(*(homogeneous(w, cap, bound) for w in range(top + 1))).map(build)
