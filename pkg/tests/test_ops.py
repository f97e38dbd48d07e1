import random

import pytest
from hypothesis import given, strategies as st

from sucalc.algebra import GradedPoly, reduce_mod_decomposables
from sucalc.fgl import alpha_power, u_bar_power
from sucalc.integral import mu_lattice, random_element
from sucalc.ops import (PrecisionError, SuOp, apply, apply_partial, apply_to_class, big_delta, compose,
                        dbar_op, delta_op, identity_op, op_difference, op_from_series, op_to_series,
                        ops_equal, partial_on_generator, partial_op)
from sucalc.series import series1
from sucalc.wtheory import stong_projection
from strategies import homogeneous
import oracles


def test_partial_on_generators_against_oracle(ctx):
    for n in range(1, 9):
        for k in range(0, n + 1):
            want = ctx.b(n) if k == 0 else oracles.partial_generator(8, k, n)
            assert partial_on_generator(ctx, k, n) == want, (k, n)


def test_partial_known_values(ctx):
    b1, b2 = ctx.b(1), ctx.b(2)
    assert apply(partial_op(ctx, 1), b1, ctx) == 2
    assert all(apply(partial_op(ctx, i), b1, ctx).is_zero() for i in range(2, 9))
    assert apply(partial_op(ctx, 2), b2, ctx) == 9
    assert apply(partial_op(ctx, 1), b2, ctx).is_zero()
    # product rule with alpha^(2)_11 = 2 and d b1 = 2
    assert apply(partial_op(ctx, 2), b1 ** 2, ctx) == 8


def test_delta_on_V(ctx):
    V = ctx.alpha(1, 2)
    assert apply(big_delta(ctx), V, ctx) == 1
    assert apply(delta_op(ctx, 1, 1), V, ctx) == 1


def test_delta_on_b2(ctx):
    # d2 b2 = 9 and the rest of Delta vanishes on b2, with Delta = -d2 + ...
    assert apply(big_delta(ctx), ctx.b(2), ctx) == -9


def test_op_without_unit_term_kills_one(ctx):
    op = SuOp({1: ctx.one(), 3: ctx.b(2)}, -1, 8, None)
    assert apply(op, ctx.one(), ctx).is_zero()


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_product_rule(k, wx, data):
    from sucalc.fgl import build_context
    c = build_context(6, 4)
    wy = data.draw(st.integers(1, 4 - wx)) if wx < 4 else 0
    x = data.draw(homogeneous(wx, 4, 3))
    y = data.draw(homogeneous(wy, 4, 3)) if wy else c.one()
    want = c.zero()
    for (i, j), a in alpha_power(c, k).items():
        want = want + a * apply_partial(c, i, x) * apply_partial(c, j, y)
    assert apply_partial(c, k, x * y) == want


def test_d_k_d_vanishes(ctx):
    d = partial_op(ctx, 1)
    for k in range(1, 9):
        assert compose(partial_op(ctx, k), d, ctx).is_zero()


def test_identity_composition(ctx):
    g = delta_op(ctx, 1, 1)
    assert ops_equal(compose(identity_op(ctx), g, ctx), g)
    assert ops_equal(compose(g, identity_op(ctx), ctx), g)


def test_stong_idempotent(ctx):
    pi0 = stong_projection(ctx).to_op(ctx)
    assert not op_difference(compose(pi0, pi0, ctx), pi0)


def test_composition_matches_application(small):
    rng = random.Random(7)
    ops = [partial_op(small, 1), partial_op(small, 2), big_delta(small), dbar_op(small, 2),
           stong_projection(small).to_op(small)]
    for f in ops:
        for g in ops:
            fg = compose(f, g, small)
            for n in range(1, 5):
                if not 0 <= n + fg.defect <= fg.known_weight or n + g.defect > g.known_weight:
                    continue
                p = random_element(mu_lattice(small, n), rng)
                assert apply(fg, p, small) == apply(f, apply(g, p, small), small)


def test_composition_associative(small):
    f, g, h = partial_op(small, 2), big_delta(small), dbar_op(small, 1)
    lhs = compose(compose(f, g, small), h, small)
    rhs = compose(f, compose(g, h, small), small)
    assert ops_equal(lhs, rhs)


def test_op_to_series_is_u_ubar_power(ctx):
    for i in range(0, 5):
        s = op_to_series(partial_op(ctx, i), ctx)
        assert s.agrees_with(u_bar_power(ctx, i))


def test_op_from_series_round_trip(ctx):
    for i in range(1, 4):
        s = series1({i + 1: ctx.one()}, ctx.full_order, ctx.zero())
        op = op_from_series(s, ctx)
        assert op_to_series(op, ctx).agrees_with(s)
        assert ops_equal(op, dbar_op(ctx, i))


def test_delta_op_basis_cases(ctx):
    assert ops_equal(delta_op(ctx, 3, 0), partial_op(ctx, 3))
    dbar1 = dbar_op(ctx, 1)
    # dbar_1 = -d1 + ..., since u^2 = -u ubar + ...
    assert dbar1[1] == -1


def test_apply_to_class(ctx):
    u = ctx.u()
    assert apply_to_class(identity_op(ctx), u, ctx).agrees_with(u)
    du = apply_to_class(partial_op(ctx, 1), u, ctx)
    # u ubar with ubar = -u - b1 u^2 - ...
    assert du[1].is_zero() and du[2] == -1 and du[3] == -ctx.b(1)
    assert du.agrees_with(u * ctx.inv_full())


def test_projection_of_u_mod_decomposables(ctx):
    w = apply_to_class(stong_projection(ctx).to_op(ctx), ctx.u(), ctx)
    assert w[1] == 1 and w[2].is_zero()
    for i in range(2, 8):
        want = reduce_mod_decomposables((-1) ** i * ctx.alpha(1, i))
        assert reduce_mod_decomposables(w[i + 1]) == want
    # coefficient of u^3 is -b2 mod decomposables
    assert reduce_mod_decomposables(w[3]) == -ctx.b(2)


def test_precision_is_tracked(small):
    assert big_delta(small).prec == 4
    assert partial_op(small, 2).prec is None
    # results of weight 3 need coefficients above the known weight 2
    with pytest.raises(PrecisionError):
        apply(SuOp({2: small.b(1)}, -1, 4, 2), small.b(4), small)


def test_validation():
    assert SuOp({1: GradedPoly.gen(1, 4)}, 0, 4, None)[1] == GradedPoly.gen(1, 4)
    with pytest.raises(ValueError):
        SuOp({1: GradedPoly.gen(2, 4)}, 0, 4, None)
    # coefficients beyond the known precision are dropped
    assert SuOp({1: GradedPoly.gen(2, 4), 3: GradedPoly.gen(4, 4)}, 1, 4, 3).support() == [1]
