import pytest
from hypothesis import given

from sucalc.fgl import build_context
from sucalc.ops import big_delta, ops_equal
from sucalc.parse import ParseError, parse_op, parse_poly, parse_series
from sucalc.series import format_series
from strategies import polys, rational_homogeneous

SMALL = build_context(6, 4)


def test_w4_generator(ctx):
    p = parse_poly("9*b1^2 - 8*b2", ctx)
    assert p == 9 * ctx.b(1) ** 2 - 8 * ctx.b(2)
    assert parse_poly(" 9 * b1 ^2-8*b2 ", ctx) == p


def test_series_literal(ctx):
    s = parse_series("u + b1*u^2", ctx)
    assert s[1] == 1 and s[2] == ctx.b(1) and s.grade == 2


def test_two_variable_series(small):
    s = parse_series(format_series(small.F), small, small.order)
    assert s == small.F


def test_op_literal(ctx):
    op = parse_op("d0 + (b1^2-b2)*d2", ctx)
    assert op[0] == 1 and op[2] == ctx.alpha(1, 2) and op.defect == 0


def test_op_round_trip(small):
    D = big_delta(small)
    assert ops_equal(parse_op(str(D), small), D)


@given(polys(4))
def test_poly_round_trip(p):
    assert parse_poly(str(p), SMALL) == p


@given(rational_homogeneous(3, 4))
def test_rational_round_trip(p):
    assert parse_poly(str(p), SMALL) == p


@pytest.mark.parametrize("text, msg", [
    ("b1 +", "unexpected end of input"),
    ("b9", "over the cap"),
    ("b0", "unknown generator"),
    ("x", "unknown symbol"),
    ("b2^5", "over the cap"),
    ("(b1", "expected ')'"),
    ("b1/b1", "division is only by rational constants"),
    ("b1 $ b2", "unexpected character"),
])
def test_poly_errors(ctx, text, msg):
    with pytest.raises(ParseError, match=msg.replace("(", r"\(").replace(")", r"\)")):
        parse_poly(text, ctx)


def test_error_position(ctx):
    with pytest.raises(ParseError) as e:
        parse_poly("b1 + b9", ctx)
    assert e.value.pos == 5


def test_op_errors(ctx):
    with pytest.raises(ParseError, match="inconsistent degrees"):
        parse_op("d0 + d1", ctx)
    with pytest.raises(ParseError, match="at least one"):
        parse_op("b1", ctx)
