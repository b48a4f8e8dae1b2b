import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from polycyclic import linalg
from polycyclic.contexts import build_ctx, homomorphism_contexts
from polycyclic.errors import InvalidRoots, NonUnitRoot
from polycyclic.poly import Poly, poly_divmod, poly_eval
from polycyclic.transform import (
    char_poly_laplace,
    companion_matrix,
    gdft,
    jordan_reduction,
    ms_forward,
    ms_forward_scale,
    ms_forward_shift,
    ms_from_ints,
    ms_inverse,
    ms_star_mul,
    ms_unit,
    ms_zero,
    vandermonde,
    vandermonde_det_formula,
)
from polycyclic.rings import ring_make

FIELD_CTXS = {k: v for k, v in homomorphism_contexts().items() if not k.startswith("Z4")}


def g_z4(ctx):
    return Poly.parse(ctx.R, "1+2x^3+x^4+3x^5")


def test_gdft_golden(z4ctx):
    assert [[v.value for v in row] for row in gdft(g_z4(z4ctx), z4ctx)] == [[7, 1], [5, 0], [6, 8]]


def test_ms_golden(z4ctx):
    e = ms_forward(g_z4(z4ctx), z4ctx)
    assert e == ms_from_ints(z4ctx, [[7, 5, 6], [1, 0, 8]])
    assert str(e) == "(7+5y+6y^2)+(1+8y^2)x"


def test_trivial_inputs(z4ctx):
    assert ms_forward(Poly(z4ctx.R, []), z4ctx) == ms_zero(z4ctx)
    assert ms_forward(Poly.one(z4ctx.R), z4ctx) == ms_unit(z4ctx)
    assert [[v.value for v in r] for r in gdft(Poly.one(z4ctx.R), z4ctx)] == [[1, 1], [0, 0], [0, 0]]


def test_shift_path_under_integer_lift(z4ctx):
    # g(1 + y) expanded in Z16 sees the lifted coefficients, so its y-part is not the Z4 Hasse value
    e = ms_forward_shift(g_z4(z4ctx), z4ctx)
    assert e.table == ((7, 9, 10), (1, 0, 8))
    assert e != ms_forward(g_z4(z4ctx), z4ctx)


def test_scale_rejects_nilpotent_root(z4ctx):
    # 12 is a non-unit of Z16, so u * 12 never hits the unit group
    with pytest.raises(NonUnitRoot):
        ms_forward_scale(g_z4(z4ctx), z4ctx)


def test_scale_of_x():
    ctx = FIELD_CTXS["F3 n=2 m=3"]
    e = ms_forward_scale(Poly.x(ctx.R), ctx)
    Rp = ctx.Rprime
    assert e.table == tuple((a, a) + (0,) * (ctx.m - 2) for a in ctx.roots)
    assert Rp.is_unit(ctx.roots[0])


def test_scale_is_rescaled_transform():
    # the y^k coefficient of g(u a) at u = 1 + y is a^k g^[k](a), not g^[k](a)
    ctx = FIELD_CTXS["F3 n=2 m=3"]
    g = Poly.parse(ctx.R, "x^2")
    assert ctx.roots[1] == 2
    assert ms_forward(g, ctx).table[1] == (1, 1, 1)
    assert ms_forward_scale(g, ctx).table[1] == (1, 2, 1)


def test_vandermonde_matches_displayed_form(z4ctx):
    V = vandermonde(z4ctx)
    Rp = z4ctx.Rprime
    for j, a in enumerate(z4ctx.roots):
        for i in range(z4ctx.N):
            expect = [Rp.mul(Rp.from_int(comb(i, t)), Rp.pow(a, i - t)) if i >= t else 0 for t in range(3)]
            assert V[i][3 * j:3 * j + 3] == expect
    assert V[2][0:3] == [1, 2, 1]


def test_det_sign_discrepancy_f3():
    ctx = FIELD_CTXS["F3 n=2 m=3"]
    det = linalg.det(ctx.Rprime, vandermonde(ctx))
    assert det == 1 and vandermonde_det_formula(ctx) == 2


def test_companion():
    F2 = ring_make("F2")
    assert companion_matrix(Poly.parse(F2, "x^2-1")) == [[0, 1], [1, 0]]
    Z4 = ring_make("Z4")
    assert companion_matrix(Poly.parse(Z4, "x^3"))[-1] == [0, 0, 0]


@given(st.lists(st.integers(0, 3), max_size=6))
def test_char_poly_of_companion(tail):
    Z4 = ring_make("Z4")
    F = Poly(Z4, tail + [1])
    assert char_poly_laplace(companion_matrix(F), Z4) == F


@pytest.mark.parametrize("name", sorted(FIELD_CTXS))
def test_field_contexts(name):
    ctx = FIELD_CTXS[name]
    assert jordan_reduction(ctx).holds
    rng = random.Random(5)
    for _ in range(40):
        g = Poly(ctx.R, [rng.randrange(ctx.R.size) for _ in range(ctx.N)])
        h = Poly(ctx.R, [rng.randrange(ctx.R.size) for _ in range(ctx.N)])
        eg = ms_forward(g, ctx)
        assert ms_inverse(eg, descend=True) == g
        assert eg == ms_forward_shift(g, ctx)
        gh = poly_divmod(g * h, ctx.F)[1]
        assert ms_forward(gh, ctx) == ms_star_mul(eg, ms_forward(h, ctx))
        assert ms_star_mul(eg, ms_unit(ctx)) == eg
        assert ms_star_mul(eg, ms_zero(ctx)).is_zero()


def test_jordan_fails_under_integer_lift(z4ctx):
    assert not jordan_reduction(z4ctx).holds


def test_m1_is_evaluation():
    ctx = build_ctx("F4", "x^3-1", 1)
    g = Poly.parse(ctx.R, "1+x+x^2")
    assert [v for v in gdft(g, ctx)[0]] == [poly_eval(g, a, ctx.lift) for a in ctx.root_elems()]


def test_root_validation():
    with pytest.raises(InvalidRoots):
        build_ctx("F3", "x^2-1", 2, roots=["1", "1"])
