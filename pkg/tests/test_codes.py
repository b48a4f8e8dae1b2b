import numpy as np
import pytest
from hypothesis import given, strategies as st

from polycyclic.codes import (
    annihilator_bruteforce,
    code_enumerate,
    code_from_generator,
    dual_ms,
    dual_zero,
    inner_product_zero,
    is_ideal,
    min_distance,
    nondegeneracy_check,
    orthogonal_bruteforce,
    parse_code_description,
    whole_code,
    zero_code,
)
from polycyclic.contexts import build_ctx
from polycyclic.errors import NonUnitConstantTerm, ZeroCode
from polycyclic.poly import Poly, QuotientCtx, poly_divmod
from polycyclic.rings import ring_make

F2, Z4 = ring_make("F2"), ring_make("Z4")


def amb(R, F):
    return QuotientCtx(R, Poly.parse(R, F))


def test_generator_edges():
    A = amb(F2, "x^4+x^2")
    assert code_from_generator(A, Poly.one(F2)).cardinality == 16
    assert code_from_generator(A, A.modulus).is_zero()
    assert code_from_generator(A, Poly.parse(F2, "x^2")).cardinality == 4


def test_enumerate_over_z4():
    C = code_from_generator(amb(Z4, "x^2-1"), Poly.parse(Z4, "2"))
    assert sorted(str(w) for w in code_enumerate(C)) == sorted(["0", "2", "2x", "2+2x"])
    assert [str(w) for w in code_enumerate(zero_code(amb(Z4, "x^2-1")))] == ["0"]


def test_inner_product():
    A = amb(Z4, "x^3+2x+3")
    assert inner_product_zero(Poly.one(Z4), Poly.one(Z4), A).value == 1
    # x * x^2 = x^3 = -2x - 3, constant term 1
    assert inner_product_zero(Poly.x(Z4), Poly.parse(Z4, "x^2"), A).value == 1
    assert inner_product_zero(Poly.parse(Z4, "x+x^2"), Poly.one(Z4), A).value == 0


def test_dual_edges():
    A = amb(F2, "x^3-1")
    assert dual_zero(whole_code(A)).is_zero()
    C = code_from_generator(A, Poly.parse(F2, "x+1"))
    D = dual_zero(C)
    assert D.generator == poly_divmod(A.modulus, C.generator)[0]
    assert C.cardinality * D.cardinality == 8


def test_dual_needs_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        dual_zero(code_from_generator(amb(F2, "x^2+x"), Poly.x(F2)))


def test_distance():
    A = amb(F2, "x^7-1")
    assert min_distance(whole_code(A)) == 1
    assert min_distance(code_from_generator(A, Poly.parse(F2, "x^3+x+1"))) == 3
    assert min_distance(code_from_generator(A, Poly.parse(F2, "1+x+x^2+x^3+x^4+x^5+x^6"))) == 7
    with pytest.raises(ZeroCode):
        min_distance(zero_code(A))


def test_distance_by_support_search():
    # 2^20 words: beyond enumeration, so the support search answers
    A = amb(F2, "x^23-1")
    golay = code_from_generator(A, Poly.parse(F2, "1+x^2+x^4+x^5+x^6+x^10+x^11"))
    assert golay.dimension == 12
    assert min_distance(golay) == 7


def test_nondegeneracy():
    assert nondegeneracy_check(amb(F2, "x^2-1"))
    assert not nondegeneracy_check(amb(F2, "x^2"))
    assert nondegeneracy_check(amb(Z4, "x^2-1"))


def test_description_file():
    C = parse_code_description("Z4  # ring\nx^3-1\nx-1\n2\n")
    assert C.ambient.base == Z4 and len(C.generators) == 2
    assert is_ideal(C)


@pytest.mark.parametrize("F", ["x^2-1", "x^3-1", "x^3+2x+1", "x^4-1"])
@pytest.mark.parametrize("g", ["2", "x-1", "x+1", "2x+2", "x^2+x+1"])
def test_chain_ring_duality(F, g):
    C = code_from_generator(amb(Z4, F), Poly.parse(Z4, g))
    keys = dual_zero(C).word_keys
    assert keys == orthogonal_bruteforce(C) == annihilator_bruteforce(C)
    assert C.cardinality * len(keys) == 4 ** C.ambient.N


def test_dual_ms_matches():
    ctx = build_ctx("F3", "x^2-1", 3)
    A = QuotientCtx(ctx.R, ctx.F)
    a, b = Poly.parse(ctx.R, "x-1"), Poly.parse(ctx.R, "x+1")
    for g in (Poly.one(ctx.R), a, a**2, a * b, a**3 * b):
        C = code_from_generator(A, g)
        assert dual_ms(C, ctx) == dual_zero(C)
    assert dual_ms(zero_code(A), ctx) == whole_code(A)


@given(st.lists(st.integers(0, 1), min_size=5, max_size=5))
def test_ideal_closure_f2(gen):
    A = amb(F2, "x^5-1")
    C = code_from_generator(A, Poly(F2, gen))
    W = C.words
    assert is_ideal(C)
    shifted = np.roll(W, 1, axis=1)  # x^5 = 1: multiplication by x is a cyclic shift
    assert set(map(tuple, shifted.tolist())) == set(map(tuple, W.tolist()))
