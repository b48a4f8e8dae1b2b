import pytest
from hypothesis import given, strategies as st

from polycyclic.errors import NonMonicDivisor, ZeroConstantTerm
from polycyclic.poly import (
    Poly,
    monic_divisors,
    poly_divmod,
    poly_eval,
    poly_factor_field,
    poly_order,
    poly_roots_exhaustive,
    poly_squarefree_check,
    root_multiplicity,
)
from polycyclic.rings import LiftMap, ring_make

Z4, Z16, F2, F3, F4 = (ring_make(s) for s in ("Z4", "Z16", "F2", "F3", "F4"))
G = Poly.parse(Z4, "1+2x^3+x^4+3x^5")


def test_expansions():
    assert (Poly.parse(Z4, "x-1") ** 3) == Poly.parse(Z4, "x^3+x^2+3x+3")
    F = Poly.parse(Z4, "x^3") * Poly.parse(Z4, "x-1") ** 3
    assert F == Poly.parse(Z4, "x^6-3x^5+3x^4-x^3")


def test_eval_under_integer_lift():
    m = LiftMap(Z4, Z16, "IntegerLift")
    assert poly_eval(G, Z16.elem(1), m).value == 7
    assert poly_eval(G, Z16.elem(12), m).value == 1
    assert poly_eval(G, Z4.elem(0)).value == 1


def test_factor_examples():
    fac = poly_factor_field(Poly.parse(F2, "x^3-1"))
    assert [str(g) for g, _ in fac.factors] == ["1+x", "1+x+x^2"]
    assert [str(g) for g, _ in poly_factor_field(Poly.parse(F2, "x^2-x")).factors] == ["x", "1+x"]
    assert len(poly_factor_field(Poly.parse(F2, "x^3+x+1")).factors) == 1


@pytest.mark.parametrize("ring,f,e", [("F2", "x+1", 1), ("F2", "x^2+x+1", 3), ("F3", "x-1", 1), ("F2", "x^3+x+1", 7), ("F3", "x^2+1", 4)])
def test_order(ring, f, e):
    assert poly_order(Poly.parse(ring_make(ring), f)) == e


def test_order_rejects_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        poly_order(Poly.parse(F2, "x^2+x"))


def test_roots_and_multiplicity():
    assert [r.value for r in poly_roots_exhaustive(Poly.parse(Z4, "x^2-x"))] == [0, 1]
    F = Poly.parse(Z16, "x-1") ** 3 * Poly.parse(Z16, "x-12") ** 3
    assert root_multiplicity(F, Z16.elem(1)) == 3
    assert root_multiplicity(F, Z16.elem(12)) == 3
    assert poly_roots_exhaustive(Poly.parse(Z16, "5")) == []


def test_squarefree():
    assert poly_squarefree_check(Poly.parse(Z4, "x^2-x"))
    assert not poly_squarefree_check(Poly.parse(F2, "x^2+1"))  # (x+1)^2
    assert not poly_squarefree_check(Poly.parse(Z4, "x^6-3x^5+3x^4-x^3"))


def test_nonmonic_divisor():
    with pytest.raises(NonMonicDivisor):
        poly_divmod(G, Poly.parse(Z4, "2x+1"))


def test_divisor_count():
    fac = poly_factor_field(Poly.parse(F3, "x^4-1"))
    assert len(list(monic_divisors(fac))) == 2**3


coeffs = st.lists(st.integers(0, 3), max_size=8)


@given(coeffs, st.lists(st.integers(0, 3), max_size=4))
def test_divmod_roundtrip(a, b):
    A, B = Poly(Z4, a), Poly(Z4, b + [1])
    q, r = poly_divmod(A, B)
    assert q * B + r == A and r.degree < B.degree


@given(coeffs, coeffs, st.integers(0, 15))
def test_eval_is_a_morphism(a, b, x):
    m = LiftMap(Z4, Z16, "IntegerLift")
    A, B = Poly(Z4, a), Poly(Z4, b)
    pt = Z16.elem(x)
    # the integer lift is additive only modulo 4, so compare after reduction
    lhs = poly_eval(A * B, pt, m).value % 4
    rhs = (poly_eval(A, pt, m) * poly_eval(B, pt, m)).value % 4
    assert lhs == rhs


@given(st.lists(st.integers(0, 3), min_size=1, max_size=6))
def test_factor_multiplies_back(tail):
    f = Poly(F4, tail + [1])
    fac = poly_factor_field(f)
    assert fac.product() == f
