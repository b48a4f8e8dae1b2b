import math

import pytest
from hypothesis import given, strategies as st

from polycyclic.hasse import formal_derivative, hasse_derivative, hasse_product_check, hasse_taylor, shift
from polycyclic.poly import Poly
from polycyclic.rings import ring_make

Z4 = ring_make("Z4")
G = Poly.parse(Z4, "1+2x^3+x^4+3x^5")


def test_golden_derivatives():
    assert hasse_derivative(G, 1) == Poly.parse(Z4, "2x^2+3x^4")
    assert hasse_derivative(G, 2) == Poly.parse(Z4, "2x+2x^2+2x^3")
    assert hasse_derivative(G, 0) == G


def test_taylor_small():
    assert [c.value for c in hasse_taylor(Poly.parse(Z4, "x^2"), Z4.elem(1))] == [1, 2, 1]
    assert [c.value for c in hasse_taylor(Poly.parse(Z4, "3"), Z4.elem(2))] == [3]


def test_product_rule_edges():
    x = Poly.x(Z4)
    assert hasse_product_check(x, x, 1)
    assert hasse_derivative(x * x, 1) == Poly.parse(Z4, "2x")
    assert hasse_derivative(G * G, 11) == Poly(Z4, [])


@pytest.mark.parametrize("spec", ["Z4", "Z16", "F2", "F4", "F9"])
def test_laws(spec):
    R = ring_make(spec)
    polys = st.lists(st.integers(0, R.size - 1), max_size=7).map(lambda c: Poly(R, c))

    @given(polys, polys, st.integers(0, 6), st.integers(0, R.size - 1))
    def check(p, q, k, lam):
        assert hasse_derivative(p + q, k) == hasse_derivative(p, k) + hasse_derivative(q, k)
        assert hasse_product_check(p, q, k)
        assert hasse_derivative(p, k).scale(R.from_int(math.factorial(k))) == formal_derivative(p, k)
        t = hasse_taylor(p, R.elem(0) + lam)
        assert Poly(R, [c.value for c in t]) == shift(p, R.elem(0) + lam)

    check()
