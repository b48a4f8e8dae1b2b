import pytest
from hypothesis import given, strategies as st

from polycyclic.errors import IncompatibleRings, NotAUnit, ParseError, ReducibleModulus
from polycyclic.rings import (
    LiftMap,
    elem_inverse,
    elem_lift,
    elem_mul,
    is_nilpotent,
    is_unit,
    ring_enumerate,
    ring_make,
)

SPECS = ["Z4", "Z8", "Z9", "Z16", "F2", "F3", "F4", "F8", "F9", "GR(4,2)", "F2[u]/u^3", "Jet(F3,2)"]


@pytest.mark.parametrize("spec,size", [("Z4", 4), ("Z16", 16), ("F4:x^2+x+1", 4), ("GR(4,2)", 16), ("Jet(Z16,3)", 16**3)])
def test_sizes(spec, size):
    assert ring_make(spec).size == size


def test_small_products():
    Z16, Z4 = ring_make("Z16"), ring_make("Z4")
    assert elem_mul(Z16.elem(12), Z16.elem(12)).value == 0
    assert elem_mul(Z4.elem(3), Z4.elem(3)).value == 1
    assert elem_inverse(Z4.elem(3)).value == 3


def test_inverse_in_f4():
    F4 = ring_make("F4:x^2+x+1")
    a = F4.elem("a")
    assert elem_inverse(a) == a + 1


def test_non_units():
    Z16 = ring_make("Z16")
    with pytest.raises(NotAUnit):
        elem_inverse(Z16.elem(2))
    assert is_nilpotent(Z16.elem(12))
    assert is_unit(Z16.elem(7))
    F4 = ring_make("F4")
    assert all(is_unit(x) for x in ring_enumerate(F4)[1:])


def test_enumeration():
    assert [x.value for x in ring_enumerate(ring_make("Z4"))] == [0, 1, 2, 3]
    assert len(ring_enumerate(ring_make("Jet(Z16,3)"))) == 4096


def test_integer_lift():
    m = LiftMap(ring_make("Z4"), ring_make("Z16"), "IntegerLift")
    Z4 = ring_make("Z4")
    assert elem_lift(m, Z4.elem(3)).value == 3
    two = elem_lift(m, Z4.elem(2))
    assert (two * ring_make("Z16").elem(12) ** 3).value == 0
    assert all(m.reduce(m(a)) == a for a in range(4))


def test_bad_specs():
    with pytest.raises(ParseError):
        ring_make("Q7")
    with pytest.raises(ReducibleModulus):
        ring_make("F4:a^2+1")
    with pytest.raises(IncompatibleRings):
        LiftMap(ring_make("Z16"), ring_make("Z4"), "IntegerLift")


@pytest.mark.parametrize("spec", SPECS)
def test_ring_axioms_sampled(spec):
    R = ring_make(spec)

    @given(st.integers(0, R.size - 1), st.integers(0, R.size - 1), st.integers(0, R.size - 1))
    def check(a, b, c):
        assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
        assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
        assert R.add(a, R.neg(a)) == 0
        assert is_unit(R.elem(0) + a) != is_nilpotent(R.elem(0) + a)  # local ring

    check()


@pytest.mark.parametrize("spec", SPECS)
def test_units_have_inverses(spec):
    R = ring_make(spec)
    for a in R.elements():
        if R.is_unit(a):
            assert R.mul(a, R.inverse(a)) == R.one
