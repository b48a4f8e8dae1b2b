import random

import pytest

from polycyclic.contexts import build_ctx
from polycyclic.errors import MultiplicityMismatch, NotPrimeCharacteristic, UnassignedRoot
from polycyclic.idempotents import (
    crt_decompose,
    idempotent_census,
    idempotent_complement_ideal,
    idempotent_complement_identity,
    idempotent_generated_check,
    idempotent_generated_code,
    idempotent_identities,
    primitive_idempotents,
    root_partition,
)
from polycyclic.poly import Poly
from polycyclic.transform import ms_forward, ms_indicator


def test_classical_idempotent():
    ctx = build_ctx("F2", "x^2-x", 1)
    P = root_partition(ctx)
    assert [sorted(c) for c in P.classes] == [[0], [1]]
    E = primitive_idempotents(P).E
    # the idempotent supported at the root 1 is x itself: x^2 = x, x(0) = 0, x(1) = 1
    assert E[1] == Poly.x(ctx.Rprime)
    assert ms_forward(E[1], ctx) == ms_indicator(ctx, [1])


def test_partitions():
    assert len(root_partition(build_ctx("F2", "x^2+x+1", 2)).classes) == 1
    assert len(root_partition(build_ctx("F4", "x^3-1", 2)).classes) == 3
    E = primitive_idempotents(root_partition(build_ctx("F2", "x^2+x+1", 2))).E
    assert E == (Poly.one(E[0].ctx),)


def test_unassigned_root():
    ctx = build_ctx("F3", "x^2-1", 1)
    with pytest.raises(UnassignedRoot):
        root_partition(ctx, [Poly.parse(ctx.R, "x-1")])


def test_sum_to_one_with_multiplicity():
    ctx = build_ctx("F2", "x^2-x", 2)
    assert all(idempotent_identities(primitive_idempotents(root_partition(ctx))).values())


def test_complement_identity_over_f2():
    ctx = build_ctx("F2", "x^2-x", 2)
    P = root_partition(ctx)
    assert all(idempotent_complement_identity(P, i, 1) for i in range(P.r))


def test_complement_over_f3_holds_only_as_ideals():
    ctx = build_ctx("F3", "x^3-x", 3)
    P = root_partition(ctx)
    assert [idempotent_complement_identity(P, i, 1) for i in range(P.r)] == [False] * 3
    assert all(idempotent_complement_ideal(P, i, 1) for i in range(P.r))


def test_transform_of_class_power():
    # MS(f_i^(p^k)) vanishes on class i and is the constant (a_j - a_i)^(p^k) elsewhere
    ctx = build_ctx("F3", "x^3-x", 3)
    P = root_partition(ctx)
    Rp = ctx.Rprime
    for i, cls in enumerate(P.classes):
        (ai,) = [ctx.roots[j] for j in cls]
        e = ms_forward(P.factor_of_class[i] ** 3 % Poly(Rp, list(ctx.F.coeffs)), ctx)
        for j, aj in enumerate(ctx.roots):
            assert e.table[j] == (Rp.pow(Rp.sub(aj, ai), 3), 0, 0)


def test_prime_characteristic_required(z4ctx):
    with pytest.raises(NotPrimeCharacteristic):
        idempotent_complement_identity(root_partition(z4ctx), 0, 1)
    ctx = build_ctx("F3", "x^2-1", 2)
    with pytest.raises(MultiplicityMismatch):
        crt_decompose(ctx, root_partition(ctx))


def test_crt():
    ctx = build_ctx("F2", "x^2-x", 2)
    crt = crt_decompose(ctx, root_partition(ctx))
    assert len(crt.components) == 2
    one = Poly.one(ctx.Rprime)
    assert crt.project(one) == (one, one)
    rng = random.Random(3)
    for _ in range(30):
        g = Poly(ctx.Rprime, [rng.randrange(2) for _ in range(ctx.N)])
        assert crt.combine(crt.project(g)) == g


def test_generated_code_edges():
    ctx = build_ctx("F2", "x^2-x", 2)
    P = root_partition(ctx)
    assert idempotent_generated_code(P, []) == Poly.one(ctx.Rprime)
    assert idempotent_generated_code(P, [0, 1]).is_zero()
    assert idempotent_generated_check(P, [1])


@pytest.mark.parametrize("ring,f,m", [("F2", "x^2-x", 2), ("F3", "x^2-1", 3), ("F2", "x^3-1", 2), ("F4", "x^2+x+1", 2)])
def test_census(ring, f, m):
    P = root_partition(build_ctx(ring, f, m))
    found, predicted = idempotent_census(P, "Rprime")
    assert found == predicted and len(found) == 2 ** len(P.ctx.roots)
