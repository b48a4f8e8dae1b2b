import random

import pytest

from polycyclic.codes import code_from_generator, min_distance, whole_code, zero_code
from polycyclic.errors import NonUnitConstant, NotAnIdeal, SingularA, TooLarge
from polycyclic.matrix_product import (
    MatrixProductCode,
    MpContext,
    TSet,
    adic_reconstruct,
    blockwise_dual,
    cyc_dual_form,
    cyc_matrices,
    digit_weight,
    distance_bound,
    distance_bound_digits,
    divisor_codes,
    exponents_of,
    mp_dual,
    mu,
    phi,
    phi_inv,
    proof_form,
    psi,
    s_mul,
    sigma_dual_identity,
    sigma_perm,
    factor_constituents,
    theorem_t2_decompose,
    twist_blocks,
    twisted_structure_holds,
    x_adic_decompose,
)
from polycyclic.codes import LinearCode
from polycyclic.poly import Poly
from polycyclic.rings import ring_make

F2, F3, F4 = (ring_make(s) for s in ("F2", "F3", "F4"))


def mp(K, f, k):
    return MpContext(K, Poly.parse(K, f), k)


def test_context_data():
    ctx = mp(F3, "x^2+1", 1)
    assert (ctx.e, ctx.q, ctx.n, ctx.N, ctx.e_prime) == (4, 3, 2, 6, 3)
    assert ctx.ambient.modulus == Poly.parse(F3, "x^6+1")
    with pytest.raises(NonUnitConstant):
        mp(F2, "x^2+x", 1)


def test_phi_psi_small():
    ctx = mp(F3, "x^2+1", 1)
    parts = phi(Poly.monomial(F3, 3), ctx)
    assert parts == (Poly(F3, []), Poly.one(F3))  # x^q -> y
    assert phi_inv(parts, ctx) == Poly.monomial(F3, 3)
    c = phi(Poly.parse(F3, "2"), ctx)
    assert psi(c, ctx) == c
    # x -> y^e' x with e' = 3: y^3 = -y modulo y^2 + 1
    assert psi(phi(Poly.x(F3), ctx), ctx) == (Poly(F3, []), Poly.parse(F3, "2x"))


def test_phi_multiplicative_exhaustive():
    ctx = mp(F2, "x^2+x+1", 1)
    A = ctx.ambient
    elems = list(A.elements())
    rng = random.Random(0)
    for _ in range(300):
        a, b = rng.choice(elems), rng.choice(elems)
        Ma = [list(p.padded(ctx.q)) for p in phi(a, ctx)]
        Mb = [list(p.padded(ctx.q)) for p in phi(b, ctx)]
        assert s_mul(ctx, Ma, Mb) == [list(p.padded(ctx.q)) for p in phi(A.mul(a, b), ctx)]


def test_sigma():
    assert sigma_perm(3, 2) == [0, 3, 1, 4, 2, 5]
    assert sigma_perm(4, 1) == [0, 1, 2, 3]


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)])
def test_cyc(p, k):
    c = cyc_matrices(p, k)
    assert all(c.checks().values())


def test_cyc_small_values():
    assert [list(r) for r in cyc_matrices(2, 1).CYC] == [[1, 1], [0, 1]]
    assert [list(r) for r in cyc_matrices(3, 1).CYC] == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    with pytest.raises(TooLarge):
        cyc_matrices(2, 7)


def test_whole_and_zero():
    ctx = mp(F2, "x+1", 1)
    W = whole_code(ctx.ambient)
    dec = x_adic_decompose(mu(W, ctx), ctx)
    assert all(c.cardinality == 2 for c in dec.components)
    assert theorem_t2_decompose(W, ctx).holds
    Z = zero_code(ctx.ambient)
    assert mu(Z, ctx).cardinality == 1
    assert sigma_dual_identity(W, ctx)


def test_adic_round_trip():
    ctx = mp(F3, "x^2-1", 1)
    for _, C in divisor_codes(ctx):
        S = mu(C, ctx)
        dec = x_adic_decompose(S, ctx)
        assert dec.chain_holds()
        assert adic_reconstruct(dec).code == S.code


def test_non_ideal_rejected():
    ctx = mp(F2, "x+1", 1)
    S = TSet(ctx, LinearCode(F2, 2, [[1, 0]]))
    with pytest.raises(NotAnIdeal):
        x_adic_decompose(S, ctx)


def test_structure_with_trivial_order():
    ctx = mp(F2, "x+1", 1)
    for _, C in divisor_codes(ctx):
        assert theorem_t2_decompose(C, ctx).holds


def test_structure_counterexample_with_nontrivial_order():
    # f = x + 1 over F3 has order 2, and the literal matrix-product form misses the twist
    ctx = mp(F3, "x+1", 1)
    C = code_from_generator(ctx.ambient, Poly.parse(F3, "x^2+2x+1"))
    rep = theorem_t2_decompose(C, ctx)
    assert [list(r) for r in rep.sigma_image.basis] == [[1, 2, 1]]
    assert [list(r) for r in rep.mp_code.code.basis] == [[1, 1, 1]]
    assert not rep.holds
    assert twist_blocks(ctx, rep.mp_code.code) == rep.sigma_image
    assert twisted_structure_holds(C, ctx)


def test_proof_form_agrees_with_cyc_form():
    ctx = mp(F2, "x^2+x+1", 2)
    for _, C in divisor_codes(ctx):
        rep = theorem_t2_decompose(C, ctx)
        assert proof_form(C, ctx, rep.decomposition).code == rep.mp_code.code


def test_constituent_formula_uses_factors_of_f():
    ctx = mp(F4, "x^2+x+1", 1)
    fails = 0
    for _, C in divisor_codes(ctx):
        dec = x_adic_decompose(mu(C, ctx), ctx)
        assert factor_constituents(C, ctx, literal=False).components == dec.components
        fails += factor_constituents(C, ctx, literal=True).components != dec.components
    assert fails > 0


def test_exponents_round_trip():
    ctx = mp(F2, "x^3+x+1", 2)
    for exps, C in divisor_codes(ctx):
        assert exponents_of(C, ctx) == exps


def test_digit_weight():
    assert [digit_weight(t, 2) for t in range(4)] == [1, 2, 2, 4]
    assert [digit_weight(t, 3) for t in range(3)] == [1, 2, 3]


def test_distance_formula_counterexample():
    # q = 4: the (t+1) weights overshoot; the digit weights match
    ctx = mp(F2, "x+1", 2)
    C = code_from_generator(ctx.ambient, Poly.parse(F2, "x^2+1"))
    dec = theorem_t2_decompose(C, ctx).decomposition
    assert min_distance(C) == 2
    assert distance_bound(dec) == 3
    assert distance_bound_digits(dec) == 2


def test_distance_formula_prime_q():
    ctx = mp(F2, "x+1", 1)
    C = code_from_generator(ctx.ambient, Poly.parse(F2, "x+1"))
    assert distance_bound(theorem_t2_decompose(C, ctx).decomposition) == min_distance(C) == 2


def test_duals_on_decompositions():
    ctx = mp(F3, "x^2-1", 1)
    for _, C in divisor_codes(ctx):
        M = theorem_t2_decompose(C, ctx).mp_code
        bd = blockwise_dual(M, ctx.f)
        assert mp_dual(M).code == bd == cyc_dual_form(M).code
        assert M.cardinality * bd.cardinality == 3**ctx.N


def test_cyc_dual_needs_nesting():
    ctx = mp(F2, "x+1", 1)
    A = ctx.constituent_ambient
    D1, D0 = zero_code(A), whole_code(A)
    M = MatrixProductCode([D1, D0], cyc_matrices(2, 1).in_field(F2))
    bd = blockwise_dual(M, ctx.f)
    assert [list(r) for r in bd.basis] == [[1, 0]]
    assert mp_dual(M).code == bd
    assert cyc_dual_form(M).code != bd


def test_mp_dual_singular():
    A = mp(F2, "x+1", 1).constituent_ambient
    M = MatrixProductCode([whole_code(A), whole_code(A)], [[1, 1], [1, 1]])
    with pytest.raises(SingularA):
        mp_dual(M)


def test_cardinality_with_full_rank_a():
    A = mp(F3, "x^2-1", 1).constituent_ambient
    Ds = [code_from_generator(A, Poly.parse(F3, g)) for g in ("x-1", "1", "x+1")]
    M = MatrixProductCode(Ds, [[1, 0, 2, 1], [0, 1, 1, 1], [1, 1, 0, 2]])
    assert M.cardinality == M.product_of_sizes() == 3 * 9 * 3
