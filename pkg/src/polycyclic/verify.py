"""Deterministic invariant suite behind ``polycyclic verify``.

Each property is a function ``(grid) -> Outcome`` counting passing cases.
``grid`` is ``"small"`` (seconds) or ``"full"`` (the desk-scale grids of the
acceptance checks).  Literal statements and their corrected variants are
reported as separate properties so that a failure is never hidden behind a
repaired form.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass
from math import factorial

from . import _upoly, linalg
from .codes import (
    annihilator_bruteforce,
    code_from_generator,
    dual_ms,
    dual_zero,
    is_ideal,
    min_distance,
    orthogonal_bruteforce,
)
from .contexts import build_ctx, homomorphism_contexts
from .hasse import formal_derivative, hasse_derivative, hasse_product_check, hasse_taylor, shift
from .idempotents import (
    crt_decompose,
    idempotent_census,
    idempotent_complement_ideal,
    idempotent_complement_identity,
    idempotent_identities,
    primitive_idempotents,
    root_partition,
)
from .matrix_product import (
    MatrixProductCode,
    MpContext,
    blockwise_dual,
    cyc_dual_form,
    cyc_matrices,
    distance_bound,
    distance_bound_digits,
    divisor_codes,
    grid_contexts,
    has_nonsingular_columns,
    mp_dual,
    phi,
    phi_inv,
    psi_inv_matrix,
    psi_matrix,
    s_mul,
    sigma_dual_identity,
    t_mul,
    theorem_t2_decompose,
    twist_blocks,
)
from .poly import (
    Poly,
    QuotientCtx,
    monic_divisors,
    poly_divmod,
    poly_eval,
    poly_factor_field,
    poly_order,
    poly_squarefree_check,
)
from .rings import LiftMap, RingElem, ring_make
from .transform import (
    MsElement,
    _hasse_values,
    gdft,
    jordan_reduction,
    make_transform_ctx,
    ms_forward,
    ms_forward_scale,
    ms_forward_shift,
    ms_star_mul,
    vandermonde,
    vandermonde_det_formula,
)

SEED = 20240501


@dataclass
class Outcome:
    passed: int
    total: int
    note: str = ""

    @property
    def ok(self):
        return self.passed == self.total and self.total > 0


def rand_poly(R, length, rng):
    return Poly(R, [rng.randrange(R.size) for _ in range(length)])


def _count(cases):
    p = t = 0
    for ok in cases:
        t += 1
        p += bool(ok)
    return Outcome(p, t)


# -- ring-core -----------------------------------------------------------------------

RING_SPECS = [
    "Z4", "Z8", "Z9", "Z16", "F2", "F3", "F4", "F9",
    "F8", "GR(4,2)", "F2[u]/u^3", "F4[u]/u^2", "Jet(F3,2)", "Jet(Z4,2)",
]


def _rings(grid):
    return [ring_make(s) for s in (RING_SPECS if grid == "full" else RING_SPECS[:8])]


def ring_nonunits_ideal(grid):
    def cases():
        for R in _rings(grid):
            if R.size > 4096:
                continue
            nonunits = [a for a in R.elements() if not R.is_unit(a)]
            ns = set(nonunits)
            yield all(R.add(a, b) in ns for a in nonunits for b in nonunits) and all(
                R.mul(r, a) in ns for r in R.elements() for a in nonunits
            )
    return _count(cases())


def ring_inverse(grid):
    def cases():
        for R in _rings(grid):
            for a in R.elements():
                if R.is_unit(a):
                    yield R.mul(a, R.inverse(a)) == R.one
    return _count(cases())


def ring_characteristic(grid):
    """The additive order of ``1`` is ``char``."""
    def cases():
        for R in _rings(grid):
            acc, first = 0, None
            for i in range(1, R.char + 1):
                acc = R.add(acc, R.one)
                if acc == 0:
                    first = i
                    break
            yield first == R.char
    return _count(cases())


def ring_lift_roundtrip(grid):
    def cases():
        for a, b in (("Z4", "Z16"), ("Z2", "Z8"), ("Z9", "Z27")):
            m = LiftMap(ring_make(a), ring_make(b), "IntegerLift")
            yield all(m.reduce(m(x)) == x for x in m.source.elements())
        for spec, f in (("F2", "x^2+x+1"), ("F3", "x^2+1"), ("Z4", "x^2+x+1")):
            m = build_ctx(spec, f, 1).lift
            yield all(m.reduce(m(x)) == x for x in m.source.elements())
    return _count(cases())


# -- poly-algebra ---------------------------------------------------------------------


def poly_divmod_roundtrip(grid):
    rng = random.Random(SEED)
    def cases():
        for R in _rings(grid):
            for _ in range(10 if grid == "small" else 40):
                a = rand_poly(R, rng.randrange(0, 9), rng)
                b = Poly(R, [rng.randrange(R.size) for _ in range(rng.randrange(0, 4))] + [R.one])
                q, r = poly_divmod(a, b)
                yield q * b + r == a and r.degree < b.degree
    return _count(cases())


def poly_factor_check(grid):
    rng = random.Random(SEED + 1)
    def cases():
        for spec in ("F2", "F3", "F4", "F9"):
            K = ring_make(spec)
            for _ in range(10 if grid == "small" else 40):
                f = Poly(K, [rng.randrange(K.size) for _ in range(rng.randrange(1, 7))] + [K.one])
                fac = poly_factor_field(f)
                irr = all(_upoly.is_irreducible(K, list(g.coeffs)) for g, _ in fac.factors)
                yield fac.product() == f and irr
    return _count(cases())


def poly_order_divides(grid):
    """``x^e = 1`` modulo ``f`` and ``e`` divides ``lcm(|K|^deg f_i - 1)`` for squarefree ``f``."""
    from math import lcm

    def cases():
        for spec in ("F2", "F3", "F4"):
            K = ring_make(spec)
            for d in range(1, 4 if grid == "full" else 3):
                for tail in _upoly.monic_polys(K, d):
                    f = Poly(K, tail)
                    if f.coeff(0) == 0 or not poly_squarefree_check(f):
                        continue
                    e = poly_order(f)
                    L = lcm(*[K.size**g.degree - 1 for g, _ in poly_factor_field(f).factors])
                    xe = _upoly.powmod(K, [0, K.one], e, list(f.coeffs))
                    yield L % e == 0 and xe == [K.one]
    return _count(cases())


def poly_eval_morphism(grid):
    rng = random.Random(SEED + 2)
    def cases():
        for R in _rings(grid):
            for _ in range(20):
                g, h = rand_poly(R, 5, rng), rand_poly(R, 5, rng)
                rho = RingElem(R, rng.randrange(R.size))
                yield poly_eval(g * h, rho) == poly_eval(g, rho) * poly_eval(h, rho) and poly_eval(
                    g + h, rho
                ) == poly_eval(g, rho) + poly_eval(h, rho)
    return _count(cases())


# -- hasse-calculus -------------------------------------------------------------------

HASSE_RINGS = ("Z4", "Z16", "F2", "F4", "F9")


def _hasse_cases(grid, seed, body):
    rng = random.Random(seed)
    def cases():
        for spec in HASSE_RINGS:
            R = ring_make(spec)
            for _ in range(20 if grid == "small" else 100):
                yield body(R, rng)
    return _count(cases())


def hasse_linearity(grid):
    def body(R, rng):
        p, q, k = rand_poly(R, 8, rng), rand_poly(R, 8, rng), rng.randrange(0, 6)
        c = rng.randrange(R.size)
        lhs = hasse_derivative(p.scale(c) + q, k)
        return lhs == hasse_derivative(p, k).scale(c) + hasse_derivative(q, k)
    return _hasse_cases(grid, SEED + 3, body)


def hasse_taylor_check(grid):
    def body(R, rng):
        p = rand_poly(R, 7, rng)
        lam = RingElem(R, rng.randrange(R.size))
        return Poly(R, [c.value for c in hasse_taylor(p, lam)]) == shift(p, lam)
    return _hasse_cases(grid, SEED + 4, body)


def hasse_product_rule(grid):
    def body(R, rng):
        return hasse_product_check(rand_poly(R, 6, rng), rand_poly(R, 6, rng), rng.randrange(0, 8))
    return _hasse_cases(grid, SEED + 5, body)


def hasse_factorial(grid):
    def body(R, rng):
        p, k = rand_poly(R, 8, rng), rng.randrange(0, 6)
        return hasse_derivative(p, k).scale(R.from_int(factorial(k))) == formal_derivative(p, k)
    return _hasse_cases(grid, SEED + 6, body)


# -- ms-transform ---------------------------------------------------------------------


def ms_injective(grid):
    """Distinct residues have distinct images (exhaustive on a small ring, sampled elsewhere)."""
    rng = random.Random(SEED + 7)
    def cases():
        ctx = build_ctx("F2", "x^2+x", 2)
        A = QuotientCtx(ctx.R, ctx.F)
        seen = set()
        for g in A.elements():
            key = ms_forward(g, ctx).table
            yield key not in seen
            seen.add(key)
        for ctx in homomorphism_contexts().values():
            for _ in range(100):
                g = rand_poly(ctx.R, ctx.N, rng)
                h = g if rng.random() < 0.2 else rand_poly(ctx.R, ctx.N, rng)
                yield (ms_forward(g, ctx) == ms_forward(h, ctx)) == (g == h)
    return _count(cases())


def homomorphism_trials(ctx, trials, seed=SEED + 8):
    """Number of random pairs with ``MS(g h mod F) == MS(g) * MS(h)``."""
    rng = random.Random(seed)
    ok = 0
    for _ in range(trials):
        g, h = rand_poly(ctx.R, ctx.N, rng), rand_poly(ctx.R, ctx.N, rng)
        gh = poly_divmod(g * h, ctx.F)[1]
        ok += ms_forward(gh, ctx) == ms_star_mul(ms_forward(g, ctx), ms_forward(h, ctx))
    return ok


def ms_homomorphism(grid):
    trials = 500
    res = {name: homomorphism_trials(c, trials) for name, c in homomorphism_contexts().items()}
    note = ", ".join(f"{k}: {v}/{trials}" for k, v in res.items())
    return Outcome(sum(res.values()), trials * len(res), note)


def _by_context(contexts, trials, seed, body):
    """Run ``body(ctx, rng)`` ``trials`` times per named context; per-context counts go in the note."""
    rng = random.Random(seed)
    res = {name: sum(bool(body(c, rng)) for _ in range(trials)) for name, c in contexts.items()}
    note = ", ".join(f"{k}: {v}/{trials}" for k, v in res.items())
    return Outcome(sum(res.values()), trials * len(res), note)


def ms_paths_shift(grid):
    def body(ctx, rng):
        g = rand_poly(ctx.R, ctx.N, rng)
        return ms_forward(g, ctx) == ms_forward_shift(g, ctx)
    return _by_context(homomorphism_contexts(), 50, SEED + 9, body)


def _unit_root_contexts():
    return {k: c for k, c in homomorphism_contexts().items() if all(c.Rprime.is_unit(a) for a in c.roots)}


def rescale(e):
    """Multiply the ``y^k`` coefficient at root ``alpha_j`` by ``alpha_j^k``."""
    ctx, Rp = e.ctx, e.ctx.Rprime
    return MsElement(
        ctx,
        tuple(tuple(Rp.mul(Rp.pow(a, k), v) for k, v in enumerate(row)) for a, row in zip(ctx.roots, e.table)),
    )


def ms_paths_scale_literal(grid):
    def body(ctx, rng):
        g = rand_poly(ctx.R, ctx.N, rng)
        return ms_forward(g, ctx) == ms_forward_scale(g, ctx)
    return _by_context(_unit_root_contexts(), 50, SEED + 10, body)


def ms_paths_scale_rescaled(grid):
    def body(ctx, rng):
        g = rand_poly(ctx.R, ctx.N, rng)
        return rescale(ms_forward(g, ctx)) == ms_forward_scale(g, ctx)
    return _by_context(_unit_root_contexts(), 50, SEED + 11, body)


def ms_well_defined(grid):
    """Hasse values at the roots do not change when a multiple of ``F`` is added."""
    def body(ctx, rng):
        g, k = rand_poly(ctx.R, ctx.N, rng), rand_poly(ctx.R, 4, rng)
        return _hasse_values(g + k * ctx.F, ctx) == _hasse_values(g, ctx)
    return _by_context(homomorphism_contexts(), 30, SEED + 12, body)


def _each_context(pred):
    res = {name: bool(pred(c)) for name, c in homomorphism_contexts().items()}
    return Outcome(sum(res.values()), len(res), ", ".join(f"{k}: {v}" for k, v in res.items()))


def ms_det_formula(grid):
    return _each_context(lambda c: linalg.det(c.Rprime, vandermonde(c)) == vandermonde_det_formula(c))


def ms_det_unit(grid):
    return _each_context(lambda c: c.Rprime.is_unit(linalg.det(c.Rprime, vandermonde(c))))


def ms_jordan(grid):
    return _each_context(lambda c: jordan_reduction(c).holds)


def ms_classical(grid):
    """With ``m = 1`` the transform is plain evaluation at the roots."""
    rng = random.Random(SEED + 13)
    def cases():
        for ring, f in (("F2", "x^2+x+1"), ("F3", "x^2-1"), ("F4", "x^3-1"), ("F2", "x^3+x+1")):
            ctx = build_ctx(ring, f, 1)
            for _ in range(20):
                g = rand_poly(ctx.R, ctx.N, rng)
                row = gdft(g, ctx)[0]
                yield row == [poly_eval(g, a, ctx.lift) for a in ctx.root_elems()]
    return _count(cases())


# -- idempotents ----------------------------------------------------------------------


def idempotent_contexts(grid):
    """Fields ``F2, F3, F4``, squarefree monic ``f`` and ``m = p^k <= 4``."""
    max_deg = 3 if grid == "full" else 2
    for spec in ("F2", "F3", "F4"):
        K = ring_make(spec)
        for d in range(1, max_deg + 1):
            for tail in _upoly.monic_polys(K, d):
                f = Poly(K, tail)
                if not poly_squarefree_check(f):
                    continue
                m = 1
                while m <= 4:
                    yield make_transform_ctx(f, m)
                    m *= K.char


def _idem_cases(grid, body):
    def cases():
        for ctx in idempotent_contexts(grid):
            yield from body(ctx, root_partition(ctx))
    return _count(cases())


def idem_identities(grid):
    return _idem_cases(grid, lambda ctx, P: [all(idempotent_identities(primitive_idempotents(P)).values())])


def idem_census(grid):
    def body(ctx, P):
        for over, ring in (("Rprime", ctx.Rprime), ("R", ctx.R)):
            if ring.size**ctx.N <= 2**16:
                found, predicted = idempotent_census(P, over)
                yield found == predicted
    return _idem_cases(grid, body)


def idem_complement_literal(grid):
    return _idem_cases(grid, lambda ctx, P: [idempotent_complement_identity(P, i, None) for i in range(P.r)])


def idem_complement_ideal(grid):
    return _idem_cases(grid, lambda ctx, P: [idempotent_complement_ideal(P, i, None) for i in range(P.r)])


def idem_crt(grid):
    rng = random.Random(SEED + 14)
    def body(ctx, P):
        crt = crt_decompose(ctx, P)
        A = crt.ambient
        for _ in range(5):
            g, h = rand_poly(A.base, A.N, rng), rand_poly(A.base, A.N, rng)
            yield crt.combine(crt.project(g)) == g
            yield crt.project(A.mul(g, h)) == crt.mul(crt.project(g), crt.project(h))
    return _idem_cases(grid, body)


# -- codes ----------------------------------------------------------------------------


CODE_GRID = [("F2", 8), ("F3", 5), ("F4", 4), ("F9", 2)]


def code_ambients(grid, unit_f0=False):
    """``K[x]/<F>`` for every monic ``F`` up to a degree bound."""
    bounds = CODE_GRID if grid == "full" else [("F2", 4), ("F3", 3)]
    for spec, maxN in bounds:
        K = ring_make(spec)
        for N in range(1, maxN + 1):
            for tail in _upoly.monic_polys(K, N):
                if unit_f0 and tail[0] == 0:
                    continue
                yield QuotientCtx(K, Poly(K, tail))


def divisor_codes_of(A):
    """``<g>`` for every monic divisor ``g`` of the modulus."""
    for _, g in monic_divisors(poly_factor_field(A.modulus)):
        yield code_from_generator(A, g)


def chain_ring_codes():
    """Codes over ``Z4`` from assorted generators."""
    Z4 = ring_make("Z4")
    for F in ("x^2-1", "x^2+1", "x^3-1", "x^2+x+1", "x^3+2x+1", "x^4-1"):
        A = QuotientCtx(Z4, Poly.parse(Z4, F))
        for g in ("1", "2", "x-1", "2x+2", "x+1", "x^2+x+1", "2x", "0"):
            yield code_from_generator(A, Poly.parse(Z4, g))


def _all_codes(grid, unit_f0):
    for A in code_ambients(grid, unit_f0):
        yield from divisor_codes_of(A)
    for C in chain_ring_codes():
        if not unit_f0 or C.ambient.base.is_unit(C.ambient.modulus.coeff(0)):
            yield C


def codes_ideal_closure(grid):
    return _count(is_ideal(C) for C in _all_codes(grid, False))


def codes_zero_dual(grid):
    """``C^perp0 == Ann(C)``, each checked against exhaustive search."""
    def cases():
        for C in _all_codes(grid, True):
            yield dual_zero(C).word_keys == orthogonal_bruteforce(C) == annihilator_bruteforce(C)
    return _count(cases())


def codes_involution(grid):
    return _count(dual_zero(dual_zero(C)) == C for C in _all_codes(grid, True))


def codes_cardinality(grid):
    return _count(C.cardinality * dual_zero(C).cardinality == C.ambient.size for C in _all_codes(grid, True))


def codes_dual_ms(grid):
    """With a homomorphic transform the ``*``-annihilator of ``MS(C)`` pulls back to ``C^perp0``."""
    def cases():
        for ring, f, m in (("F2", "x^2+x+1", 2), ("F3", "x^2-1", 3), ("F2", "x+1", 4), ("F4", "x^3-1", 2)):
            ctx = build_ctx(ring, f, m)
            for C in divisor_codes_of(QuotientCtx(ctx.R, ctx.F)):
                yield dual_ms(C, ctx) == dual_zero(C)
    return _count(cases())


# -- matrix-product -------------------------------------------------------------------

MP_FIELDS = ("F2", "F3", "F4", "F9")


def mp_contexts(grid):
    if grid == "full":
        return list(grid_contexts([ring_make(s) for s in MP_FIELDS], max_deg=3, max_q=4))
    return list(grid_contexts([ring_make(s) for s in MP_FIELDS[:3]], max_deg=2, max_q=4))


def _mat(parts, ctx):
    return [list(p_.padded(ctx.q)) for p_ in parts]


def mp_morphisms(grid):
    """``phi`` is a ring isomorphism onto ``S``; ``psi`` is one from ``S`` onto ``T``."""
    rng = random.Random(SEED + 15)
    specs = [("F2", "x^2+x+1", 1), ("F2", "x+1", 2), ("F3", "x^2+1", 1), ("F4", "x^2+x+1", 1), ("F3", "x-1", 1)]

    def cases():
        for spec, f, k in specs:
            K = ring_make(spec)
            ctx = MpContext(K, Poly.parse(K, f), k)
            A = ctx.ambient
            elems = list(A.elements()) if A.size <= 2**12 else None
            if elems:
                for a in elems:
                    M = _mat(phi(a, ctx), ctx)
                    yield phi_inv(phi(a, ctx), ctx) == a and psi_inv_matrix(psi_matrix(M, ctx), ctx) == M
            for _ in range(200):
                a, b = rand_poly(K, ctx.N, rng), rand_poly(K, ctx.N, rng)
                Ma, Mb = _mat(phi(a, ctx), ctx), _mat(phi(b, ctx), ctx)
                Mab = _mat(phi(A.mul(a, b), ctx), ctx)
                Ms = _mat(phi(a + b, ctx), ctx)
                yield s_mul(ctx, Ma, Mb) == Mab
                yield [[K.add(u, v) for u, v in zip(r1, r2)] for r1, r2 in zip(Ma, Mb)] == Ms
                yield t_mul(ctx, psi_matrix(Ma, ctx), psi_matrix(Mb, ctx)) == psi_matrix(Mab, ctx)
    return _count(cases())


@lru_cache(maxsize=2)
def mp_records(grid):
    """``(ctx, C, report)`` for every divisor-generated code of the grid, decomposed once."""
    return tuple(
        (ctx, C, theorem_t2_decompose(C, ctx)) for ctx in mp_contexts(grid) for _, C in divisor_codes(ctx)
    )


def _mp_cases(grid, fn):
    def cases():
        for ctx, C, rep in mp_records(grid):
            r = fn(ctx, C, rep)
            if r is not None:
                yield r
    return _count(cases())


def mp_structure(grid):
    return _mp_cases(grid, lambda ctx, C, rep: rep.holds)


def mp_structure_twisted(grid):
    return _mp_cases(grid, lambda ctx, C, rep: twist_blocks(ctx, rep.mp_code.code) == rep.sigma_image)


def mp_distance(grid):
    """``d(C) == min_t (t+1) d(C_t)``."""
    def fn(ctx, C, rep):
        return None if C.is_zero() else distance_bound(rep.decomposition) == min_distance(C)
    return _mp_cases(grid, fn)


def mp_distance_digits(grid):
    """The digit-weight formula against the distance of the matrix-product code itself."""
    def fn(ctx, C, rep):
        return None if C.is_zero() else distance_bound_digits(rep.decomposition) == min_distance(rep.mp_code.code)
    return _mp_cases(grid, fn)


def mp_dual_inverse(grid):
    return _mp_cases(grid, lambda ctx, C, rep: mp_dual(rep.mp_code).code == blockwise_dual(rep.mp_code, ctx.f))


def mp_dual_cyc(grid):
    return _mp_cases(grid, lambda ctx, C, rep: cyc_dual_form(rep.mp_code).code == blockwise_dual(rep.mp_code, ctx.f))


def mp_dual_cyc_general(grid):
    """The CYC dual form with arbitrary (not necessarily nested) constituents."""
    rng = random.Random(SEED + 17)
    def cases():
        for ctx in mp_contexts(grid):
            codes = list(divisor_codes_of(ctx.constituent_ambient))
            cyc = cyc_matrices(ctx.p, ctx.k).in_field(ctx.field)
            for _ in range(2):
                M = MatrixProductCode([rng.choice(codes) for _ in range(ctx.q)], cyc)
                yield cyc_dual_form(M).code == blockwise_dual(M, ctx.f)
    return _count(cases())


def mp_final(grid):
    return _mp_cases(grid, lambda ctx, C, rep: sigma_dual_identity(C, ctx, rep.decomposition))


def mp_cardinality(grid):
    """``|[C_1..C_a] A| == prod |C_i|`` whenever ``A`` has ``a`` independent columns."""
    rng = random.Random(SEED + 16)
    def cases():
        for ctx in mp_contexts(grid)[:60]:
            K = ctx.field
            codes = list(divisor_codes_of(ctx.constituent_ambient))
            A_cyc = cyc_matrices(ctx.p, ctx.k).in_field(K)
            for _ in range(3):
                Ds = [rng.choice(codes) for _ in range(ctx.q)]
                A_rand = [[rng.randrange(K.size) for _ in range(ctx.q + 1)] for _ in range(ctx.q)]
                for A in (A_cyc, A_rand):
                    if has_nonsingular_columns(K, A):
                        M = MatrixProductCode(Ds, A)
                        yield M.cardinality == M.product_of_sizes()
    return _count(cases())


def mp_cyc(grid):
    def cases():
        for p, k in ((2, 1), (3, 1), (2, 2), (2, 3), (3, 2)):
            yield all(cyc_matrices(p, k).checks().values())
    return _count(cases())


# -- cli ------------------------------------------------------------------------------


def cli_determinism(grid):
    from .cli import run

    jobs = [
        ["gdft", "--ring", "Z4", "--eval-ring", "Z16", "--f", "x^2-x", "--m", "3", "--roots", "1,12",
         "--g", "1+2x^3+x^4+3x^5"],
        ["mp-decompose", "--ring", "F3", "--f", "x^2+1", "--k", "1", "--g", "x^2+1", "--format", "machine"],
        ["idempotents", "--ring", "F3", "--f", "x^2-1", "--m", "3"],
    ]
    return _count(run(j) == run(j) for j in jobs)


PROPERTIES = {
    "ring.nonunits_form_ideal": ring_nonunits_ideal,
    "ring.inverse": ring_inverse,
    "ring.characteristic": ring_characteristic,
    "ring.lift_reduce_roundtrip": ring_lift_roundtrip,
    "poly.divmod_roundtrip": poly_divmod_roundtrip,
    "poly.factor_remultiply_irreducible": poly_factor_check,
    "poly.order_divides": poly_order_divides,
    "poly.eval_morphism": poly_eval_morphism,
    "hasse.linearity": hasse_linearity,
    "hasse.taylor": hasse_taylor_check,
    "hasse.product_rule": hasse_product_rule,
    "hasse.factorial": hasse_factorial,
    "ms.injective": ms_injective,
    "ms.homomorphism": ms_homomorphism,
    "ms.paths.shift": ms_paths_shift,
    "ms.paths.scale_literal": ms_paths_scale_literal,
    "ms.paths.scale_rescaled": ms_paths_scale_rescaled,
    "ms.well_defined": ms_well_defined,
    "ms.det_formula": ms_det_formula,
    "ms.det_unit": ms_det_unit,
    "ms.jordan": ms_jordan,
    "ms.classical_m1": ms_classical,
    "idem.identities": idem_identities,
    "idem.census": idem_census,
    "idem.complement_literal": idem_complement_literal,
    "idem.complement_ideal": idem_complement_ideal,
    "idem.crt": idem_crt,
    "codes.ideal_closure": codes_ideal_closure,
    "codes.dual_ann_orthogonal": codes_zero_dual,
    "codes.dual_involution": codes_involution,
    "codes.dual_cardinality": codes_cardinality,
    "codes.dual_ms": codes_dual_ms,
    "mp.phi_psi_morphisms": mp_morphisms,
    "mp.structure_literal": mp_structure,
    "mp.structure_twisted": mp_structure_twisted,
    "mp.distance_literal": mp_distance,
    "mp.distance_digits": mp_distance_digits,
    "mp.dual_inverse_transpose": mp_dual_inverse,
    "mp.dual_cyc": mp_dual_cyc,
    "mp.dual_cyc_general": mp_dual_cyc_general,
    "mp.sigma_dual": mp_final,
    "mp.cardinality": mp_cardinality,
    "mp.cyc_structure": mp_cyc,
    "cli.determinism": cli_determinism,
}


def run_suite(grid="small", only=None):
    """Yield ``(name, Outcome)`` for every property, or those whose name starts with an entry of ``only``."""
    if grid not in ("small", "full"):
        raise ValueError(f"grid must be 'small' or 'full', not {grid!r}")
    for name, fn in PROPERTIES.items():
        if only and not any(name.startswith(o) for o in only):
            continue
        yield name, fn(grid)
