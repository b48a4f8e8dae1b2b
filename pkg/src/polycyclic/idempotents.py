"""Primitive idempotents of ``R'[x]/<F>`` and the induced CRT splitting.

Roots are grouped by the factor of ``f`` they annihilate; each class ``I``
gives ``E_I = MS^-1(sum_{j in I} x^j)``, obtained by solving the Vandermonde
system rather than by any closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _upoly, batch
from .errors import (
    AmbiguousRoot,
    CtxMismatch,
    MultiplicityMismatch,
    NotInImage,
    NotPrimeCharacteristic,
    TooLarge,
    UnassignedRoot,
)
from .poly import Poly, QuotientCtx, poly_factor_field
from .rings import enum_cap, is_prime
from .transform import ms_indicator, ms_inverse


@dataclass(frozen=True)
class RootPartition:
    """Root indices grouped by factor; ``factor_of_class[i] = prod_{j in I_i} (x - alpha_j)`` over ``R'``."""

    ctx: object
    classes: tuple
    factor_of_class: tuple
    factors: tuple = ()

    @property
    def r(self):
        return len(self.classes)


@dataclass(frozen=True)
class IdempotentSet:
    partition: RootPartition
    E: tuple
    descended: tuple

    def __iter__(self):
        return iter(self.E)

    def __len__(self):
        return len(self.E)


def _lifted(ctx, g):
    if g.ctx == ctx.Rprime:
        return g
    if g.ctx == ctx.R:
        return g.lift(ctx.lift)
    raise CtxMismatch(f"factor over {g.ctx.spec} fits neither {ctx.R.spec} nor {ctx.Rprime.spec}")


def default_factors(ctx):
    """Monic irreducible factors of ``f`` over ``R`` when ``R`` is a field, else linear ones over ``R'``."""
    if ctx.R.is_field:
        fac = poly_factor_field(ctx.f)
        return tuple(g for g, _ in fac.factors)
    Rp = ctx.Rprime
    return tuple(Poly(Rp, [Rp.neg(a), Rp.one]) for a in ctx.roots)


def root_partition(ctx, factors=None):
    """Assign each root to the unique supplied factor that vanishes on it."""
    factors = tuple(factors) if factors is not None else default_factors(ctx)
    Rp = ctx.Rprime
    lifted = [_lifted(ctx, g) for g in factors]
    classes = [[] for _ in factors]
    for j, a in enumerate(ctx.roots):
        hits = [k for k, g in enumerate(lifted) if _upoly.evaluate(Rp, g.coeffs, a) == 0]
        if not hits:
            raise UnassignedRoot(f"root {Rp.format(a)} is a root of no supplied factor")
        if len(hits) > 1:
            raise AmbiguousRoot(f"root {Rp.format(a)} is a root of factors {hits}")
        classes[hits[0]].append(j)
    keep = [k for k, c in enumerate(classes) if c]
    lin = []
    for k in keep:
        acc = Poly.one(Rp)
        for j in classes[k]:
            acc = acc * Poly(Rp, [Rp.neg(ctx.roots[j]), Rp.one])
        lin.append(acc)
    return RootPartition(
        ctx,
        tuple(frozenset(classes[k]) for k in keep),
        tuple(lin),
        tuple(factors[k] for k in keep),
    )


def primitive_idempotents(partition):
    ctx = partition.ctx
    E, desc = [], []
    for cls in partition.classes:
        e = ms_indicator(ctx, cls)
        E.append(ms_inverse(e))
        try:
            desc.append(ms_inverse(e, descend=True))
        except NotInImage:
            desc.append(None)
    return IdempotentSet(partition, tuple(E), tuple(desc))


def _ambient(ctx):
    return QuotientCtx(ctx.Rprime, ctx.lift_poly(ctx.F))


def idempotent_identities(ids):
    """Exact checks ``E_i^2 = E_i``, ``E_i E_j = 0`` and ``sum E_i = 1`` modulo ``F``."""
    A = _ambient(ids.partition.ctx)
    Rp = A.base
    squares = all(A.mul(e, e) == e for e in ids.E)
    orth = all(A.mul(a, b).is_zero() for a, b in combinations(ids.E, 2))
    total = Poly(Rp, [])
    for e in ids.E:
        total = total + e
    return {"square": squares, "orthogonal": orth, "sum_one": A.reduce(total) == Poly.one(Rp)}


def _prime_char_k(ctx, k=None):
    p = ctx.Rprime.char
    if not is_prime(p):
        raise NotPrimeCharacteristic(f"{ctx.Rprime.spec} has characteristic {p}, not a prime")
    if k is None:
        k, q = 0, 1
        while q < ctx.m:
            q *= p
            k += 1
    if p**k != ctx.m:
        raise MultiplicityMismatch(f"m = {ctx.m} is not p^k = {p}^{k}")
    return p, k


def idempotent_complement_identity(partition, i, k):
    """Whether ``f_i^(p^k) == 1 - E_i`` holds literally in ``R'[x]/<F>``."""
    ctx = partition.ctx
    p, k = _prime_char_k(ctx, k)
    A = _ambient(ctx)
    lhs = A.reduce(partition.factor_of_class[i] ** (p**k))
    E = primitive_idempotents(partition).E[i]
    rhs = A.reduce(Poly.one(A.base) - E)
    return lhs == rhs


def idempotent_complement_ideal(partition, i, k):
    """Whether ``<f_i^(p^k)> == <1 - E_i>`` as ideals of ``R'[x]/<F>``."""
    from .codes import code_from_generator, same_code

    ctx = partition.ctx
    p, k = _prime_char_k(ctx, k)
    A = _ambient(ctx)
    E = primitive_idempotents(partition).E[i]
    a = code_from_generator(A, A.reduce(partition.factor_of_class[i] ** (p**k)))
    b = code_from_generator(A, A.reduce(Poly.one(A.base) - E))
    return same_code(a, b)


@dataclass(frozen=True)
class CrtDecomposition:
    ambient: QuotientCtx
    components: tuple
    idempotents: IdempotentSet

    def project(self, g):
        return tuple(Q.reduce(g) for Q in self.components)

    def combine(self, parts):
        A = self.ambient
        acc = Poly(A.base, [])
        for g, e in zip(parts, self.idempotents.E):
            acc = acc + A.mul(g, e)
        return A.reduce(acc)

    def mul(self, a, b):
        return tuple(Q.mul(x, y) for Q, x, y in zip(self.components, a, b))


def crt_decompose(ctx, partition):
    """Components ``R'[x]/<f_i^(p^k)>`` with projection and idempotent recombination."""
    if partition.ctx != ctx:
        raise CtxMismatch("partition belongs to another transform context")
    p, k = _prime_char_k(ctx)
    comps = tuple(QuotientCtx(ctx.Rprime, fi ** (p**k)) for fi in partition.factor_of_class)
    return CrtDecomposition(_ambient(ctx), comps, primitive_idempotents(partition))


def idempotent_generated_code(partition, S):
    """``prod_{i in S} f_i^(p^k)`` reduced modulo ``F``."""
    ctx = partition.ctx
    p, k = _prime_char_k(ctx)
    A = _ambient(ctx)
    g = Poly.one(A.base)
    for i in S:
        g = g * partition.factor_of_class[i] ** (p**k)
    return A.reduce(g)


def idempotent_generated_check(partition, S):
    """Whether the product generator and ``sum_{j not in S} E_j`` generate the same ideal."""
    from .codes import code_from_generator, same_code

    ctx = partition.ctx
    A = _ambient(ctx)
    g = idempotent_generated_code(partition, S)
    E = primitive_idempotents(partition).E
    e = Poly(A.base, [])
    for j in range(partition.r):
        if j not in S:
            e = e + E[j]
    return same_code(code_from_generator(A, g), code_from_generator(A, A.reduce(e)))


def split_partition(ctx):
    """Singleton classes: the partition by the linear factors of ``f`` over ``R'``."""
    Rp = ctx.Rprime
    return root_partition(ctx, [Poly(Rp, [Rp.neg(a), Rp.one]) for a in ctx.roots])


def idempotent_census(partition, over="Rprime"):
    """Every idempotent of ``R'_F`` (or of ``R_F``) by exhaustive squaring, next to the predicted sums.

    Over ``R'`` the prediction uses the singleton classes (``f`` splits there);
    over ``R`` it uses the given classes, whose idempotents must descend.
    Returns ``(found, predicted)`` as sets of coefficient tuples of length ``N``.
    """
    ctx = partition.ctx
    if over == "Rprime":
        A = _ambient(ctx)
        part = split_partition(ctx)
        E = primitive_idempotents(part).E
    elif over == "R":
        A = QuotientCtx(ctx.R, ctx.F)
        part = partition
        E = primitive_idempotents(part).descended
        if any(e is None for e in E):
            raise NotInImage("some idempotent does not descend to the base ring")
    else:
        raise ValueError(f"over must be 'Rprime' or 'R', not {over!r}")
    R, N = A.base, A.N
    if A.size > min(enum_cap(), 2**16):
        raise TooLarge(f"|R_F| = {A.size} is beyond the census limit")
    X = batch.all_vectors(R, N)
    sq = batch.mulmod(R, X, X, list(A.modulus.coeffs))
    found = {tuple(int(v) for v in row) for row in X[np.all(sq == X, axis=1)]}
    predicted = set()
    for size in range(part.r + 1):
        for S in combinations(range(part.r), size):
            acc = Poly(R, [])
            for i in S:
                acc = acc + E[i]
            predicted.add(tuple(A.reduce(acc).padded(N)))
    return found, predicted
