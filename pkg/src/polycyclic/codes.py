"""Polycyclic codes: ideals of ``R[x]/<F>``.

A code is stored through its generators; the ``R``-span of ``x^i g_j mod F``
is the code itself.  Over a field the span is kept as a reduced echelon
basis (a canonical form, so equality needs no enumeration); over other
rings codes are compared by their enumerated word sets.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations

import numpy as np

from . import _upoly, batch, linalg
from .errors import CtxMismatch, NonUnitConstantTerm, ParseError, TooLarge, ZeroCode
from .poly import Poly, QuotientCtx
from .rings import RingElem, enum_cap, ring_make
from .transform import ms_forward, ms_star_mul

ENUM_DISTANCE_LIMIT = 2**16


class PolycyclicCode:
    """The ideal of ``ambient`` generated by ``generators``."""

    def __init__(self, ambient, generators):
        self.ambient = ambient
        R = ambient.base
        gens = []
        for g in generators:
            if g.ctx != R:
                raise CtxMismatch(f"generator over {g.ctx.spec}, ambient over {R.spec}")
            gens.append(ambient.reduce(g))
        self.generators = tuple(gens)

    # -- spans ----------------------------------------------------------------
    @cached_property
    def module_rows(self):
        """Rows ``x^i g_j mod F``; their ``R``-span is the code."""
        A, N = self.ambient, self.ambient.N
        rows = []
        for g in self.generators:
            cur = g
            for _ in range(N):
                if cur.is_zero():
                    break
                rows.append(cur.padded(N))
                cur = A.reduce(cur.shift(1))
        return rows

    @cached_property
    def basis(self):
        """Reduced echelon basis (fields only)."""
        R = self.ambient.base
        if not R.is_field:
            raise TypeError(f"{R.spec} is not a field; no echelon basis")
        return tuple(tuple(r) for r in linalg.rref(R, self.module_rows)[0])

    @property
    def dimension(self):
        return len(self.basis)

    @cached_property
    def words(self):
        """All codewords as an ``(|C|, N)`` index array, sorted by key."""
        R, N = self.ambient.base, self.ambient.N
        if R.is_field:
            k = self.dimension
            if R.size**k > enum_cap():
                raise TooLarge(f"code has {R.size}^{k} words, cap is {enum_cap()}")
            if k == 0:
                return np.zeros((1, N), dtype=np.int16)
            msgs = batch.all_vectors(R, k)
            W = batch.combos(R, msgs, np.array(self.basis))
        else:
            W = batch.span(R, self.module_rows, N)
        order = np.argsort(batch.keys(W, R.size), kind="stable")
        return W[order]

    @cached_property
    def word_keys(self):
        return frozenset(batch.keys(self.words, self.ambient.base.size).tolist())

    @property
    def cardinality(self):
        R = self.ambient.base
        if R.is_field:
            return R.size**self.dimension
        return len(self.words)

    def is_zero(self):
        return not self.module_rows

    def contains(self, g):
        R, N = self.ambient.base, self.ambient.N
        v = self.ambient.reduce(g).padded(N) if isinstance(g, Poly) else list(g)
        if R.is_field:
            return linalg.rank(R, list(self.basis) + [v]) == self.dimension
        return int(batch.keys(np.array([v]), R.size)[0]) in self.word_keys

    @cached_property
    def generator(self):
        """Monic ``gcd(g_1, .., g_s, F)`` over a field (the canonical generator)."""
        R = self.ambient.base
        if not R.is_field:
            raise TypeError(f"{R.spec} is not a field")
        acc = list(self.ambient.modulus.coeffs)
        for g in self.generators:
            acc = _upoly.gcd(R, acc, list(g.coeffs))
        return Poly(R, _upoly.monic(R, acc))

    def key(self):
        R = self.ambient.base
        return self.basis if R.is_field else self.word_keys

    def __eq__(self, other):
        return isinstance(other, PolycyclicCode) and same_code(self, other)

    __hash__ = None

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"PolycyclicCode(<{gens}> in {self.ambient})"


def same_code(a, b):
    if a.ambient != b.ambient:
        return False
    if a.ambient.base.is_field:
        return a.basis == b.basis
    return a.word_keys == b.word_keys


def code_from_generator(ambient, g):
    """``<g>``; over a field the stored generator is canonicalised to a divisor of ``F``."""
    C = PolycyclicCode(ambient, (g,))
    if ambient.base.is_field:
        C = PolycyclicCode(ambient, (C.generator,))
    return C


def code_from_generators(ambient, gens):
    return PolycyclicCode(ambient, tuple(gens))


def whole_code(ambient):
    return PolycyclicCode(ambient, (Poly.one(ambient.base),))


def zero_code(ambient):
    return PolycyclicCode(ambient, ())


def code_enumerate(C):
    R = C.ambient.base
    return [Poly(R, [int(v) for v in row]) for row in C.words]


def is_ideal(C):
    """Closure under multiplication by ``x`` (checked on spanning rows)."""
    A = C.ambient
    x = Poly.x(A.base)
    return all(C.contains(A.mul(x, Poly(A.base, r))) for r in C.module_rows)


# -- the zero-coefficient form and duals -------------------------------------------


def inner_product_zero(g1, g2, ambient):
    """``<g1, g2>_0``: constant term of ``g1 g2 mod F``."""
    return RingElem(ambient.base, ambient.mul(g1, g2).coeff(0))


def _require_unit_f0(ambient):
    F0 = ambient.modulus.coeff(0)
    if not ambient.base.is_unit(F0):
        raise NonUnitConstantTerm(f"constant term of {ambient.modulus} is not a unit")


def multiplication_matrix(C):
    """Block matrix whose row ``i`` holds ``x^i g_j mod F`` for every generator ``g_j``."""
    A, N = C.ambient, C.ambient.N
    blocks = []
    for g in C.generators:
        rows, cur = [], g
        for _ in range(N):
            rows.append(cur.padded(N))
            cur = A.reduce(cur.shift(1))
        blocks.append(rows)
    if not blocks:
        return [[] for _ in range(N)]
    return [sum((b[i] for b in blocks), []) for i in range(N)]


def annihilator(C):
    """``Ann(C)`` by an exact left kernel of the multiplication map."""
    A, R = C.ambient, C.ambient.base
    if C.is_zero():
        return whole_code(A)
    ker = linalg.left_kernel_chain(R, multiplication_matrix(C))
    gens = [Poly(R, v) for v in ker]
    if R.is_field and gens:
        return code_from_generator(A, code_from_generators(A, gens).generator)
    return code_from_generators(A, gens)


def dual_zero(C):
    """``C^perp_0``, obtained as the annihilator (requires a unit constant term of ``F``)."""
    _require_unit_f0(C.ambient)
    return annihilator(C)


def _ambient_vectors(A):
    if A.size > enum_cap():
        raise TooLarge(f"|R_F| = {A.size} exceeds cap {enum_cap()}")
    return batch.all_vectors(A.base, A.N)


def annihilator_bruteforce(C):
    """Keys of every ``h`` in ``R_F`` with ``h g == 0`` for each generator ``g``."""
    A, R = C.ambient, C.ambient.base
    X = _ambient_vectors(A)
    mask = np.ones(len(X), dtype=bool)
    Fc = list(A.modulus.coeffs)
    for g in C.generators:
        prod = batch.mulmod(R, X, g.padded(A.N), Fc)
        mask &= ~prod.any(axis=1)
    return frozenset(batch.keys(X[mask], R.size).tolist())


def zero_gram(A):
    """``G[a][b]`` = constant term of ``x^(a+b) mod F``, so ``<h, c>_0 = h . G c``."""
    R, N = A.base, A.N
    return [[A.reduce(Poly.monomial(R, a + b)).coeff(0) for b in range(N)] for a in range(N)]


def orthogonal_bruteforce(C, against_all_words=None):
    """Keys of every ``h`` in ``R_F`` with ``<h, c>_0 == 0`` for the codewords ``c``.

    Pairs with every codeword when that is affordable, else with the spanning
    rows (equivalent by bilinearity).  Each pairing is evaluated through the
    Gram matrix of ``<., .>_0`` on monomials.
    """
    A, R = C.ambient, C.ambient.base
    X = _ambient_vectors(A)
    if against_all_words is None:
        against_all_words = len(X) * C.cardinality <= 2**26
    partners = C.words if against_all_words else np.array(C.module_rows or [[0] * A.N])
    partners = partners[partners.any(axis=1)]
    mask = np.ones(len(X), dtype=bool)
    if len(partners):
        G = np.array(zero_gram(A), dtype=np.int16)
        Gc = batch.combos(R, partners, G.T)
        step = max(1, 2**22 // len(X))
        for s in range(0, len(Gc), step):
            vals = batch.combos(R, X, Gc[s:s + step].T)
            mask &= ~vals.any(axis=1)
    return frozenset(batch.keys(X[mask], R.size).tolist())


def _coords_over(Rp, R, a):
    if Rp == R:
        return [a]
    out = []
    for c in Rp.decode(a):
        out.extend(_coords_over(Rp.base, R, c))
    return out


def dual_ms(C, ctx):
    """``{g : MS(g) * MS(c) == 0 for all c in C}``.

    With a ring-homomorphic lift this is solved as a linear system over ``R``;
    under an integer lift it is found by enumerating ``R_F``.
    """
    A, R = C.ambient, C.ambient.base
    if ctx.R != R or ctx.F != A.modulus:
        raise CtxMismatch(f"transform {ctx} does not match ambient {A}")
    if C.is_zero():
        return whole_code(A)
    N = A.N
    if ctx.lift.rule == "IntegerLift":
        return _dual_ms_enumerated(C, ctx)
    images = [ms_forward(Poly(R, r), ctx) for r in C.module_rows]
    M = []
    for a in range(N):
        ma = ms_forward(Poly.monomial(R, a), ctx)
        row = []
        for im in images:
            t = ms_star_mul(ma, im).table
            for comp in t:
                for v in comp:
                    row.extend(_coords_over(ctx.Rprime, R, v))
        M.append(row)
    ker = linalg.left_kernel_chain(R, M)
    gens = [Poly(R, v) for v in ker]
    if R.is_field and gens:
        return code_from_generator(A, code_from_generators(A, gens).generator)
    return code_from_generators(A, gens)


def _dual_ms_enumerated(C, ctx):
    A, R = C.ambient, C.ambient.base
    words = [Poly(R, [int(v) for v in w]) for w in C.words]
    images = [ms_forward(w, ctx) for w in words if not w.is_zero()]
    keep = []
    for g in A.elements():
        mg = ms_forward(g, ctx)
        if all(ms_star_mul(mg, im).is_zero() for im in images):
            keep.append(g)
    return code_from_generators(A, keep)


# -- weights ------------------------------------------------------------------------


class LinearCode:
    """A subspace of ``K^length`` held as a reduced echelon basis."""

    def __init__(self, field, length, rows):
        if not field.is_field:
            raise TypeError(f"{field.spec} is not a field")
        self.field = field
        self.length = length
        rows = [list(r) for r in rows if any(r)]
        self.basis = tuple(tuple(r) for r in linalg.rref(field, rows)[0]) if rows else ()

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def cardinality(self):
        return self.field.size**self.dimension

    def is_zero(self):
        return not self.basis

    @cached_property
    def words(self):
        K, k = self.field, self.dimension
        if K.size**k > enum_cap():
            raise TooLarge(f"code has {K.size}^{k} words, cap is {enum_cap()}")
        if k == 0:
            return np.zeros((1, self.length), dtype=np.int16)
        return batch.combos(K, batch.all_vectors(K, k), np.array(self.basis))

    def contains(self, v):
        return linalg.rank(self.field, list(self.basis) + [list(v)]) == self.dimension

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.length == other.length
            and self.basis == other.basis
        )

    __hash__ = None

    def __repr__(self):
        return f"LinearCode([{self.length}, {self.dimension}] over {self.field.spec})"


def as_linear(C):
    if isinstance(C, LinearCode):
        return C
    return LinearCode(C.ambient.base, C.ambient.N, C.basis)


def min_distance(C):
    """Minimum Hamming weight of a nonzero codeword.

    Small codes are enumerated (early exit at weight 1); larger linear codes
    are searched by support: the least ``w`` for which some ``w`` coordinates
    carry a nonzero codeword, i.e. deleting them drops the rank.
    """
    if C.is_zero():
        raise ZeroCode("the zero code has no minimum distance")
    field_case = isinstance(C, LinearCode) or C.ambient.base.is_field
    if field_case:
        L = as_linear(C)
        if any(sum(1 for v in r if v) == 1 for r in L.basis):
            return 1
        if L.cardinality > ENUM_DISTANCE_LIMIT:
            return _distance_by_support(L)
        W = L.words
    else:
        W = C.words
    w = batch.weights(W)
    return int(w[w > 0].min())


def _distance_by_support(L):
    K, N, k = L.field, L.length, L.dimension
    G = [list(r) for r in L.basis]
    for w in range(1, N - k + 2):
        for S in combinations(range(N), w):
            rest = [j for j in range(N) if j not in S]
            sub = [[row[j] for j in rest] for row in G]
            if linalg.rank(K, sub) < k:
                return w
    raise AssertionError("Singleton bound violated")  # pragma: no cover


def nondegeneracy_check(ambient):
    """True iff no nonzero ``g`` is ``<,>_0``-orthogonal to every ``x^i``."""
    R = ambient.base
    X = _ambient_vectors(ambient)
    Fc = list(ambient.modulus.coeffs)
    mask = np.ones(len(X), dtype=bool)
    for i in range(ambient.N):
        prod = batch.mulmod(R, X, Poly.monomial(R, i).padded(ambient.N), Fc)
        mask &= prod[:, 0] == 0
    return int(mask.sum()) == 1


# -- text descriptions ----------------------------------------------------------------


def parse_code_description(text):
    """Code file: ring spec line, modulus line, one generator per further line (``#`` comments)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise ParseError("a code description needs a ring line and a modulus line")
    R = ring_make(lines[0])
    F = Poly.parse(R, lines[1])
    A = QuotientCtx(R, F)
    return code_from_generators(A, [Poly.parse(R, ln) for ln in lines[2:]])
