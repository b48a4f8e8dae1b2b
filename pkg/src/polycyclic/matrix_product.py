"""Repeated-root polycyclic codes over fields as matrix-product codes.

Ambient ``K[x]/<f(x^q)>`` with ``q = p^k`` and ``f`` simple-root of order
``e`` prime to ``p``.  Elements pass through

* ``phi``: ``sum_i a_i(x) x^(i q)  ->  sum_i a_i(x) y^i`` in ``S = K[x,y]/<x^q - y, f(y)>``,
* ``psi``: ``x -> y^e' x`` into ``T = (K[x]/<x^q - 1>)[y]/<f(y)>``,

and ``mu = psi . phi``.  Bivariate elements are ``n x q`` index matrices
(row ``a`` = coefficient of ``y^a``, column ``t`` = power of ``x``); flattened
vectors use index ``a*q + t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import comb, gcd, prod

from . import _upoly, linalg
from .codes import LinearCode, as_linear, code_from_generator, dual_zero, min_distance
from .errors import (
    DegreeTooLarge,
    DimensionMismatch,
    NonUnitConstant,
    NotAField,
    NotAnIdeal,
    SingularA,
    SingularMatrix,
    TooLarge,
    ZeroCode,
)
from .poly import Poly, QuotientCtx, poly_factor_field, poly_order, poly_squarefree_check

CYC_LIMIT = 64


# -- context ------------------------------------------------------------------------


@dataclass(frozen=True)
class MpContext:
    field: object
    f: Poly
    k: int
    e: int = field(init=False)
    e_prime: int = field(init=False)

    def __post_init__(self):
        K, f = self.field, self.f
        if not K.is_field:
            raise NotAField(f"{K.spec} is not a field")
        if f.coeff(0) == 0:
            raise NonUnitConstant(f"{f} has zero constant term")
        if not f.is_monic():
            raise ValueError(f"{f} is not monic")
        if not poly_squarefree_check(f):
            raise ValueError(f"{f} has repeated roots")
        e = poly_order(f)
        if gcd(e, K.char) != 1:
            raise ValueError(f"order {e} of {f} is not prime to p = {K.char}")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "e_prime", pow(self.q, -1, e) if e > 1 else 0)

    @property
    def p(self):
        return self.field.char

    @property
    def q(self):
        return self.p**self.k

    @property
    def n(self):
        return self.f.degree

    @property
    def N(self):
        return self.n * self.q

    @cached_property
    def ambient(self):
        """``K[x]/<f(x^q)>``."""
        K = self.field
        return QuotientCtx(K, self.f.compose(Poly.monomial(K, self.q)))

    @cached_property
    def constituent_ambient(self):
        """``K[y]/<f(y)>``, where the constituent codes live."""
        return QuotientCtx(self.field, self.f)

    def __str__(self):
        return f"MP[{self.field.spec}; f={self.f}; q={self.q}]"


def mp_context(field, f, k):
    return MpContext(field, f, k)


# -- bivariate arithmetic -----------------------------------------------------------


def _zero_biv(ctx):
    return [[0] * ctx.q for _ in range(ctx.n)]


def _ypow_mod_f(ctx, s):
    """Coefficients of ``y^s mod f(y)`` (length ``n``)."""
    K = ctx.field
    r = _upoly.mod(K, [0] * s + [K.one], list(ctx.f.coeffs))
    return r + [0] * (ctx.n - len(r))


def _biv_add_term(ctx, out, t, s, c):
    """``out += c * x^t * y^s`` with ``0 <= t < q``, reducing ``y`` modulo ``f``."""
    if not c:
        return
    K = ctx.field
    for a, v in enumerate(_ypow_mod_f(ctx, s)):
        if v:
            out[a][t] = K.add(out[a][t], K.mul(c, v))


def _biv_mul(ctx, A, B, x_q_is_y):
    """Product in ``S`` (``x^q = y``) or ``T`` (``x^q = 1``)."""
    K, q = ctx.field, ctx.q
    out = _zero_biv(ctx)
    for a1, row1 in enumerate(A):
        for t1, c1 in enumerate(row1):
            if not c1:
                continue
            for a2, row2 in enumerate(B):
                for t2, c2 in enumerate(row2):
                    if not c2:
                        continue
                    t, s = t1 + t2, a1 + a2
                    if t >= q:
                        t -= q
                        s += 1 if x_q_is_y else 0
                    _biv_add_term(ctx, out, t, s, K.mul(c1, c2))
    return out


def s_mul(ctx, A, B):
    return _biv_mul(ctx, A, B, True)


def t_mul(ctx, A, B):
    return _biv_mul(ctx, A, B, False)


def flatten(B):
    return [c for row in B for c in row]


def unflatten(ctx, v):
    return [list(v[a * ctx.q:(a + 1) * ctx.q]) for a in range(ctx.n)]


# -- the isomorphisms ---------------------------------------------------------------


def phi(a, ctx):
    """``(a_0(x), .., a_{n-1}(x))`` with ``a = sum_i a_i(x) x^(i q)``."""
    if a.degree >= ctx.N:
        raise DegreeTooLarge(f"deg {a.degree} >= N = {ctx.N}; reduce modulo f(x^q) first")
    v = a.padded(ctx.N)
    q = ctx.q
    return tuple(Poly(ctx.field, v[i * q:(i + 1) * q]) for i in range(ctx.n))


def phi_inv(parts, ctx):
    v = []
    for p_ in parts:
        if p_.degree >= ctx.q:
            raise DegreeTooLarge(f"component {p_} has degree >= q = {ctx.q}")
        v.extend(p_.padded(ctx.q))
    return Poly(ctx.field, v)


def _as_matrix(parts, ctx):
    return [list(p_.padded(ctx.q)) for p_ in parts]


def _as_parts(M, ctx):
    return tuple(Poly(ctx.field, row) for row in M)


def psi_matrix(M, ctx):
    """``a(x, y) -> a(y^e' x, y)`` on ``n x q`` matrices."""
    out = _zero_biv(ctx)
    for a, row in enumerate(M):
        for t, c in enumerate(row):
            _biv_add_term(ctx, out, t, a + t * ctx.e_prime, c)
    return out


def psi(parts, ctx):
    return _as_parts(psi_matrix(_as_matrix(parts, ctx), ctx), ctx)


def psi_inv_matrix(M, ctx):
    """Inverse of ``psi``: ``x -> y^(-e') x`` (``y`` has order dividing ``e``)."""
    out = _zero_biv(ctx)
    back = (-ctx.e_prime) % ctx.e if ctx.e > 1 else 0
    for a, row in enumerate(M):
        for t, c in enumerate(row):
            _biv_add_term(ctx, out, t, a + t * back, c)
    return out


def mu_vector(v, ctx):
    """``mu`` on a flattened coefficient vector of length ``N``."""
    return flatten(psi_matrix(unflatten(ctx, v), ctx))


def mu_matrix(ctx):
    """``N x N`` matrix of ``mu`` (rows: images of ``x^i``, flattened in ``T``)."""
    K = ctx.field
    rows = []
    for i in range(ctx.N):
        e = [0] * ctx.N
        e[i] = K.one
        rows.append(mu_vector(e, ctx))
    return rows


@dataclass
class TSet:
    """A subspace of ``T`` (flattened coordinates)."""

    ctx: MpContext
    code: LinearCode

    @property
    def basis(self):
        return self.code.basis

    @property
    def cardinality(self):
        return self.code.cardinality


def mu(C, ctx):
    """``mu(C)`` as a subspace of ``T``."""
    K = ctx.field
    M = mu_matrix(ctx)
    rows = linalg.matmul(K, [list(r) for r in C.basis], M) if C.basis else []
    return TSet(ctx, LinearCode(K, ctx.N, rows))


def t_is_ideal(S):
    """Closure of a subspace of ``T`` under multiplication by ``x`` and ``y``."""
    ctx = S.ctx
    K = ctx.field
    X = _zero_biv(ctx)
    Y = _zero_biv(ctx)
    if ctx.q > 1:
        X[0][1] = K.one
    else:
        X[0][0] = K.one  # x = 1 in T when q = 1
    _biv_add_term(ctx, Y, 0, 1, K.one)
    for b in S.basis:
        B = unflatten(ctx, b)
        for g in (X, Y):
            if not S.code.contains(flatten(t_mul(ctx, B, g))):
                return False
    return True


# -- (x-1)-adic decomposition ---------------------------------------------------------


def adic_matrix(ctx):
    """Change of coordinates ``x^t y^a -> sum_j C(t, j) (x-1)^j y^a``; new index ``j*n + a``."""
    K, n, q = ctx.field, ctx.n, ctx.q
    M = [[0] * ctx.N for _ in range(ctx.N)]
    for a in range(n):
        for t in range(q):
            for j in range(t + 1):
                M[a * q + t][j * n + a] = K.from_int(comb(t, j))
    return M


@dataclass(frozen=True)
class XMinusOneAdic:
    ctx: MpContext
    components: tuple
    generators: tuple

    def chain_holds(self):
        """``h_{q-1} | ... | h_0 | f`` and ``C_0 <= ... <= C_{q-1}``."""
        K = self.ctx.field
        hs = list(self.generators) + []
        chain = [self.ctx.f] + hs
        for big, small in zip(chain, chain[1:]):
            if _upoly.mod(K, list(big.coeffs), list(small.coeffs)):
                return False
        nests = all(
            all(b.contains(r) for r in a.basis)
            for a, b in zip(self.components, self.components[1:])
        )
        return nests


def x_adic_decompose(S, ctx):
    """Constituents ``C_i``: the ``(x-1)^i`` parts of the elements of ``S`` lying in ``(x-1)^i T``."""
    if not t_is_ideal(S):
        raise NotAnIdeal("the set is not an ideal of T")
    K, n, q = ctx.field, ctx.n, ctx.q
    rows = linalg.matmul(K, [list(b) for b in S.basis], adic_matrix(ctx)) if S.basis else []
    E, pivots = linalg.rref(K, rows) if rows else ([], [])
    A = ctx.constituent_ambient
    comps, gens = [], []
    for i in range(q):
        block = [row[i * n:(i + 1) * n] for row, pc in zip(E, pivots) if pc // n == i]
        L = LinearCode(K, n, block)
        if L.is_zero():
            g = ctx.f
        else:
            g = _generator_of_rows(K, [Poly(K, r) for r in block], ctx.f)
        Ci = code_from_generator(A, g)
        if as_linear(Ci) != L:
            raise NotAnIdeal(f"constituent {i} is not an ideal of K[y]/<f>")
        comps.append(Ci)
        gens.append(Ci.generator)
    return XMinusOneAdic(ctx, tuple(comps), tuple(gens))


def _generator_of_rows(K, polys, f):
    acc = list(f.coeffs)
    for p_ in polys:
        acc = _upoly.gcd(K, acc, list(p_.coeffs))
    return Poly(K, _upoly.monic(K, acc))


def adic_reconstruct(decomp):
    """``sum_i (x-1)^i C_i`` as a subspace of ``T``."""
    ctx = decomp.ctx
    K, n = ctx.field, ctx.n
    rows = []
    for i, Ci in enumerate(decomp.components):
        for b in Ci.basis:
            v = [0] * ctx.N
            v[i * n:(i + 1) * n] = list(b)
            rows.append(v)
    Minv = linalg.inverse(K, adic_matrix(ctx))
    back = linalg.matmul(K, rows, Minv) if rows else []
    return TSet(ctx, LinearCode(K, ctx.N, back))


# -- factor bookkeeping for divisor-generated codes ------------------------------------


def _frobenius_root(K, c, k):
    """``c^(p^-k)``: the unique ``d`` with ``d^(p^k) = c``."""
    p = K.char
    s = round(__import__("math").log(K.size, p))
    return K.pow(c, p ** ((s - k % s) % s)) if s > 1 else c


@dataclass(frozen=True)
class FactorData:
    f_factors: tuple
    g_factors: tuple


def factor_data(ctx):
    """Irreducible ``f_j`` of ``f`` and ``g_j`` with ``g_j(x)^q = f_j(x^q)``."""
    K = ctx.field
    fs = tuple(g for g, _ in poly_factor_field(ctx.f).factors)
    gs = tuple(Poly(K, [_frobenius_root(K, c, ctx.k) for c in fj.coeffs]) for fj in fs)
    return FactorData(fs, gs)


def divisor_codes(ctx):
    """All ``(exponents, <prod g_j^{i_j}>)`` with ``0 <= i_j <= q``."""
    fd = factor_data(ctx)
    A = ctx.ambient
    for exps in product(*[range(ctx.q + 1) for _ in fd.g_factors]):
        G = Poly.one(ctx.field)
        for g, i in zip(fd.g_factors, exps):
            G = G * g**i
        yield exps, code_from_generator(A, G)


def exponents_of(C, ctx):
    """Multiplicities ``i_j`` of each ``g_j`` in the canonical generator of ``C``."""
    K = ctx.field
    G = list(C.generator.coeffs)
    out = []
    for g in factor_data(ctx).g_factors:
        i = 0
        while len(G) > 1:
            qt, r = _upoly.divmod_(K, G, list(g.coeffs))
            if r:
                break
            G, i = qt, i + 1
        out.append(i)
    return tuple(out)


def factor_constituents(C, ctx, literal=True):
    """Constituents from the factor exponents: ``C_i = <prod_{j: i_j > i} h_j(y)>``.

    ``literal`` uses ``h_j = g_j`` as printed; otherwise ``h_j = f_j``, the
    irreducible factors of ``f`` itself (they differ when ``K`` is not prime).
    """
    fd = factor_data(ctx)
    exps = exponents_of(C, ctx)
    hs = fd.g_factors if literal else fd.f_factors
    A = ctx.constituent_ambient
    comps = []
    for i in range(ctx.q):
        g = Poly.one(ctx.field)
        for h, ij in zip(hs, exps):
            if ij > i:
                g = g * h
        comps.append(code_from_generator(A, g))
    return XMinusOneAdic(ctx, tuple(comps), tuple(c.generator for c in comps))


# -- sigma and the CYC matrices ------------------------------------------------------


def sigma_perm(ctx_or_n, q=None):
    """``sigma(a q + j) = j n + a``."""
    if q is None:
        n, q = ctx_or_n.n, ctx_or_n.q
    else:
        n = ctx_or_n
    out = []
    for i in range(n * q):
        a, j = divmod(i, q)
        out.append(j * n + a)
    return out


def apply_perm(perm, v):
    out = [0] * len(v)
    for i, c in enumerate(v):
        out[perm[i]] = c
    return out


def sigma_code(C, ctx):
    perm = sigma_perm(ctx)
    return LinearCode(ctx.field, ctx.N, [apply_perm(perm, r) for r in C.basis])


def _int_matmul(A, B, p):
    return [[sum(a * b for a, b in zip(row, col)) % p for col in zip(*B)] for row in A]


def _int_kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def _int_det_mod(A, p):
    from .rings import ring_make

    F = ring_make(f"Z{p}")
    return linalg.det(F, [[F.from_int(v) for v in row] for row in A])


@dataclass(frozen=True)
class CycMatrices:
    p: int
    k: int
    J: tuple
    P: tuple
    Q: tuple
    CYC: tuple

    def in_field(self, K, name="CYC"):
        return [[K.from_int(v) for v in row] for row in getattr(self, name)]

    def checks(self):
        """Structural facts, each as a boolean."""
        p, k = self.p, self.k
        size = p**k
        ident = [[int(i == j) for j in range(size)] for i in range(size)]
        P, Q, C = (list(map(list, M)) for M in (self.P, self.Q, self.CYC))
        tensor = [[1]]
        base = cyc_matrices(p, 1).CYC if k else ((1,),)
        for _ in range(k):
            tensor = [[v % p for v in row] for row in _int_kron(tensor, base)]
        return {
            "PQ_identity": _int_matmul(P, Q, p) == ident,
            "tensor_power": [list(r) for r in tensor] == C,
            "upper_unitriangular": all(
                C[i][j] == (1 if i == j else 0) for i in range(size) for j in range(i + 1)
            ),
            "det_one": _int_det_mod(C, p) == 1,
        }


def cyc_matrices(p, k):
    """``J``, ``P``, ``Q`` and ``CYC = J Q J`` (entries mod ``p``), built from 1-based formulas."""
    from .rings import is_prime

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    size = p**k
    if size > CYC_LIMIT:
        raise TooLarge(f"p^k = {size} exceeds {CYC_LIMIT}")
    rng = range(1, size + 1)
    J = [[1 if j == size - i + 1 else 0 for j in rng] for i in rng]
    P = [[comb(i - 1, j - 1) % p for j in rng] for i in rng]
    Q = [[((-1) ** (i + j) * comb(i - 1, j - 1)) % p for j in rng] for i in rng]
    CYC = _int_matmul(_int_matmul(J, Q, p), J, p)
    t = lambda M: tuple(tuple(r) for r in M)  # noqa: E731
    return CycMatrices(p, k, t(J), t(P), t(Q), t(CYC))


# -- matrix-product codes -------------------------------------------------------------


class MatrixProductCode:
    """``[C_1, .., C_alpha] . A``: block ``t`` of a word is ``sum_s A[s][t] c_s``."""

    def __init__(self, constituents, A):
        if not constituents:
            raise DimensionMismatch("need at least one constituent")
        lens = {as_linear(c).length for c in constituents}
        if len(lens) != 1:
            raise DimensionMismatch(f"constituent lengths differ: {sorted(lens)}")
        if len(A) != len(constituents) or any(len(r) != len(A[0]) for r in A):
            raise DimensionMismatch(
                f"A is {len(A)}x{len(A[0]) if A else 0}, {len(constituents)} constituents"
            )
        self.constituents = tuple(constituents)
        self.A = [list(r) for r in A]
        self.field = as_linear(constituents[0]).field
        self.n = lens.pop()

    @property
    def alpha(self):
        return len(self.A)

    @property
    def beta(self):
        return len(self.A[0])

    @cached_property
    def code(self):
        K, n = self.field, self.n
        rows = []
        for s, C in enumerate(self.constituents):
            for r in as_linear(C).basis:
                v = []
                for t in range(self.beta):
                    a = self.A[s][t]
                    v.extend(K.mul(a, c) for c in r)
                rows.append(v)
        return LinearCode(K, n * self.beta, rows)

    def word(self, cs):
        """``[c_1, .., c_alpha] . A`` for explicit constituent vectors."""
        K = self.field
        out = []
        for t in range(self.beta):
            block = [0] * self.n
            for s, c in enumerate(cs):
                a = self.A[s][t]
                block = [K.add(b, K.mul(a, v)) for b, v in zip(block, c)]
            out.extend(block)
        return out

    @property
    def cardinality(self):
        return self.code.cardinality

    def product_of_sizes(self):
        return prod(as_linear(C).cardinality for C in self.constituents)


def matrix_product_code(constituents, A):
    return MatrixProductCode(constituents, A)


def has_nonsingular_columns(K, A):
    """Whether some ``alpha`` columns of ``A`` form a non-singular matrix."""
    from itertools import combinations

    alpha, beta = len(A), len(A[0])
    for cols in combinations(range(beta), alpha):
        sub = [[A[i][j] for j in cols] for i in range(alpha)]
        if linalg.rank(K, sub) == alpha:
            return True
    return False


# -- the structure theorem and its consequences -----------------------------------------


@dataclass
class StructureReport:
    ctx: MpContext
    decomposition: XMinusOneAdic
    mp_code: MatrixProductCode
    sigma_image: LinearCode

    @property
    def holds(self):
        return self.sigma_image == self.mp_code.code


def _require_unit_f0(ctx):
    if not ctx.field.is_unit(ctx.f.coeff(0)):
        raise NonUnitConstant(f"constant term of {ctx.f} is not a unit")


def theorem_t2_decompose(C, ctx, decomposition=None):
    """``[C_{q-1}, .., C_0] . CYC(p, k)`` next to ``sigma(C)``; ``.holds`` compares them as sets."""
    _require_unit_f0(ctx)
    dec = decomposition or x_adic_decompose(mu(C, ctx), ctx)
    cyc = cyc_matrices(ctx.p, ctx.k).in_field(ctx.field)
    M = MatrixProductCode(list(reversed(dec.components)), cyc)
    return StructureReport(ctx, dec, M, sigma_code(C, ctx))


def proof_form(C, ctx, decomposition=None):
    """``[C_0, .., C_{q-1}] . Q``, the intermediate presentation reached inside the argument."""
    dec = decomposition or x_adic_decompose(mu(C, ctx), ctx)
    Q = cyc_matrices(ctx.p, ctx.k).in_field(ctx.field, "Q")
    return MatrixProductCode(list(dec.components), Q)


def distance_bound(decomp):
    """``min_t (t+1) d(C_t)`` over the nonzero constituents."""
    vals = []
    for t, Ct in enumerate(decomp.components):
        if Ct.is_zero():
            continue
        vals.append((t + 1) * min_distance(Ct))
    if not vals:
        raise ZeroCode("all constituents are zero")
    return min(vals)


def digit_weight(t, p):
    """``prod (t_i + 1)`` over the base-``p`` digits of ``t``."""
    w = 1
    while t:
        t, d = divmod(t, p)
        w *= d + 1
    return w


def distance_bound_digits(decomp):
    """``min_t P_t d(C_t)`` with the digit weight ``P_t``; equals ``(t+1) d(C_t)`` when ``q = p``."""
    p = decomp.ctx.p
    vals = [digit_weight(t, p) * min_distance(Ct) for t, Ct in enumerate(decomp.components) if not Ct.is_zero()]
    if not vals:
        raise ZeroCode("all constituents are zero")
    return min(vals)


def twist_blocks(ctx, L):
    """Multiply block ``t`` (a polynomial in ``y`` modulo ``f``) of each word by ``y^(-t e')``."""
    K, n = ctx.field, ctx.n
    back = (-ctx.e_prime) % ctx.e if ctx.e > 1 else 0
    A = ctx.constituent_ambient
    rows = []
    for r in L.basis:
        v = []
        for t in range(len(r) // n):
            blk = Poly(K, r[t * n:(t + 1) * n])
            v.extend(A.mul(blk, Poly.monomial(K, (t * back) % max(ctx.e, 1))).padded(n))
        rows.append(v)
    return LinearCode(K, L.length, rows)


def twisted_structure_holds(C, ctx, decomposition=None):
    """Whether ``sigma(C)`` equals ``[C_{q-1}, .., C_0] . CYC`` after the blockwise ``y^(-t e')`` twist."""
    rep = theorem_t2_decompose(C, ctx, decomposition)
    return twist_blocks(ctx, rep.mp_code.code) == rep.sigma_image


def blockwise_dual(M, f):
    """Dual of a length ``n*beta`` code for the blockwise form ``sum_t <u_t, v_t>_0`` (modulo ``f``)."""
    K, n = M.field, M.n
    A = QuotientCtx(K, f)
    gram = [[A.mul(Poly.monomial(K, a), Poly.monomial(K, b)).coeff(0) for b in range(n)] for a in range(n)]
    L = M.code
    beta = M.beta
    # h is orthogonal to c iff h . (G_block c^T) = 0 for every basis row c
    cols = []
    for c in L.basis:
        col = []
        for t in range(beta):
            blk = c[t * n:(t + 1) * n]
            for a in range(n):
                acc = 0
                for b in range(n):
                    if gram[a][b] and blk[b]:
                        acc = K.add(acc, K.mul(gram[a][b], blk[b]))
                col.append(acc)
        cols.append(col)
    if not cols:
        return LinearCode(K, n * beta, linalg.identity(K, n * beta))
    Mt = linalg.transpose(cols)
    return LinearCode(K, n * beta, linalg.left_kernel_field(K, Mt))


def mp_dual(M):
    """``[C_1^perp0, .., C_alpha^perp0] . (A^-1)^tr``."""
    K = M.field
    if M.alpha != M.beta:
        raise SingularA("A is not square")
    try:
        Ainv = linalg.inverse(K, M.A)
    except SingularMatrix:
        raise SingularA("A is singular") from None
    duals = [dual_zero(C) for C in M.constituents]
    return MatrixProductCode(duals, linalg.transpose(Ainv))


def cyc_dual_form(M):
    """``[D_0^perp0, .., D_{q-1}^perp0] . CYC`` for ``M = [D_{q-1}, .., D_0] . CYC``."""
    duals = [dual_zero(C) for C in reversed(M.constituents)]
    return MatrixProductCode(duals, M.A)


def sigma_dual_identity(C, ctx, decomposition=None):
    """Whether ``sigma(C^perp0) == [C_0^perp0, .., C_{q-1}^perp0] . CYC(p, k)``."""
    _require_unit_f0(ctx)
    dec = decomposition or x_adic_decompose(mu(C, ctx), ctx)
    cyc = cyc_matrices(ctx.p, ctx.k).in_field(ctx.field)
    rhs = MatrixProductCode([dual_zero(Ci) for Ci in dec.components], cyc)
    return sigma_code(dual_zero(C), ctx) == rhs.code


# -- the desk-scale grid ----------------------------------------------------------------


def grid_polys(K, max_deg):
    """Monic squarefree ``f`` with ``f(0) != 0`` and ``1 <= deg f <= max_deg``."""
    for d in range(1, max_deg + 1):
        for tail in product(range(K.size), repeat=d):
            if tail[0] == 0:
                continue
            f = Poly(K, list(tail) + [K.one])
            if poly_squarefree_check(f):
                yield f


def grid_contexts(fields, max_deg=3, max_q=4, min_k=1):
    for K in fields:
        p = K.char
        k = min_k
        while p**k <= max_q:
            for f in grid_polys(K, max_deg):
                yield MpContext(K, f, k)
            k += 1
