"""Generalized Vandermonde matrices and the generalized Mattson-Solomon map.

For ``F = f^m`` with ``f = prod_j (x - alpha_j)`` over an evaluation ring
``R'``, a polynomial ``g`` of degree ``< N = n*m`` is sent to the ``n x m``
table ``g^[i](alpha_j)``; read as ``sum_j (sum_i g^[i](alpha_j) y^i) x^j`` this
is an element of ``(R'[y]/<y^m>)[x]/<f>`` and products become componentwise
truncated convolutions.

Orientation: coefficient vectors are rows acting on the right,
``[g_0 .. g_{N-1}] V = [g(a_0), g^[1](a_0), .., g^[m-1](a_{n-1})]``, and the
Jordan identity holds as ``C_F V = V J_F`` with ``J_F`` upper bidiagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, lcm

from . import _upoly
from . import linalg
from .errors import (
    CtxMismatch,
    DegreeTooLarge,
    InvalidRoots,
    NonMonic,
    NonUnitRoot,
    NotInImage,
    SingularMatrix,
    SingularVandermonde,
)
from .hasse import hasse_derivative
from .poly import Poly, poly_factor_field, poly_roots_exhaustive, root_multiplicity
from .rings import (
    LiftMap,
    RingElem,
    extension,
    first_irreducible,
    identity_lift,
    jet_ring,
    reduce_to_residue,
    residue_field,
)


@dataclass(frozen=True)
class TransformCtx:
    """Data fixing one GMS map: base ring, evaluation ring, ordered roots, ``m``."""

    R: object
    Rprime: object
    lift: LiftMap
    roots: tuple
    m: int
    f: Poly
    F: Poly

    @property
    def n(self):
        return len(self.roots)

    @property
    def N(self):
        return self.n * self.m

    def root_elems(self):
        return [RingElem(self.Rprime, a) for a in self.roots]

    def lift_poly(self, g):
        if g.ctx == self.Rprime:
            return g
        if g.ctx != self.R:
            raise CtxMismatch(f"polynomial over {g.ctx.spec}, transform over {self.R.spec}")
        return g.lift(self.lift)

    def __str__(self):
        roots = ",".join(self.Rprime.format(a) for a in self.roots)
        return f"MS[{self.R.spec}->{self.Rprime.spec}; f={self.f}; m={self.m}; roots={roots}]"


def splitting_ring(R, f):
    """Smallest unramified extension of ``R`` over which ``f`` splits, with its lift."""
    k = residue_field(R)
    fbar = Poly(k, [reduce_to_residue(R, c) for c in f.coeffs])
    degrees = [g.degree for g, _ in poly_factor_field(fbar).factors]
    L = lcm(*degrees) if degrees else 1
    if L == 1:
        return R, identity_lift(R)
    h = first_irreducible(k, L)
    # residue indices of a prime field coincide with Z_{p^r} indices; towers over fields are fields
    if not (R.is_field or R.kind == "Zpr"):
        raise NotImplementedError(f"splitting rings over {R.kind} are not supported")
    S = extension(R, h, var="t")
    return S, LiftMap(R, S, "CanonicalInclusion")


def make_transform_ctx(f, m, roots=None, Rprime=None, lift=None, validate=True):
    """Build a :class:`TransformCtx`.

    ``roots`` may be given explicitly (as elements or integers of ``Rprime``);
    otherwise they are found by exhaustive search over ``Rprime`` (default:
    the splitting ring of ``f``) in enumeration order.
    """
    R = f.ctx
    if not f.is_monic():
        raise NonMonic(f"{f} is not monic")
    if Rprime is None:
        if lift is not None:
            Rprime = lift.target
        elif roots is not None and isinstance(roots[0], RingElem):
            Rprime = roots[0].ctx
        else:
            Rprime, lift = splitting_ring(R, f)
    if lift is None:
        lift = identity_lift(R) if Rprime == R else LiftMap(R, Rprime, "CanonicalInclusion")
    if roots is None:
        roots = poly_roots_exhaustive(f, Rprime, lift)
    roots = tuple(Rprime.elem(a).value for a in roots)
    ctx = TransformCtx(R, Rprime, lift, roots, m, f, f**m)
    if validate:
        validate_roots(ctx)
    return ctx


def validate_roots(ctx):
    """Check root count, multiplicity ``>= m`` in ``F`` and pairwise unit differences.

    Under an ``IntegerLift`` (not a ring map) the multiplicity test is done on
    the reductions of the roots back in ``R``.
    """
    Rp = ctx.Rprime
    if ctx.n != ctx.f.degree:
        raise InvalidRoots(f"{ctx.n} roots supplied for a degree-{ctx.f.degree} polynomial")
    if ctx.lift.rule == "IntegerLift":
        for a in ctx.roots:
            abar = RingElem(ctx.R, ctx.lift.reduce(a))
            if root_multiplicity(ctx.F, abar) < ctx.m:
                raise InvalidRoots(f"{abar} (reduction of {Rp.format(a)}) is not an m-fold root of F")
    else:
        Fl = ctx.F.lift(ctx.lift)
        for a in ctx.roots:
            if root_multiplicity(Fl, RingElem(Rp, a)) < ctx.m:
                raise InvalidRoots(f"{Rp.format(a)} is not an m-fold root of F")
    for i, a in enumerate(ctx.roots):
        for b in ctx.roots[i + 1:]:
            if not Rp.is_unit(Rp.sub(a, b)):
                raise InvalidRoots(
                    f"roots {Rp.format(a)} and {Rp.format(b)} coincide modulo the maximal ideal"
                )


# -- the transform ------------------------------------------------------------------


@dataclass(frozen=True)
class MsElement:
    """Element of ``(R'[y]/<y^m>)[x]/<f>``: ``table[j][i]`` is the y^i coefficient of the x^j part."""

    ctx: TransformCtx
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.ctx.n or any(len(r) != self.ctx.m for r in self.table):
            raise ValueError("MsElement table must be n x m")

    def __mul__(self, other):
        return ms_star_mul(self, other)

    def __add__(self, other):
        _same_ctx(self, other)
        Rp = self.ctx.Rprime
        return MsElement(
            self.ctx,
            tuple(tuple(Rp.add(a, b) for a, b in zip(r, s)) for r, s in zip(self.table, other.table)),
        )

    def __sub__(self, other):
        _same_ctx(self, other)
        Rp = self.ctx.Rprime
        return MsElement(
            self.ctx,
            tuple(tuple(Rp.sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.table, other.table)),
        )

    def is_zero(self):
        return not any(any(r) for r in self.table)

    def ints(self):
        """Rows of coordinate tuples (plain ints when R' is Z_{p^r})."""
        Rp = self.ctx.Rprime
        return [[_plain(Rp, a) for a in row] for row in self.table]

    def __str__(self):
        Rp = self.ctx.Rprime
        parts = []
        for j, row in enumerate(self.table):
            if not any(row):
                continue
            comp = _upoly.trim(list(row))
            inner = _fmt_y(Rp, comp)
            xs = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if xs and inner == "1":
                parts.append(xs)
            elif xs:
                parts.append(f"({inner}){xs}")
            else:
                parts.append(f"({inner})")
        return "+".join(parts) if parts else "0"


def _plain(R, a):
    c = R.coords(a)
    return c[0] if len(c) == 1 else list(c)


def _fmt_y(R, coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        cs = R.format(c)
        if not cs.isdigit():
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
        else:
            mon = "y" if i == 1 else f"y^{i}"
            terms.append(mon if c == R.one else f"{cs}{mon}")
    return "+".join(terms) if terms else "0"


def _same_ctx(a, b):
    if a.ctx != b.ctx:
        raise CtxMismatch("MsElements from different transform contexts")


def _check_degree(g, ctx):
    if g.degree >= ctx.N:
        raise DegreeTooLarge(f"deg g = {g.degree} must be < N = {ctx.N}; reduce modulo F first")


def _hasse_values(g, ctx):
    """``vals[i][j] = g^[i](alpha_j)``; derivatives over ``g.ctx``, then lifted and evaluated."""
    Rp = ctx.Rprime
    lift = ctx.lift if g.ctx == ctx.R else None
    if g.ctx not in (ctx.R, ctx.Rprime):
        raise CtxMismatch(f"polynomial over {g.ctx.spec}, transform over {ctx.R.spec}")
    out = []
    for i in range(ctx.m):
        d = hasse_derivative(g, i)
        cs = [lift(c) for c in d.coeffs] if lift else list(d.coeffs)
        out.append([_upoly.evaluate(Rp, cs, a) for a in ctx.roots])
    return out


def gdft(g, ctx):
    """The ``m x n`` GDFT matrix ``[[g^[i](alpha_j)]]`` as ring elements."""
    _check_degree(g, ctx)
    Rp = ctx.Rprime
    return [[RingElem(Rp, v) for v in row] for row in _hasse_values(g, ctx)]


def ms_forward(g, ctx):
    _check_degree(g, ctx)
    vals = _hasse_values(g, ctx)
    return MsElement(ctx, tuple(tuple(vals[i][j] for i in range(ctx.m)) for j in range(ctx.n)))


def ms_forward_shift(g, ctx):
    """``g(alpha_j + y)`` computed in the jet ring ``R'[y]/<y^m>`` by Horner's rule."""
    _check_degree(g, ctx)
    Rp, m = ctx.Rprime, ctx.m
    gl = ctx.lift_poly(g)
    J = jet_ring(Rp, m)
    table = []
    for a in ctx.roots:
        point = J.encode([a, Rp.one] + [0] * (m - 2)) if m > 1 else J.encode([a])
        acc = 0
        for c in reversed(gl.coeffs):
            acc = J.add(J.mul(acc, point), J.encode([c] + [0] * (m - 1)))
        table.append(tuple(J.decode(acc)))
    return MsElement(ctx, tuple(table))


def ms_forward_scale(g, ctx):
    """``g(u * alpha_j)`` in ``R'[u]/<(u-1)^m>``, re-expressed in ``y = u - 1``."""
    _check_degree(g, ctx)
    Rp, m = ctx.Rprime, ctx.m
    for a in ctx.roots:
        if not Rp.is_unit(a):
            raise NonUnitRoot(f"root {Rp.format(a)} is not a unit")
    gl = ctx.lift_poly(g)
    modulus = _upoly.pow_(Rp, [Rp.neg(Rp.one), Rp.one], m)
    y_mod = [0] * m + [Rp.one]
    table = []
    for a in ctx.roots:
        ua = [0, a]
        acc = []
        for c in reversed(gl.coeffs):
            acc = _upoly.add(Rp, _upoly.mulmod(Rp, acc, ua, modulus), [c] if c else [])
        # u -> y + 1
        in_y = _upoly.mod(Rp, _upoly.compose(Rp, acc, [Rp.one, Rp.one]), y_mod)
        table.append(tuple(in_y + [0] * (m - len(in_y))))
    return MsElement(ctx, tuple(table))


def ms_star_mul(a, b):
    _same_ctx(a, b)
    Rp, m = a.ctx.Rprime, a.ctx.m
    rows = []
    for r, s in zip(a.table, b.table):
        out = [0] * m
        for i, u in enumerate(r):
            if u == 0:
                continue
            for j in range(m - i):
                if s[j]:
                    out[i + j] = Rp.add(out[i + j], Rp.mul(u, s[j]))
        rows.append(tuple(out))
    return MsElement(a.ctx, tuple(rows))


def ms_unit(ctx):
    return MsElement(ctx, tuple((ctx.Rprime.one,) + (0,) * (ctx.m - 1) for _ in range(ctx.n)))


def ms_zero(ctx):
    return MsElement(ctx, tuple((0,) * ctx.m for _ in range(ctx.n)))


def ms_indicator(ctx, indices):
    """``sum_{j in indices} x^j`` (componentwise unit on the chosen roots)."""
    one = ctx.Rprime.one
    return MsElement(
        ctx,
        tuple(((one if j in indices else 0),) + (0,) * (ctx.m - 1) for j in range(ctx.n)),
    )


def ms_from_ints(ctx, rows):
    Rp = ctx.Rprime
    return MsElement(ctx, tuple(tuple(Rp.from_int(v) for v in row) for row in rows))


def ms_inverse(e, descend=False):
    """Unique ``g`` over ``R'`` (degree ``< N``) with ``ms_forward(g) == e``.

    With ``descend=True`` the result is mapped back to ``R`` through the lift's
    section; :class:`NotInImage` if some coefficient does not descend.
    """
    ctx = e.ctx
    V = vandermonde(ctx)
    target = [e.table[j][i] for j in range(ctx.n) for i in range(ctx.m)]
    try:
        g = linalg.solve_left(ctx.Rprime, V, target)
    except SingularMatrix as exc:
        raise SingularVandermonde(str(exc)) from None
    if not descend:
        return Poly(ctx.Rprime, g)
    out = []
    for c in g:
        s = ctx.lift.section(c)
        if s is None:
            raise NotInImage(f"coefficient {ctx.Rprime.format(c)} is not in {ctx.R.spec}")
        out.append(s)
    return Poly(ctx.R, out)


# -- matrices -------------------------------------------------------------------------


def vandermonde(ctx):
    """``V = [R(alpha_0) .. R(alpha_{n-1})]``, entry ``(i, (j, t)) = C(i, t) alpha_j^(i-t)``."""
    Rp, N, m = ctx.Rprime, ctx.N, ctx.m
    V = [[0] * N for _ in range(N)]
    for j, a in enumerate(ctx.roots):
        for t in range(m):
            col = j * m + t
            for i in range(t, N):
                V[i][col] = Rp.mul(Rp.from_int(comb(i, t)), Rp.pow(a, i - t))
    return V


def vandermonde_det_formula(ctx):
    """``prod_{i<j} (alpha_i - alpha_j)^(m*m)``, the closed form quoted for ``det V``."""
    Rp = ctx.Rprime
    acc = Rp.one
    for i, a in enumerate(ctx.roots):
        for b in ctx.roots[i + 1:]:
            acc = Rp.mul(acc, Rp.pow(Rp.sub(a, b), ctx.m * ctx.m))
    return acc


def companion_matrix(F):
    """Companion matrix with last row ``F_0 .. F_{N-1}`` where ``F = x^N - sum F_i x^i``."""
    if not F.is_monic():
        raise NonMonic(f"{F} is not monic")
    R, N = F.ctx, F.degree
    C = [[0] * N for _ in range(N)]
    for i in range(N - 1):
        C[i][i + 1] = R.one
    for i in range(N):
        C[N - 1][i] = R.neg(F.coeff(i))
    return C


def char_poly_laplace(C, R):
    """``det(x I - C)`` by cofactor expansion with polynomial entries."""
    N = len(C)
    x = Poly.x(R)
    A = [[(x if i == j else Poly(R, [])) - Poly(R, [C[i][j]]) for j in range(N)] for i in range(N)]
    return linalg.laplace(
        A,
        zero=Poly(R, []),
        one=Poly.one(R),
        add=lambda a, b: a + b,
        sub=lambda a, b: a - b,
        mul=lambda a, b: a * b,
    )


def jordan_matrix(ctx):
    Rp, N, m = ctx.Rprime, ctx.N, ctx.m
    J = [[0] * N for _ in range(N)]
    for j, a in enumerate(ctx.roots):
        for t in range(m):
            k = j * m + t
            J[k][k] = a
            if t + 1 < m:
                J[k][k + 1] = Rp.one
    return J


@dataclass(frozen=True)
class JordanReduction:
    V: list
    J: list
    C: list
    V_inv: list
    holds: bool


def jordan_reduction(ctx):
    """``V``, ``J_F`` and whether ``C_F == V J_F V^-1`` holds exactly over ``R'``."""
    Rp = ctx.Rprime
    V = vandermonde(ctx)
    try:
        Vi = linalg.inverse(Rp, V)
    except SingularMatrix as exc:
        raise SingularVandermonde(str(exc)) from None
    J = jordan_matrix(ctx)
    C = companion_matrix(ctx.lift_poly(ctx.F))
    rhs = linalg.matmul(Rp, linalg.matmul(Rp, V, J), Vi)
    return JordanReduction(V, J, C, Vi, rhs == C)
