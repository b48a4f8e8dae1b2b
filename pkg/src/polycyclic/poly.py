"""Dense univariate polynomials over a :class:`~polycyclic.rings.RingCtx`."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd as igcd

from . import _upoly
from .errors import (
    CtxMismatch,
    DegreeTooLarge,
    NonMonicDivisor,
    NotAField,
    TooLarge,
    ZeroConstantTerm,
)
from .rings import (
    LiftMap,
    RingCtx,
    RingElem,
    enum_cap,
    format_index_poly,
    parse_int_poly,
    reduce_to_residue,
    residue_field,
)

FACTOR_DEGREE_CAP = 12


class Poly:
    """Immutable polynomial; ``coeffs`` are element indices, lowest degree first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(_upoly.trim(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def parse(cls, ctx, text, var="x"):
        """Parse e.g. ``"1+2x^3+x^4+3x^5"`` or ``"x^6-3x^5+3x^4-x^3"``."""
        return cls(ctx, parse_int_poly(ctx, text, var))

    @classmethod
    def from_ints(cls, ctx, values):
        return cls(ctx, [ctx.from_int(v) for v in values])

    @classmethod
    def from_elems(cls, ctx, elems):
        return cls(ctx, [ctx.elem(e).value for e in elems])

    @classmethod
    def monomial(cls, ctx, k, c=None):
        c = ctx.one if c is None else c
        return cls(ctx, [0] * k + [c])

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [ctx.one])

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, ctx.one])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n):
        """Coefficient list of length ``n`` (degree must be < n)."""
        if len(self.coeffs) > n:
            raise DegreeTooLarge(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other):
        if isinstance(other, int):
            return Poly(self.ctx, [self.ctx.from_int(other)])
        if isinstance(other, RingElem):
            if other.ctx != self.ctx:
                raise CtxMismatch(f"{self.ctx.spec} vs {other.ctx.spec}")
            return Poly(self.ctx, [other.value])
        if not isinstance(other, Poly):
            return NotImplemented
        if other.ctx != self.ctx:
            raise CtxMismatch(f"{self.ctx.spec} vs {other.ctx.spec}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly(self.ctx, _upoly.add(self.ctx, self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly(self.ctx, _upoly.sub(self.ctx, self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Poly(self.ctx, _upoly.neg(self.ctx, self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly(self.ctx, _upoly.mul(self.ctx, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        return Poly(self.ctx, _upoly.pow_(self.ctx, self.coeffs, e))

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __call__(self, point):
        return poly_eval(self, point)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == tuple(_upoly.trim([self.ctx.from_int(other)]))
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.spec, self.coeffs))

    def __str__(self):
        return format_index_poly(self.ctx, self.coeffs, "x")

    def __repr__(self):
        return f"Poly({self.ctx.spec}, {self})"

    def to_str(self, var="x"):
        return format_index_poly(self.ctx, self.coeffs, var)

    def scale(self, c):
        return Poly(self.ctx, _upoly.scale(self.ctx, c, self.coeffs))

    def shift(self, k):
        """Multiply by x^k."""
        return Poly(self.ctx, [0] * k + list(self.coeffs)) if self.coeffs else self

    def compose(self, other):
        return Poly(self.ctx, _upoly.compose(self.ctx, self.coeffs, other.coeffs))

    def lift(self, m):
        if m.source != self.ctx:
            raise CtxMismatch(f"lift from {m.source.spec} applied to {self.ctx.spec} polynomial")
        return Poly(m.target, [m(c) for c in self.coeffs])

    def elems(self):
        return [RingElem(self.ctx, c) for c in self.coeffs]


# -- public operations ---------------------------------------------------------------


def _same(a, b):
    if a.ctx != b.ctx:
        raise CtxMismatch(f"{a.ctx.spec} vs {b.ctx.spec}")


def poly_add(a, b):
    _same(a, b)
    return a + b


def poly_mul(a, b):
    _same(a, b)
    return a * b


def poly_divmod(a, b):
    """``(q, r)`` with ``a == q*b + r`` and ``deg r < deg b``; ``b`` must be monic."""
    _same(a, b)
    if not b.is_monic():
        raise NonMonicDivisor(f"divisor {b} is not monic")
    q, r = _upoly.divmod_(a.ctx, a.coeffs, b.coeffs)
    return Poly(a.ctx, q), Poly(a.ctx, r)


def poly_eval(g, point, lift=None):
    """Horner evaluation, lifting each coefficient first when ``lift`` is given."""
    if not isinstance(point, RingElem):
        point = (lift.target if lift else g.ctx).elem(point)
    if lift is not None:
        if lift.source != g.ctx or lift.target != point.ctx:
            raise CtxMismatch("lift does not match polynomial and point rings")
        coeffs = [lift(c) for c in g.coeffs]
    else:
        if point.ctx != g.ctx:
            raise CtxMismatch(f"point in {point.ctx.spec}, polynomial over {g.ctx.spec}")
        coeffs = g.coeffs
    R = point.ctx
    return RingElem(R, _upoly.evaluate(R, coeffs, point.value))


@dataclass(frozen=True)
class QuotientCtx:
    """``base[x]/<modulus>`` with a monic modulus."""

    base: RingCtx
    modulus: Poly
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.modulus.ctx != self.base:
            raise CtxMismatch("modulus is over a different ring")
        if not self.modulus.is_monic():
            raise NonMonicDivisor(f"modulus {self.modulus} is not monic")

    @property
    def N(self):
        return self.modulus.degree

    @property
    def size(self):
        return self.base.size**self.N

    def reduce(self, g):
        return poly_divmod(g, self.modulus)[1]

    def mul(self, a, b):
        return self.reduce(a * b)

    def elements(self):
        """All reduced polynomials, coefficient vectors in little-endian index order."""
        cap = enum_cap()
        if self.size > cap:
            raise TooLarge(f"|R_F| = {self.size} exceeds cap {cap}")
        q, N = self.base.size, self.N
        for idx in range(self.size):
            cs = []
            for _ in range(N):
                idx, c = divmod(idx, q)
                cs.append(c)
            yield Poly(self.base, cs)

    def __str__(self):
        return self.label or f"{self.base.spec}[x]/<{self.modulus}>"


@dataclass(frozen=True)
class Factorization:
    factors: tuple
    unit: RingElem

    def product(self):
        ctx = self.unit.ctx
        acc = Poly(ctx, [self.unit.value])
        for f, m in self.factors:
            acc = acc * f**m
        return acc

    def __str__(self):
        parts = [f"({f})" + (f"^{m}" if m > 1 else "") for f, m in self.factors]
        if self.unit.value != self.unit.ctx.one:
            parts.insert(0, str(self.unit))
        return "*".join(parts) or str(self.unit)


def poly_factor_field(f, degree_cap=FACTOR_DEGREE_CAP):
    R = f.ctx
    if not R.is_field:
        raise NotAField(f"{R.spec} is not a field")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > degree_cap:
        raise DegreeTooLarge(f"degree {f.degree} exceeds factorisation cap {degree_cap}")
    unit, factors = _upoly.factor_field(R, f.coeffs)
    return Factorization(tuple((Poly(R, g), m) for g, m in factors), RingElem(R, unit))


def poly_order(f):
    """Smallest ``e >= 1`` with ``f | x^e - 1``."""
    R = f.ctx
    if not R.is_field:
        raise NotAField(f"{R.spec} is not a field")
    if f.coeff(0) == 0:
        raise ZeroConstantTerm(f"{f} has zero constant term")
    if f.degree == 0:
        return 1
    g = _upoly.monic(R, f.coeffs)
    bound = R.size**f.degree - 1
    x = _upoly.mod(R, [0, R.one], g)
    cur = x
    for e in range(1, bound + 1):
        if cur == [R.one]:
            return e
        cur = _upoly.mulmod(R, cur, x, g)
    raise ArithmeticError(f"order of {f} not found below {bound}")  # pragma: no cover


def poly_roots_exhaustive(f, ring=None, lift=None):
    """All ``rho`` in ``ring`` with ``f(rho) == 0`` (coefficients lifted first), in index order."""
    ring = ring or (lift.target if lift else f.ctx)
    if lift is not None:
        coeffs = [lift(c) for c in f.coeffs]
    elif ring == f.ctx:
        coeffs = list(f.coeffs)
    else:
        raise CtxMismatch("a lift map is needed to evaluate in another ring")
    if not coeffs:
        raise ValueError("every element is a root of the zero polynomial")
    return [RingElem(ring, a) for a in ring.elements() if _upoly.evaluate(ring, coeffs, a) == 0]


def root_multiplicity(F, alpha):
    """Largest ``k`` with ``(x - alpha)^k | F``, found by repeated exact division."""
    if F.ctx != alpha.ctx:
        raise CtxMismatch("root and polynomial in different rings")
    R = F.ctx
    lin = [R.neg(alpha.value), R.one]
    g = list(F.coeffs)
    k = 0
    while g:
        q, r = _upoly.divmod_(R, g, lin)
        if r:
            break
        g = q
        k += 1
    return k


def poly_squarefree_check(f):
    """True iff the reduction of ``f`` to the residue field has no repeated roots."""
    R = f.ctx
    k = residue_field(R)
    fbar = _upoly.trim([reduce_to_residue(R, c) for c in f.coeffs])
    if not fbar:
        return False
    if len(fbar) == 1:
        return True
    d = _upoly.derivative(k, fbar)
    if not d:
        return False
    return len(_upoly.gcd(k, fbar, d)) == 1


def poly_gcd(a, b):
    _same(a, b)
    if not a.ctx.is_field:
        raise NotAField(f"{a.ctx.spec} is not a field")
    return Poly(a.ctx, _upoly.gcd(a.ctx, a.coeffs, b.coeffs))


def monic_divisors(factorization):
    """All monic divisors of a factored polynomial, as (exponents, Poly) pairs."""
    from itertools import product

    bases = [f for f, _ in factorization.factors]
    ranges = [range(m + 1) for _, m in factorization.factors]
    ctx = factorization.unit.ctx
    for exps in product(*ranges):
        g = Poly.one(ctx)
        for b, e in zip(bases, exps):
            g = g * b**e
        yield exps, g


def multiplicative_order_mod(a, e):
    """Order of ``a`` in ``(Z/e)^*``."""
    if igcd(a, e) != 1:
        raise ValueError(f"{a} is not invertible mod {e}")
    k, x = 1, a % e
    while x != 1 % e:
        x = x * a % e
        k += 1
    return k
