"""Finite commutative local coefficient rings with exact arithmetic.

Elements are stored as integer indices in ``range(ctx.size)``.  For
``Z_{p^r}`` the index is the residue itself; for a quotient ring
``B[t]/<h(t)>`` of degree ``d`` the index is ``sum(c_i * |B|**i)`` where the
``c_i`` are indices of the base coefficients.  The canonical coordinate
vector (:meth:`RingCtx.coords`) flattens this tower down to integers in
``[0, p^r)``.

Supported kinds::

    Zpr             Z/p^rZ
    Fq              prime field F_p or F_p[a]/<h>, h irreducible
    GaloisRing      Z_{p^r}[a]/<h>, h mod p irreducible
    TruncatedLocal  F_q[u]/<u^a>
    JetRing         B[y]/<y^m> over any supported local ring B
    QuotientByPoly  B[t]/<h> with h irreducible mod the maximal ideal of B
                    (unramified tower, used for splitting rings)

Rings are immutable; identical specs give equal contexts.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _upoly
from .errors import (
    CtxMismatch,
    IncompatibleRings,
    NotAUnit,
    NotLocal,
    NotPrime,
    ParseError,
    ReducibleModulus,
    TooLarge,
)

TABLE_LIMIT = 256
DEFAULT_ENUM_CAP = 2**22


def enum_cap():
    """Enumeration cap, overridable through ``POLYRING_ENUM_CAP``."""
    value = os.environ.get("POLYRING_ENUM_CAP")
    if value:
        try:
            return int(value)
        except ValueError:
            raise ParseError(f"POLYRING_ENUM_CAP must be an integer, got {value!r}") from None
    return DEFAULT_ENUM_CAP


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n):
    """Return ``(p, r)`` with ``n == p**r``, or raise :class:`NotPrime`."""
    if n < 2:
        raise NotPrime(f"{n} is not a prime power")
    p = next(d for d in range(2, n + 1) if n % d == 0)
    r = 0
    m = n
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise NotPrime(f"{n} is not a prime power")
    return p, r


class RingCtx:
    """A finite local ring.  Subclasses provide the raw arithmetic."""

    kind: str
    p: int
    r: int
    size: int
    spec: str
    residue_size: int

    zero = 0

    def __init__(self):
        if self.size <= TABLE_LIMIT:
            self._install_tables()

    # -- raw arithmetic, overridden or replaced by table lookups ----------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _install_tables(self):
        n = self.size
        add_t = [[self.add(a, b) for b in range(n)] for a in range(n)]
        mul_t = [[self.mul(a, b) for b in range(n)] for a in range(n)]
        neg_t = [self.neg(a) for a in range(n)]
        sub_t = [[add_t[a][neg_t[b]] for b in range(n)] for a in range(n)]
        one = self.one
        inv_t = [None] * n
        for a in range(n):
            row = mul_t[a]
            for b in range(n):
                if row[b] == one:
                    inv_t[a] = b
                    break
        self._tables = (add_t, mul_t, neg_t, sub_t, inv_t)
        self.add = lambda a, b: add_t[a][b]
        self.mul = lambda a, b: mul_t[a][b]
        self.neg = neg_t.__getitem__
        self.sub = lambda a, b: sub_t[a][b]

    @cached_property
    def np_tables(self):
        """``(add, mul, neg)`` as numpy arrays, for vectorised batch kernels."""
        if self.size > TABLE_LIMIT:
            raise TooLarge(f"{self.spec}: no dense tables above {TABLE_LIMIT} elements")
        add_t, mul_t, neg_t, _, _ = self._tables
        dt = np.int16
        return (np.array(add_t, dtype=dt), np.array(mul_t, dtype=dt), np.array(neg_t, dtype=dt))

    # -- derived structure ----------------------------------------------------
    @property
    def char(self):
        return self.p**self.r

    @cached_property
    def one(self):
        return self._one()

    def _one(self):
        raise NotImplementedError

    @property
    def is_field(self):
        return self.residue_size == self.size

    @cached_property
    def length(self):
        """Composition length: ``size == residue_size ** length``."""
        return round(math.log(self.size, self.residue_size))

    def from_int(self, n):
        """Image of the integer ``n`` under ``Z -> R``."""
        n %= self.char
        return self._from_small_int(n)

    def _from_small_int(self, n):
        raise NotImplementedError

    def coords(self, a):
        raise NotImplementedError

    def pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def is_nilpotent(self, a):
        return self.pow(a, self.length) == 0

    def is_unit(self, a):
        if self.size <= TABLE_LIMIT:
            return self._tables[4][a] is not None
        # local ring: units are exactly the non-nilpotents
        return not self.is_nilpotent(a)

    def inverse(self, a):
        if self.size <= TABLE_LIMIT:
            inv = self._tables[4][a]
            if inv is None:
                raise NotAUnit(f"{self.format(a)} is not a unit in {self.spec}")
            return inv
        if not self.is_unit(a):
            raise NotAUnit(f"{self.format(a)} is not a unit in {self.spec}")
        units = self.size - self.size // self.residue_size
        return self.pow(a, units - 1)

    def elements(self):
        """All elements in index order (the enumeration order used everywhere)."""
        cap = enum_cap()
        if self.size > cap:
            raise TooLarge(f"{self.spec} has {self.size} elements, cap is {cap}")
        return range(self.size)

    def elem(self, value):
        """Wrap an index, an integer literal string or an element expression."""
        if isinstance(value, RingElem):
            if value.ctx != self:
                raise CtxMismatch(f"element of {value.ctx.spec} used in {self.spec}")
            return value
        if isinstance(value, str):
            return RingElem(self, self.parse_elem(value))
        if isinstance(value, (int, np.integer)):
            return RingElem(self, self.from_int(int(value)))
        raise TypeError(f"cannot build an element of {self.spec} from {value!r}")

    def parse_elem(self, text):
        raise NotImplementedError

    def format(self, a):
        raise NotImplementedError

    # equality / hashing on the spec string
    def __eq__(self, other):
        return isinstance(other, RingCtx) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"RingCtx({self.spec!r})"


class IntegerModRing(RingCtx):
    """``Z/p^rZ``; reported as kind ``Fq`` when ``r == 1`` and built from an ``F<p>`` spec."""

    def __init__(self, n, kind="Zpr", spec=None):
        self.p, self.r = prime_power(n)
        if kind == "Fq" and self.r != 1:
            raise NotPrime(f"F{n}: a prime field needs a prime order")
        self.n = n
        self.kind = kind
        self.size = n
        self.residue_size = self.p
        self.spec = spec or (f"F{n}" if kind == "Fq" else f"Z{n}")
        super().__init__()

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return a * b % self.n

    def _one(self):
        return 1 % self.n

    def _from_small_int(self, n):
        return n

    def is_nilpotent(self, a):
        return a % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inverse(self, a):
        if a % self.p == 0:
            raise NotAUnit(f"{a} is not a unit in {self.spec}")
        return pow(a, -1, self.n)

    def coords(self, a):
        return (a,)

    def parse_elem(self, text):
        text = text.strip()
        try:
            return int(text) % self.n
        except ValueError:
            raise ParseError(f"not an element of {self.spec}: {text!r}") from None

    def format(self, a):
        return str(a)

    # chain-ring data: uniformizer p
    def valuation(self, a):
        if a == 0:
            return self.r
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def divide_uniformizer(self, a, v):
        return a // self.p**v


class PolyQuotientRing(RingCtx):
    """``base[var]/<modulus>`` for a monic modulus given as base indices."""

    def __init__(self, base, modulus, kind, var, spec):
        modulus = _upoly.trim(modulus)
        if not modulus or modulus[-1] != base.one or len(modulus) < 2:
            raise ParseError(f"{spec}: modulus must be monic of positive degree")
        self.base = base
        self.modulus = tuple(modulus)
        self.d = len(modulus) - 1
        self.kind = kind
        self.var = var
        self.spec = spec
        self.p, self.r = base.p, base.r
        self.size = base.size**self.d
        self.truncated = all(c == 0 for c in modulus[:-1])
        if self.truncated:
            self.residue_size = base.residue_size
        else:
            self._check_unramified()
            self.residue_size = base.residue_size**self.d
        # x^d == -sum(h_i x^i)
        self._red = [base.neg(c) for c in modulus[:-1]]
        self._log = None
        super().__init__()
        if self.is_field and self.size > TABLE_LIMIT and self.size <= 2**16:
            self._install_log_tables()

    def _check_unramified(self):
        base = self.base
        k = residue_field(base)
        red = [reduce_to_residue(base, c) for c in self.modulus]
        if not _upoly.is_irreducible(k, red):
            raise ReducibleModulus(
                f"{self.spec}: modulus is not irreducible modulo the maximal ideal of {base.spec}"
            )

    # index <-> base coefficient vector
    def decode(self, a):
        bs = self.base.size
        out = []
        for _ in range(self.d):
            a, c = divmod(a, bs)
            out.append(c)
        return out

    def encode(self, cs):
        bs = self.base.size
        a = 0
        for c in reversed(cs):
            a = a * bs + c
        return a

    def add(self, a, b):
        B = self.base
        return self.encode([B.add(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a):
        B = self.base
        return self.encode([B.neg(x) for x in self.decode(a)])

    def mul(self, a, b):
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            exp, log = self._log
            return exp[(log[a] + log[b]) % (self.size - 1)]
        B = self.base
        x, y = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.d - 1)
        for i, u in enumerate(x):
            if u == 0:
                continue
            for j, v in enumerate(y):
                if v:
                    prod[i + j] = B.add(prod[i + j], B.mul(u, v))
        red = self._red
        d = self.d
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c == 0:
                continue
            for j, h in enumerate(red):
                if h:
                    prod[k - d + j] = B.add(prod[k - d + j], B.mul(c, h))
        return self.encode(prod[:d])

    def _install_log_tables(self):
        n = self.size
        for g in range(2, n):
            exp = [self.one]
            seen = {self.one}
            x = self.one
            ok = True
            for _ in range(n - 2):
                x = self.mul(x, g)
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                exp.append(x)
            if ok:
                log = [0] * n
                for i, e in enumerate(exp):
                    log[e] = i
                self._log = (exp, log)
                return

    def inverse(self, a):
        if self._log is not None:
            if a == 0:
                raise NotAUnit(f"0 is not a unit in {self.spec}")
            exp, log = self._log
            return exp[(-log[a]) % (self.size - 1)]
        return super().inverse(a)

    def _one(self):
        return self.base.one

    def _from_small_int(self, n):
        return self.base.from_int(n)

    def coords(self, a):
        out = []
        for c in self.decode(a):
            out.extend(self.base.coords(c))
        return tuple(out)

    def from_coords(self, coords):
        w = len(self.base.coords(0))
        cs = []
        for i in range(self.d):
            chunk = coords[i * w:(i + 1) * w]
            cs.append(_from_coords(self.base, chunk))
        return self.encode(cs)

    def gen(self):
        return self.encode([0, self.base.one] + [0] * (self.d - 2)) if self.d > 1 else self.encode(
            [self._red[0]]
        )

    def parse_elem(self, text):
        return parse_expression(self, text)

    def format(self, a):
        cs = self.decode(a)
        terms = []
        for i, c in enumerate(cs):
            if c == 0:
                continue
            cstr = self.base.format(c)
            if i == 0:
                terms.append(cstr)
                continue
            mon = self.var if i == 1 else f"{self.var}^{i}"
            if c == self.base.one:
                terms.append(mon)
            elif re.fullmatch(r"\d+", cstr):
                terms.append(f"{cstr}{mon}")
            else:
                terms.append(f"({cstr}){mon}")
        return "+".join(terms) if terms else "0"

    # chain-ring data
    def valuation(self, a):
        """Valuation w.r.t. the uniformizer; only for chain rings."""
        if self.truncated and self.base.is_field:
            if a == 0:
                return self.d
            cs = self.decode(a)
            return next(i for i, c in enumerate(cs) if c)
        if not self.truncated and hasattr(self.base, "valuation") and self.base.kind != "JetRing":
            cs = self.decode(a)
            return min(self.base.valuation(c) for c in cs)
        raise NotLocal(f"{self.spec} is not a chain ring")

    def divide_uniformizer(self, a, v):
        cs = self.decode(a)
        if self.truncated and self.base.is_field:
            return self.encode(cs[v:] + [0] * v)
        return self.encode([self.base.divide_uniformizer(c, v) for c in cs])


def _from_coords(ctx, coords):
    if isinstance(ctx, IntegerModRing):
        return coords[0] % ctx.n
    return ctx.from_coords(coords)


def from_coords(ctx, coords):
    """Inverse of :meth:`RingCtx.coords`."""
    return _from_coords(ctx, tuple(coords))


_residue_cache = {}


def residue_field(ctx):
    """The residue field ``R/m`` as a ring context."""
    if ctx.is_field:
        return ctx
    key = ctx.spec
    if key not in _residue_cache:
        if isinstance(ctx, IntegerModRing):
            k = IntegerModRing(ctx.p, kind="Fq", spec=f"F{ctx.p}")
        elif ctx.truncated:
            k = residue_field(ctx.base)
        else:
            kb = residue_field(ctx.base)
            mod = [reduce_to_residue(ctx.base, c) for c in ctx.modulus]
            k = PolyQuotientRing(kb, mod, "Fq", ctx.var, f"res({ctx.spec})")
        _residue_cache[key] = k
    return _residue_cache[key]


def reduce_to_residue(ctx, a):
    """Image of ``a`` in :func:`residue_field`."""
    if ctx.is_field:
        return a
    if isinstance(ctx, IntegerModRing):
        return a % ctx.p
    if ctx.truncated:
        return reduce_to_residue(ctx.base, ctx.decode(a)[0])
    k = residue_field(ctx)
    return k.encode([reduce_to_residue(ctx.base, c) for c in ctx.decode(a)])


@dataclass(frozen=True)
class RingElem:
    """An element of a :class:`RingCtx`; ``value`` is its index."""

    ctx: RingCtx
    value: int

    @property
    def repr(self):
        """Canonical coordinate vector (integers in ``[0, p^r)``)."""
        return self.ctx.coords(self.value)

    def _other(self, other):
        if isinstance(other, RingElem):
            if other.ctx != self.ctx:
                raise CtxMismatch(f"{self.ctx.spec} vs {other.ctx.spec}")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e):
        return RingElem(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self):
        return RingElem(self.ctx, self.ctx.inverse(self.value))

    def is_unit(self):
        return self.ctx.is_unit(self.value)

    def is_nilpotent(self):
        return self.ctx.is_nilpotent(self.value)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.spec, self.value))

    def __str__(self):
        return self.ctx.format(self.value)

    def __repr__(self):
        return f"{self.ctx.spec}({self.ctx.format(self.value)})"


# -- element operations as plain functions -------------------------------------


def _same(a, b):
    if a.ctx != b.ctx:
        raise CtxMismatch(f"{a.ctx.spec} vs {b.ctx.spec}")


def elem_add(a, b):
    _same(a, b)
    return a + b


def elem_mul(a, b):
    _same(a, b)
    return a * b


def elem_neg(a):
    return -a


def elem_inverse(a):
    return a.inverse()


def is_unit(a):
    return a.is_unit()


def is_nilpotent(a):
    return a.is_nilpotent()


def ring_enumerate(ctx):
    return [RingElem(ctx, a) for a in ctx.elements()]


# -- lift maps -----------------------------------------------------------------


@dataclass(frozen=True)
class LiftMap:
    """Explicit map from a coefficient ring into an evaluation ring.

    ``IntegerLift`` sends the canonical representative of ``Z_{p^a}`` to the
    same integer in ``Z_{p^b}`` (``b >= a``); it is additive only modulo
    ``p^a``.  ``CanonicalInclusion`` embeds a ring into a ring built on top of
    it (identity, or a quotient tower / jet ring over it).
    """

    source: RingCtx
    target: RingCtx
    rule: str

    def __post_init__(self):
        if self.rule == "IntegerLift":
            if not (
                isinstance(self.source, IntegerModRing)
                and isinstance(self.target, IntegerModRing)
                and self.source.p == self.target.p
                and self.source.r <= self.target.r
            ):
                raise IncompatibleRings(
                    f"IntegerLift needs Z_(p^a) -> Z_(p^b), b >= a; got {self.source.spec} -> {self.target.spec}"
                )
        elif self.rule == "CanonicalInclusion":
            if _tower_path(self.source, self.target) is None:
                raise IncompatibleRings(f"{self.source.spec} is not a base of {self.target.spec}")
        else:
            raise ParseError(f"unknown lift rule {self.rule!r}")

    def __call__(self, a):
        """Lift an index of the source ring to an index of the target ring."""
        if self.rule == "IntegerLift":
            return a
        for ring in _tower_path(self.source, self.target):
            a = ring.encode([a] + [0] * (ring.d - 1))
        return a

    def section(self, b):
        """Descend an index of the target back to the source, or ``None``."""
        if self.rule == "IntegerLift":
            return b if b < self.source.size else None
        for ring in reversed(_tower_path(self.source, self.target)):
            cs = ring.decode(b)
            if any(cs[1:]):
                return None
            b = cs[0]
        return b

    def reduce(self, b):
        """Reduction back to the source (``mod p^a`` for IntegerLift)."""
        if self.rule == "IntegerLift":
            return b % self.source.size
        s = self.section(b)
        if s is None:
            raise IncompatibleRings("element does not descend to the source ring")
        return s


def _tower_path(source, target):
    path = []
    ring = target
    while ring != source:
        if not isinstance(ring, PolyQuotientRing):
            return None
        path.append(ring)
        ring = ring.base
    return list(reversed(path))


def identity_lift(ctx):
    return LiftMap(ctx, ctx, "CanonicalInclusion")


def elem_lift(m, a):
    if a.ctx != m.source:
        raise IncompatibleRings(f"element of {a.ctx.spec} is not in {m.source.spec}")
    return RingElem(m.target, m(a.value))


# -- ring-spec strings -----------------------------------------------------------

_ring_cache = {}


def ring_make(spec):
    """Build a ring from a spec string.

    Grammar::

        Z<n>                     n = p^r
        F<q>[:modulus]           modulus in a, e.g. "F4:a^2+a+1" (x also accepted)
        GR(<p^r>,<s>)[:modulus]
        F<q>[u]/u^<a>
        Jet(<base-spec>,<m>)
    """
    spec = spec.strip()
    if spec in _ring_cache:
        return _ring_cache[spec]
    ctx = _ring_make(spec)
    _ring_cache[spec] = ctx
    return ctx


def _ring_make(spec):
    m = re.fullmatch(r"Z(\d+)", spec)
    if m:
        n = int(m.group(1))
        return IntegerModRing(n, "Zpr", spec)
    m = re.fullmatch(r"Jet\((.+),\s*(\d+)\)", spec)
    if m:
        base = ring_make(m.group(1))
        order = int(m.group(2))
        if order < 1:
            raise ParseError("jet order must be positive")
        return PolyQuotientRing(base, [0] * order + [base.one], "JetRing", "y", spec)
    m = re.fullmatch(r"F(\d+)\[u\]/u\^(\d+)", spec)
    if m:
        base = ring_make(f"F{m.group(1)}")
        a = int(m.group(2))
        if a < 1:
            raise ParseError("truncation order must be positive")
        return PolyQuotientRing(base, [0] * a + [base.one], "TruncatedLocal", "u", spec)
    m = re.fullmatch(r"F(\d+)(?::(.+))?", spec)
    if m:
        q = int(m.group(1))
        p, s = prime_power(q)
        if s == 1:
            if m.group(2):
                raise ParseError("a prime field takes no modulus")
            return IntegerModRing(p, "Fq", spec)
        Fp = ring_make(f"F{p}")
        if m.group(2):
            modulus = parse_int_poly(Fp, m.group(2))
        else:
            modulus = first_irreducible(Fp, s)
        if len(modulus) - 1 != s:
            raise ParseError(f"{spec}: modulus degree must be {s}")
        if not _upoly.is_irreducible(Fp, modulus):
            raise ReducibleModulus(f"{spec}: modulus is reducible over F{p}")
        return PolyQuotientRing(Fp, modulus, "Fq", "a", spec)
    m = re.fullmatch(r"GR\((\d+),\s*(\d+)\)(?::(.+))?", spec)
    if m:
        n, s = int(m.group(1)), int(m.group(2))
        base = IntegerModRing(n, "Zpr", f"Z{n}")
        if m.group(3):
            modulus = parse_int_poly(base, m.group(3))
        else:
            # monic lift of the default irreducible over F_p
            modulus = first_irreducible(ring_make(f"F{base.p}"), s)
        if len(modulus) - 1 != s:
            raise ParseError(f"{spec}: modulus degree must be {s}")
        if s == 1:
            return base
        return PolyQuotientRing(base, modulus, "GaloisRing", "a", spec)
    raise ParseError(f"unrecognised ring spec {spec!r}")


def extension(base, modulus, var="t"):
    """Unramified tower ``base[var]/<modulus>`` (modulus as base indices)."""
    modulus = list(modulus)
    spec = f"({base.spec})[{var}]/<{format_index_poly(base, modulus, var)}>"
    if spec in _ring_cache:
        return _ring_cache[spec]
    kind = "Fq" if base.is_field else "QuotientByPoly"
    ctx = PolyQuotientRing(base, modulus, kind, var, spec)
    _ring_cache[spec] = ctx
    return ctx


def jet_ring(base, m):
    return ring_make(f"Jet({base.spec},{m})") if _spec_roundtrips(base) else _jet_of(base, m)


def _spec_roundtrips(ctx):
    try:
        return ring_make(ctx.spec) == ctx
    except Exception:
        return False


def _jet_of(base, m):
    spec = f"Jet({base.spec},{m})"
    if spec not in _ring_cache:
        _ring_cache[spec] = PolyQuotientRing(base, [0] * m + [base.one], "JetRing", "y", spec)
    return _ring_cache[spec]


def first_irreducible(field, degree):
    for cand in _upoly.monic_polys(field, degree):
        if _upoly.is_irreducible(field, cand):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {degree}")  # pragma: no cover


def format_index_poly(ctx, coeffs, var="x"):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        cstr = ctx.format(c)
        if not re.fullmatch(r"\d+", cstr):
            cstr = f"({cstr})"
        if i == 0:
            terms.append(cstr)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            terms.append(mon if c == ctx.one else f"{cstr}{mon}")
    return "+".join(terms) if terms else "0"


# -- tiny expression parser shared by ring elements and polynomials --------------

_TERM = re.compile(r"\s*([+-])?\s*(\([^()]*(?:\([^()]*\)[^()]*)*\)|\d+)?\s*\*?\s*(?:([A-Za-z])(?:\^(\d+))?)?\s*")


def parse_terms(text):
    """Split ``"1+2x^3-(a+1)*x"`` into ``[(sign, coeff_text, var, exp), ...]``."""
    text = text.replace("−", "-").replace(" ", "")
    if not text:
        raise ParseError("empty expression")
    pos = 0
    out = []
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        sign, coeff, var, exp = m.groups()
        if coeff is None and var is None:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        if pos > 0 and sign is None:
            raise ParseError(f"missing operator in {text!r} at position {pos}")
        if exp is not None and var is None:
            raise ParseError(f"dangling exponent in {text!r}")
        out.append((-1 if sign == "-" else 1, coeff, var, int(exp) if exp else (1 if var else 0)))
        pos = m.end()
    return out


def parse_coeff(ctx, coeff_text):
    if coeff_text is None:
        return ctx.one
    if coeff_text.startswith("("):
        return ctx.parse_elem(coeff_text[1:-1])
    return ctx.from_int(int(coeff_text))


def parse_expression(ctx, text):
    """Parse an element of a quotient ring written in its generator."""
    acc = 0
    base = ctx.base
    for sign, coeff, var, exp in parse_terms(text):
        if var is not None and var != ctx.var:
            raise ParseError(f"unknown symbol {var!r} in element of {ctx.spec} (generator {ctx.var!r})")
        c = parse_coeff(base, coeff)
        if sign < 0:
            c = base.neg(c)
        mono = ctx.pow(ctx.gen(), exp) if var else ctx.one
        acc = ctx.add(acc, ctx.mul(ctx.encode([c] + [0] * (ctx.d - 1)), mono))
    return acc


def parse_int_poly(ctx, text, var=None):
    """Parse a polynomial with integer (or parenthesised) coefficients into index list."""
    coeffs = {}
    symbol = None
    for sign, coeff, v, exp in parse_terms(text):
        if v is not None:
            if symbol is None:
                symbol = v
            elif v != symbol:
                raise ParseError(f"mixed variables {symbol!r} and {v!r} in {text!r}")
            if var is not None and v != var:
                raise ParseError(f"expected variable {var!r}, got {v!r}")
        c = parse_coeff(ctx, coeff)
        if sign < 0:
            c = ctx.neg(c)
        coeffs[exp] = ctx.add(coeffs.get(exp, 0), c)
    if not coeffs:
        return []
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return _upoly.trim(out)
