"""Hasse derivatives over arbitrary coefficient rings.

The k-th Hasse derivative divides the k-th formal derivative by ``k!``
symbolically: coefficient ``i`` of ``p^[k]`` is ``C(i+k, k) * p_{i+k}``.  The
binomial is an exact Python integer reduced into the ring afterwards, so
nothing is ever divided by a zero divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import _upoly
from .errors import CtxMismatch
from .poly import Poly
from .rings import RingElem


def hasse_derivative(p, k):
    R = p.ctx
    cs = p.coeffs
    out = [R.mul(R.from_int(comb(i + k, k)), cs[i + k]) for i in range(len(cs) - k)]
    return Poly(R, out)


def formal_derivative(p, k):
    """Ordinary k-th derivative (``k! * p^[k]``)."""
    R = p.ctx
    for _ in range(k):
        p = Poly(R, _upoly.derivative(R, p.coeffs))
    return p


@dataclass(frozen=True)
class HasseTable:
    source: Poly
    rows: tuple

    def __getitem__(self, k):
        return self.rows[k]

    def __len__(self):
        return len(self.rows)


def hasse_table(p, m):
    """Rows ``p^[0] .. p^[m-1]``, each computed on its own."""
    return HasseTable(p, tuple(hasse_derivative(p, k) for k in range(m)))


def hasse_taylor(p, lam, lift=None):
    """Coefficients of ``p(x + lam)``, i.e. ``[p^[k](lam) for k = 0..deg p]``.

    With ``lift`` the derivatives are formed over ``p.ctx`` and evaluated at
    ``lam`` in ``lift.target``.
    """
    if lift is None and lam.ctx != p.ctx:
        raise CtxMismatch("lam is not in the coefficient ring; pass a lift")
    S = lam.ctx
    out = []
    for k in range(max(p.degree + 1, 1)):
        d = hasse_derivative(p, k)
        coeffs = [lift(c) for c in d.coeffs] if lift is not None else d.coeffs
        out.append(RingElem(S, _upoly.evaluate(S, coeffs, lam.value)))
    return out


def shift(p, lam):
    """``p(x + lam)`` by direct substitution; independent of the Hasse path."""
    R = p.ctx
    return Poly(R, _upoly.compose(R, p.coeffs, [lam.value, R.one]))


def hasse_product_check(p, q, k):
    """Whether ``(pq)^[k] == sum_i p^[i] q^[k-i]`` holds exactly."""
    if p.ctx != q.ctx:
        raise CtxMismatch(f"{p.ctx.spec} vs {q.ctx.spec}")
    lhs = hasse_derivative(p * q, k)
    rhs = Poly(p.ctx, [])
    for i in range(k + 1):
        rhs = rhs + hasse_derivative(p, i) * hasse_derivative(q, k - i)
    return lhs == rhs
