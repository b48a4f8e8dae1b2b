"""Vectorised kernels over many polynomials at once.

Batches are ``(B, L)`` int arrays of element indices (coefficient ``i`` in
column ``i``); arithmetic goes through the ring's dense tables, so these
helpers need ``ring.size <= TABLE_LIMIT``.  They back the brute-force
oracles (ideal censuses, orthogonality sweeps, weight enumeration).
"""

from __future__ import annotations

import numpy as np

from .errors import TooLarge
from .rings import enum_cap


def all_vectors(R, N):
    """Every vector of length ``N`` over ``R``, index-ordered (little-endian)."""
    total = R.size**N
    if total > enum_cap():
        raise TooLarge(f"{total} vectors exceed the enumeration cap")
    idx = np.arange(total, dtype=np.int64)
    out = np.empty((total, N), dtype=np.int16)
    for i in range(N):
        out[:, i] = idx % R.size
        idx //= R.size
    return out


def keys(A, q):
    """Injective int64 keys for the rows of ``A`` (little-endian base ``q``)."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape[1] == 0:
        return np.zeros(A.shape[0], dtype=np.int64)
    w = q ** np.arange(A.shape[1], dtype=np.int64)
    return A @ w


def add(R, A, B):
    at, _, _ = R.np_tables
    return at[A, B]


def scale(R, c, A):
    _, mt, _ = R.np_tables
    return mt[c][A]


def mulmod(R, A, b, F):
    """Each row of ``A`` times the fixed polynomial ``b``, reduced mod monic ``F``.

    ``b`` is a coefficient sequence (broadcast) or a batch of the same shape as ``A``.
    """
    at, mt, nt = R.np_tables
    A = np.asarray(A, dtype=np.int16)
    Bsz, L = A.shape
    N = len(F) - 1
    b = np.asarray(b, dtype=np.int16)
    bcols = b.shape[-1]
    prod = np.zeros((Bsz, L + bcols - 1 if L and bcols else 1), dtype=np.int16)
    for i in range(L):
        ai = A[:, i]
        for j in range(bcols):
            bj = b[..., j]
            prod[:, i + j] = at[prod[:, i + j], mt[ai, bj]]
    return reduce_mod(R, prod, F)


def reduce_mod(R, P, F):
    at, mt, nt = R.np_tables
    N = len(F) - 1
    P = np.array(P, dtype=np.int16, copy=True)
    if P.shape[1] < N:
        P = np.concatenate([P, np.zeros((P.shape[0], N - P.shape[1]), dtype=np.int16)], axis=1)
    negF = [int(nt[c]) for c in F[:-1]]
    for k in range(P.shape[1] - 1, N - 1, -1):
        c = P[:, k]
        for j, h in enumerate(negF):
            if h:
                P[:, k - N + j] = at[P[:, k - N + j], mt[c, h]]
    return P[:, :N]


def span(R, gens, L):
    """All ``R``-linear combinations of the generator vectors (an ``R``-submodule)."""
    at, mt, _ = R.np_tables
    cap = enum_cap()
    S = np.zeros((1, L), dtype=np.int16)
    q = R.size
    for g in gens:
        g = np.asarray(g, dtype=np.int16)
        if not g.any():
            continue
        multiples = np.unique(mt[np.arange(q)[:, None], g[None, :]], axis=0)
        if len(S) * len(multiples) > 4 * cap:
            raise TooLarge("span enumeration exceeds the cap")
        combo = at[S[:, None, :], multiples[None, :, :]].reshape(-1, L)
        S = np.unique(combo, axis=0)
        if len(S) > cap:
            raise TooLarge("span exceeds the enumeration cap")
    return S


def weights(A):
    return np.count_nonzero(A, axis=1)


def combos(R, coeffs, rows):
    """``coeffs @ rows`` over ``R``: every row of ``coeffs`` combines the fixed ``rows``."""
    at, mt, _ = R.np_tables
    coeffs = np.asarray(coeffs, dtype=np.int16)
    rows = np.asarray(rows, dtype=np.int16)
    acc = np.zeros((coeffs.shape[0], rows.shape[1]), dtype=np.int16)
    for i in range(rows.shape[0]):
        acc = at[acc, mt[coeffs[:, i][:, None], rows[i][None, :]]]
    return acc
