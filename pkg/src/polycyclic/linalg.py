"""Exact matrices over finite local rings.

Matrices are lists of rows of element indices.  Elimination always pivots on
a unit (over a local ring an invertible matrix has a unit in every pivot
column); left kernels over chain rings go through a Smith-style reduction.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotLocal, SingularMatrix


def identity(R, n):
    return [[R.one if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n, m):
    return [[0] * m for _ in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def matmul(R, A, B):
    if not A:
        return []
    m = len(B[0]) if B else 0
    Bt = transpose(B)
    add, mul = R.add, R.mul
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = add(acc, mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return out if m else [[] for _ in A]


def vecmat(R, v, A):
    return matmul(R, [list(v)], A)[0]


def kron(R, A, B):
    out = []
    for arow in A:
        for brow in B:
            out.append([R.mul(a, b) for a in arow for b in brow])
    return out


def map_matrix(f, A):
    return [[f(x) for x in row] for row in A]


def _find_unit_pivot(R, M, col, start):
    for i in range(start, len(M)):
        if M[i][col] and R.is_unit(M[i][col]):
            return i
    return None


def inverse(R, A):
    """Gauss-Jordan inverse with unit pivots; raises :class:`SingularMatrix`."""
    n = len(A)
    M = [list(row) + e for row, e in zip(A, identity(R, n))]
    for c in range(n):
        piv = _find_unit_pivot(R, M, c, c)
        if piv is None:
            raise SingularMatrix(f"no unit pivot in column {c}")
        M[c], M[piv] = M[piv], M[c]
        inv = R.inverse(M[c][c])
        M[c] = [R.mul(inv, x) for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def solve_left(R, A, b):
    """Solve ``x A = b`` for a square invertible ``A``."""
    n = len(A)
    M = [list(col) + [bi] for col, bi in zip(transpose(A), b)]
    for c in range(n):
        piv = _find_unit_pivot(R, M, c, c)
        if piv is None:
            raise SingularMatrix(f"no unit pivot in column {c}")
        M[c], M[piv] = M[piv], M[c]
        inv = R.inverse(M[c][c])
        M[c] = [R.mul(inv, x) for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[c])]
    return [row[n] for row in M]


def det(R, A):
    """Determinant: unit-pivot elimination, falling back to Laplace expansion."""
    n = len(A)
    M = [list(row) for row in A]
    d = R.one
    for c in range(n):
        piv = _find_unit_pivot(R, M, c, c)
        if piv is None:
            if any(M[i][c] for i in range(c, n)):
                return det_laplace(R, A)
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = R.neg(d)
        d = R.mul(d, M[c][c])
        inv = R.inverse(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = R.mul(M[i][c], inv)
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[c])]
    return d


def det_laplace(R, A):
    """Division-free Laplace expansion along rows (memoised on column subsets)."""
    return laplace(A, zero=0, one=R.one, add=R.add, sub=R.sub, mul=R.mul)


def laplace(A, zero, one, add, sub, mul):
    """Generic cofactor expansion; entries only need ``add``/``sub``/``mul``."""
    n = len(A)

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return one
        acc = zero
        sign = 0
        for j in range(n):
            if not cols >> j & 1:
                continue
            a = A[row][j]
            term = mul(a, minor(row + 1, cols & ~(1 << j)))
            acc = sub(acc, term) if sign else add(acc, term)
            sign ^= 1
        return acc

    return minor(0, (1 << n) - 1)


# -- fields -------------------------------------------------------------------


def rref(R, rows):
    """Reduced row echelon form over a field; returns ``(rows, pivot_columns)``."""
    M = [list(r) for r in rows]
    pivots = []
    if not M:
        return [], []
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        if M[r][c] != R.one:
            inv = R.inverse(M[r][c])
            M[r] = [R.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(R, rows):
    return len(rref(R, rows)[0])


def right_kernel(R, rows, ncols=None):
    """Basis of ``{x : M x = 0}`` over a field."""
    ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    E, pivots = rref(R, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = R.one
        for row, pc in zip(E, pivots):
            if row[fcol]:
                v[pc] = R.neg(row[fcol])
        basis.append(v)
    return basis


def left_kernel_field(R, M):
    """Basis of ``{x : x M = 0}`` over a field."""
    if not M:
        return []
    return right_kernel(R, transpose(M), len(M))


# -- chain rings --------------------------------------------------------------


def _valuation(R, a):
    if R.is_field:
        return 0 if a else 1
    try:
        return R.valuation(a)
    except AttributeError:
        raise NotLocal(f"{R.spec} is not a chain ring") from None


def exact_div(R, a, b):
    """Some ``c`` with ``c*b == a``; requires ``v(a) >= v(b)`` in a chain ring."""
    if R.is_field:
        return R.mul(a, R.inverse(b))
    v = R.valuation(b)
    if R.valuation(a) < v:
        raise ArithmeticError("not divisible")
    w = R.divide_uniformizer(b, v)
    return R.mul(R.divide_uniformizer(a, v), R.inverse(w))


def uniformizer_power(R, k):
    """``pi^k`` for the chain ring's uniformizer (k >= 0)."""
    if R.is_field:
        return R.one if k == 0 else 0
    length = R.length
    if k >= length:
        return 0
    # pi itself is the element of valuation 1 with unit part 1
    pi = next(a for a in R.elements() if R.valuation(a) == 1 and R.divide_uniformizer(a, 1) == R.one)
    return R.pow(pi, k)


def left_kernel_chain(R, M):
    """Generators of the left kernel ``{x : x M = 0}`` over a chain ring (or field)."""
    if R.is_field:
        return left_kernel_field(R, M)
    nrows = len(M)
    if nrows == 0:
        return []
    ncols = len(M[0])
    A = [list(r) for r in M]
    U = identity(R, nrows)
    length = R.length
    diag_val = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j]:
                    v = R.valuation(A[i][j])
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, i, j = best
        A[t], A[i] = A[i], A[t]
        U[t], U[i] = U[i], U[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        piv = A[t][t]
        for i2 in range(t + 1, nrows):
            if A[i2][t]:
                f = exact_div(R, A[i2][t], piv)
                A[i2] = [R.sub(x, R.mul(f, y)) for x, y in zip(A[i2], A[t])]
                U[i2] = [R.sub(x, R.mul(f, y)) for x, y in zip(U[i2], U[t])]
        for j2 in range(t + 1, ncols):
            if A[t][j2]:
                f = exact_div(R, A[t][j2], piv)
                for row in A:
                    row[j2] = R.sub(row[j2], R.mul(f, row[t]))
        diag_val.append(v)
        t += 1
    gens = []
    for i in range(nrows):
        if i < len(diag_val):
            k = length - diag_val[i]
            if k >= length:
                continue
            c = uniformizer_power(R, k)
            if c == 0:
                continue
            gens.append([R.mul(c, x) for x in U[i]])
        else:
            gens.append(list(U[i]))
    return gens
