"""Low-level dense polynomial kernels.

Polynomials are lists of element indices of a ring ``R`` (lowest degree
first, trailing zeros trimmed).  These helpers are shared by the ring
constructors (irreducibility checks) and by :mod:`polycyclic.poly`.
"""

from __future__ import annotations

from itertools import product

from .errors import NonMonicDivisor


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def add(R, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = R.add(out[i], c)
    return trim(out)


def sub(R, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(R.sub(x, y))
    return trim(out)


def neg(R, a):
    return [R.neg(c) for c in a]


def scale(R, c, a):
    return trim([R.mul(c, x) for x in a])


def mul(R, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    radd, rmul = R.add, R.mul
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = radd(out[i + j], rmul(x, y))
    return trim(out)


def divmod_(R, a, b):
    """Division with remainder by ``b`` whose leading coefficient is a unit."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    if lead == R.one:
        inv = R.one
    elif R.is_unit(lead):
        inv = R.inverse(lead)
    else:
        raise NonMonicDivisor("divisor leading coefficient is not a unit")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        if inv != R.one:
            c = R.mul(c, inv)
        q[k - db] = c
        for j in range(db + 1):
            if b[j]:
                r[k - db + j] = R.sub(r[k - db + j], R.mul(c, b[j]))
    return trim(q), trim(r[:db])


def mod(R, a, b):
    return divmod_(R, a, b)[1]


def mulmod(R, a, b, m):
    return mod(R, mul(R, a, b), m)


def powmod(R, a, e, m):
    result = mod(R, [R.one], m)
    base = mod(R, a, m)
    while e:
        if e & 1:
            result = mulmod(R, result, base, m)
        e >>= 1
        if e:
            base = mulmod(R, base, base, m)
    return result


def pow_(R, a, e):
    result = [R.one]
    base = list(a)
    while e:
        if e & 1:
            result = mul(R, result, base)
        e >>= 1
        if e:
            base = mul(R, base, base)
    return result


def evaluate(R, a, x):
    acc = 0
    for c in reversed(a):
        acc = R.add(R.mul(acc, x), c)
    return acc


def derivative(R, a):
    return trim([R.mul(R.from_int(i), a[i]) for i in range(1, len(a))])


def monic(R, a):
    if not a:
        return []
    if a[-1] == R.one:
        return list(a)
    return scale(R, R.inverse(a[-1]), a)


def gcd(R, a, b):
    """Monic gcd over a field."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(R, a, b)
    return monic(R, a)


def compose(R, a, b):
    """a(b(x))."""
    acc = []
    for c in reversed(a):
        acc = add(R, mul(R, acc, b), [c] if c else [])
    return acc


def monic_polys(R, degree):
    """All monic polynomials of the given degree, lower coefficients in index order."""
    for low in product(range(R.size), repeat=degree):
        # product varies the last slot fastest; reverse so the constant term does
        yield list(reversed(low)) + [R.one]


def factor_field(R, f):
    """Factor a nonzero polynomial over a field by trial division.

    Returns ``(unit, [(factor, multiplicity), ...])`` with monic factors in
    order of increasing degree (ties in enumeration order).
    """
    f = trim(f)
    unit = f[-1]
    g = monic(R, f)
    factors = []
    d = 1
    while len(g) - 1 >= 2 * d:
        for cand in monic_polys(R, d):
            mult = 0
            while True:
                q, r = divmod_(R, g, cand)
                if r:
                    break
                g = q
                mult += 1
            if mult:
                factors.append((cand, mult))
            if len(g) - 1 < 2 * d:
                break
        d += 1
    if len(g) > 1:
        # g is irreducible; it may equal an already found factor
        for i, (h, m) in enumerate(factors):
            if h == g:
                factors[i] = (h, m + 1)
                break
        else:
            factors.append((g, 1))
    factors.sort(key=lambda fm: len(fm[0]))
    return unit, factors


def is_irreducible(R, f):
    f = trim(f)
    if len(f) < 2:
        return False
    _, factors = factor_field(R, f)
    return len(factors) == 1 and factors[0][1] == 1
