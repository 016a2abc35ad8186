"""Division-controlled exact linear algebra on lists of ints or Fractions.

All routines work over the integers (every division is exact) and over the
rationals when entries are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, rem = divmod(a, b)
        if rem:
            raise ArithmeticError("non-exact Bareiss division")
        return q
    return Fraction(a) / b


def det_bareiss(rows) -> int | Fraction:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = _div(ri[j] * pk - mik * rk[j], prev)
        prev = pk
    return sign * m[n - 1][n - 1]


def rank_exact(rows) -> int:
    """Rank via fraction-free row echelon reduction."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pk = m[rank][c]
        rr = m[rank]
        for i in range(rank + 1, nrows):
            ri = m[i]
            mic = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = _div(ri[j] * pk - mic * rr[j], prev)
            ri[c] = 0
        prev = pk
        rank += 1
    return rank


def charpoly_berkowitz(rows) -> list:
    """Coefficients of det(xI - A), highest degree first (monic).

    Berkowitz's algorithm uses only ring operations, so integer input gives
    integer coefficients with no division at all.
    """
    n = len(rows)
    if n == 0:
        return [1]
    a = [list(r) for r in rows]
    coeffs = [1, -a[0][0]]
    for r in range(1, n):
        # leading (r+1)x(r+1) block = [[M, S], [R, d]]
        R = a[r][:r]
        S = [a[i][r] for i in range(r)]
        q = [1, -a[r][r]]
        v = S
        for _ in range(r):
            q.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            new.append(sum(q[i - j] * coeffs[j] for j in range(min(i, r) + 1)))
        coeffs = new
    return coeffs


def minor(rows, i: int, j: int):
    return [r[:j] + r[j + 1 :] for t, r in enumerate(rows) if t != i]


# -- polynomials: coefficient lists, highest degree first ------------------


def _trim(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def poly_eval(p, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def poly_derivative(p):
    d = len(p) - 1
    return _trim([c * (d - i) for i, c in enumerate(p[:-1])]) if d > 0 else [0]


def _poly_rem(a, b):
    a = [Fraction(c) for c in _trim(a)]
    b = _trim(b)
    lead = Fraction(b[0])
    while len(a) >= len(b) and any(a):
        q = a[0] / lead
        for i in range(len(b)):
            a[i] -= q * b[i]
        a = _trim(a[1:]) if len(a) > 1 else [Fraction(0)]
    return _trim(a)


def poly_gcd(a, b):
    """Monic gcd over the rationals."""
    a, b = _trim(list(a)), _trim(list(b))
    while any(b):
        a, b = b, _poly_rem(a, b)
    lead = Fraction(a[0])
    return [Fraction(c) / lead for c in a]


def distinct_root_count(p) -> int:
    """Number of distinct complex roots (degree of the square-free part)."""
    p = _trim(list(p))
    if len(p) <= 1:
        return 0
    return (len(p) - 1) - (len(poly_gcd(p, poly_derivative(p))) - 1)


def max_root_multiplicity(p) -> int:
    """Largest multiplicity of any root, via the chain p, gcd(p, p'), ..."""
    p = _trim(list(p))
    mult = 0
    while len(p) > 1:
        p = poly_gcd(p, poly_derivative(p))
        mult += 1
    return mult


def is_positive_definite(rows) -> bool:
    """Exact test by symmetric elimination; every pivot must be positive."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    for k in range(n):
        piv = m[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                for j in range(k + 1, n):
                    m[i][j] -= f * m[k][j]
    return True
