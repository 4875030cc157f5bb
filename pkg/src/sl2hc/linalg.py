"""Exact linear algebra over the integers for small dense matrices.

Matrices are lists of row lists.  Everything is fraction-free: ranks come
from Bareiss elimination, characteristic polynomials from the
Faddeev-LeVerrier recursion (whose divisions are exact over the integers),
so no floating point or rational normalization enters the spectral
computations built on top.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Matrix = list


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    assert all(len(row) == m for row in a)
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(p):
                    oi[j] += c * bk[j]
    return out


def mat_sub_scalar(a: Matrix, c) -> Matrix:
    """a - c*I."""
    return [[a[i][j] - c if i == j else a[i][j] for j in range(len(a))] for i in range(len(a))]


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def clear_denominators(a: Matrix, extra=()) -> tuple:
    """Scale a rational matrix to integers; returns (integer matrix, scale).

    ``extra`` lists additional rationals whose denominators the scale must
    also clear (eigenvalue candidates, so that scaled candidates stay
    integral).
    """
    dens = [Fraction(x).denominator for row in a for x in row]
    dens += [Fraction(x).denominator for x in extra]
    s = lcm(*dens) if dens else 1
    out = []
    for row in a:
        out_row = []
        for x in row:
            v = Fraction(x) * s
            assert v.denominator == 1
            out_row.append(int(v))
        out.append(out_row)
    return out, s


def rank(a: Matrix) -> int:
    """Rank of an integer matrix via fraction-free Bareiss elimination."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def char_poly(a: Matrix) -> list:
    """Monic characteristic polynomial det(tI - a) of an integer matrix.

    Returned as coefficients [c_0=1, c_1, ..., c_n] of t^n + c_1 t^(n-1) + ...
    via Faddeev-LeVerrier; all intermediate divisions are exact.
    """
    n = len(a)
    coeffs = [1]
    mk = [[0] * n for _ in range(n)]
    ck = 1
    for k in range(1, n + 1):
        # M_k = A*M_{k-1} + c_{k-1} I
        mk = mat_mul(a, mk)
        for i in range(n):
            mk[i][i] += ck
        am = mat_mul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        ck = -tr // k
        coeffs.append(ck)
    return coeffs


def divide_out_root(poly: list, r) -> tuple:
    """Synthetic division of a monic polynomial by (t - r): (quotient, remainder)."""
    out = [poly[0]]
    for c in poly[1:]:
        out.append(c + r * out[-1])
    return out[:-1], out[-1]


def root_multiplicity(poly: list, r) -> tuple:
    """Largest e with (t-r)^e dividing poly; returns (e, poly / (t-r)^e)."""
    e = 0
    while len(poly) > 1:
        q, rem = divide_out_root(poly, r)
        if rem != 0:
            break
        poly = q
        e += 1
    return e, poly


def jordan_block_sizes(a: Matrix, c, mult: int) -> tuple:
    """Jordan block sizes (descending) of integer matrix ``a`` at eigenvalue ``c``.

    ``mult`` is the known algebraic multiplicity; the rank sequence of powers
    of (a - c I) determines the partition.
    """
    n = len(a)
    if mult == 1:
        return (1,)
    b = mat_sub_scalar(a, c)
    ranks = [n]
    power = identity(n)
    while ranks[-1] > n - mult:
        power = mat_mul(power, b)
        ranks.append(rank(power))
        if len(ranks) > n + 1:
            raise AssertionError("rank sequence failed to stabilize")
    if ranks[-1] != n - mult:
        raise AssertionError("rank sequence undershot the algebraic multiplicity")
    # number of blocks of size >= i is ranks[i-1] - ranks[i]
    n_ge = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    n_ge.append(0)
    sizes = []
    for i in range(1, len(n_ge)):
        sizes.extend([i] * (n_ge[i - 1] - n_ge[i]))
    sizes.sort(reverse=True)
    assert sum(sizes) == mult
    return tuple(sizes)
