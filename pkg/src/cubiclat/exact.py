"""Exact integer and rational matrix helpers.

Everything in this module works on plain lists of lists holding Python ints
(or Fractions where stated) and never touches floating point.  Matrices are
row-major; "columns of V" etc. always means ``[row[j] for row in V]``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]
FracMatrix = list[list[Fraction]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(a):
    return [list(row) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v, a):
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))]


def column(a, j):
    return [row[j] for row in a]


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def bareiss_det(a: IntMatrix) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_matrix(a)
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def frac_det(a) -> Fraction:
    """Rational determinant by Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] * inv
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def frac_inverse(a) -> FracMatrix:
    """Inverse of a square matrix over the rationals (Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[k], m[pivot] = m[pivot], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:] for row in m]


def rational_rank(a) -> int:
    """Rank over Q of a rational matrix."""
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        for i in range(rank + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] * inv
                for j in range(c, cols):
                    m[i][j] -= f * m[rank][j]
        rank += 1
        if rank == rows:
            break
    return rank


def solve_exact(a, b):
    """Solve a x = b over Q for square nonsingular a; returns list of Fractions."""
    inv = frac_inverse(a)
    return [sum(Fraction(r[j]) * Fraction(b[j]) for j in range(len(b))) for r in inv]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(a) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form of an integer m x n matrix.

    Returns (d, u, v) with u @ a @ v = d, u and v unimodular, d diagonal with
    nonnegative entries d[0][0] | d[1][1] | ...
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = copy_matrix(a)
    u = identity(m)
    v = identity(n)

    def row_op(i, j, s, t, x, y):
        # (row i, row j) <- (s*row_i + t*row_j, x*row_i + y*row_j)
        for mat in (d, u):
            ri, rj = mat[i], mat[j]
            for k in range(len(ri)):
                ri[k], rj[k] = s * ri[k] + t * rj[k], x * ri[k] + y * rj[k]

    def col_op(i, j, s, t, x, y):
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = s * row[i] + t * row[j], x * row[i] + y * row[j]

    t = 0
    while t < min(m, n):
        # find a pivot
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            # clear column t; plain subtraction when the pivot divides (leaves
            # row t untouched), xgcd combine otherwise (shrinks the pivot)
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    if d[i][t] % d[t][t] == 0:
                        row_op(t, i, 1, 0, -(d[i][t] // d[t][t]), 1)
                    else:
                        g, s, w = _xgcd(d[t][t], d[i][t])
                        p, q = d[t][t] // g, d[i][t] // g
                        row_op(t, i, s, w, -q, p)
            # clear row t in the same way
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    if d[t][j] % d[t][t] == 0:
                        col_op(t, j, 1, 0, -(d[t][j] // d[t][t]), 1)
                    else:
                        g, s, w = _xgcd(d[t][t], d[t][j])
                        p, q = d[t][t] // g, d[t][j] // g
                        col_op(t, j, s, w, -q, p)
            if all(d[i][t] == 0 for i in range(t + 1, m)):
                break
        # divisibility fix-up: pivot must divide every remaining entry
        stray = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    stray = i
                    break
            if stray:
                break
        if stray is not None:
            row_op(t, stray, 1, 1, 0, 1)
            continue
        t += 1

    for i in range(min(m, n)):
        if d[i][i] < 0:
            d[i][i] = -d[i][i]
            u[i] = [-x for x in u[i]]
    return d, u, v


def snf_diagonal(a) -> list[int]:
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def integer_kernel(a) -> IntMatrix:
    """Saturated basis of {x in Z^n : a x = 0}, returned as a list of columns.

    Result is an n x k matrix (list of k column vectors of length n).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    d, _, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    return [column(v, j) for j in range(rank, n)]


def hermite_column_basis(a) -> IntMatrix:
    """Canonical basis of the column span of an integer matrix.

    Column-style Hermite form: returns a list of linearly independent columns
    (each a list of length m) in echelon order, each column's first nonzero
    entry (its pivot) positive, and every other column reduced into
    [0, pivot) at that pivot's row.
    """
    m = len(a)
    by_pivot: dict[int, list[int]] = {}
    for j in range(len(a[0]) if m else 0):
        c = column(a, j)
        while True:
            lead = next((i for i in range(m) if c[i] != 0), None)
            if lead is None:
                break
            b = by_pivot.get(lead)
            if b is None:
                by_pivot[lead] = c
                break
            g, s, t = _xgcd(b[lead], c[lead])
            bp, cp = b[lead] // g, c[lead] // g
            for i in range(lead, m):
                b[i], c[i] = s * b[i] + t * c[i], -cp * b[i] + bp * c[i]
    basis = [by_pivot[p] for p in sorted(by_pivot)]
    for b in basis:
        p = next(i for i in range(m) if b[i] != 0)
        if b[p] < 0:
            for i in range(m):
                b[i] = -b[i]
    for b in reversed(basis):
        p = next(i for i in range(m) if b[i] != 0)
        for c in basis:
            if c is not b:
                q = c[p] // b[p]
                if q:
                    for i in range(m):
                        c[i] -= q * b[i]
    return basis


def gcd_list(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g


def lcm_list(values) -> int:
    out = 1
    for x in values:
        x = abs(x)
        if x:
            out = out * x // gcd(out, x)
    return out
