"""Exact integer and rational linear algebra.

Vectors are tuples of ints (or Fractions); matrices are tuples of row
tuples.  Everything here is dimension-generic and allocation-light: the
polytopes in this package have at most ~14 vertices in dimension <= 4.
"""

from fractions import Fraction
from math import gcd


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def vec_primitive(v):
    """Divide an integer vector by the gcd of its entries (zero vector is
    returned unchanged)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def vec_mat(v, m):
    """Row vector times matrix."""
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0])))


def mat_rank(rows):
    h = hermite_row(rows)[0]
    return sum(1 for r in h if any(r))


def hermite_row(rows):
    """Row-style Hermite normal form with transform.

    Returns (H, U) with U unimodular and U @ rows == H, where H has positive
    pivots, zeros below each pivot, entries above a pivot reduced into
    [0, pivot), and zero rows at the bottom.  H is the unique HNF of the row
    lattice for the given row span, so lattice equality is tuple equality.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    u = [list(r) for r in identity_matrix(nrows)]

    def swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def addmul(dst, src, c):
        if c:
            mi, ms = m[dst], m[src]
            for k in range(ncols):
                mi[k] += c * ms[k]
            ui, us = u[dst], u[src]
            for k in range(nrows):
                ui[k] += c * us[k]

    pivot = 0
    for col in range(ncols):
        if pivot >= nrows:
            break
        # euclidean elimination in this column, rows pivot..nrows-1
        while True:
            nz = [i for i in range(pivot, nrows) if m[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(m[i][col]))
            if i0 != pivot:
                swap(pivot, i0)
            done = True
            for i in range(pivot + 1, nrows):
                if m[i][col]:
                    addmul(i, pivot, -(m[i][col] // m[pivot][col]))
                    if m[i][col]:
                        done = False
            if done:
                break
        if pivot < nrows and m[pivot][col]:
            if m[pivot][col] < 0:
                m[pivot] = [-x for x in m[pivot]]
                u[pivot] = [-x for x in u[pivot]]
            p = m[pivot][col]
            for i in range(pivot):
                addmul(i, pivot, -(m[i][col] // p))
            pivot += 1
    return tuple(tuple(r) for r in m), tuple(tuple(r) for r in u)


def hnf_rows(rows):
    """Row HNF with zero rows dropped (canonical basis of the row lattice)."""
    h, _ = hermite_row(rows)
    return tuple(r for r in h if any(r))


def left_kernel(rows):
    """Canonical basis of {a : a @ rows == 0} as rows of an HNF matrix."""
    h, u = hermite_row(rows)
    ker = [u[i] for i in range(len(h)) if not any(h[i])]
    if not ker:
        return ()
    return hnf_rows(ker)


def frac_matrix(m):
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def mat_inverse(m):
    """Exact inverse of a square matrix, entries returned as Fractions.

    Raises ZeroDivisionError if the matrix is singular.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def mat_det(m):
    """Exact determinant via fraction-free-ish Gaussian elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                c = a[r][col] * inv
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return det


