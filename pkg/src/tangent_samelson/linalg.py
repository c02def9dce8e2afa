"""Exact dense linear algebra over Q or Q(i).

Matrices are lists (or tuples) of rows. Entries may be Fractions or
GaussianRationals; nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def identity(n, scale=ONE):
    return [[scale if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[ZERO] * n for _ in range(m)]


def matmul(a, b):
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * n
        for k, aik in enumerate(row):
            if aik:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        acc[j] = acc[j] + aik * bk[j]
        out.append(acc)
    return out


def matvec(a, v):
    out = []
    for row in a:
        s = ZERO
        for aij, vj in zip(row, v):
            if aij and vj:
                s = s + aij * vj
        out.append(s)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                m[i] = [x - f * y if y else x for x, y in zip(mi, pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}``, one vector per free column.

    The basis vector for free column f has a 1 in position f and zeros in
    the other free positions, so the result is canonical for a given A.
    """
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    r, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(r, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(a):
    """Exact inverse; raises ``ZeroDivisionError`` when singular."""
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]


def in_span(vectors, v):
    """True when ``v`` lies in the span of ``vectors``."""
    if not vectors:
        return all(not x for x in v)
    n = len(v)
    return rank(list(vectors), n) == rank(list(vectors) + [list(v)], n)
