"""Exact linear algebra over Q on plain lists of lists.

Matrices are ``list[list[Fraction | int]]``; vectors are lists.  Nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def bilinear(gram: Sequence[Sequence], u: Sequence, v: Sequence):
    """``u^T * gram * v``."""
    return sum(ui * sum(g * vj for g, vj in zip(row, v)) for ui, row in zip(u, gram) if ui)


def congruent(gram: Sequence[Sequence], basis: Sequence[Sequence]) -> Matrix:
    """Gram matrix of the vectors ``basis`` (rows) under ``gram``."""
    gb = [matvec(gram, v) for v in basis]
    return [[sum(x * y for x, y in zip(u, w)) for w in gb] for u in basis]


def scale(a: Sequence[Sequence], c) -> Matrix:
    return [[c * x for x in row] for row in a]


def block_diag(*blocks: Sequence[Sequence]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def is_integral_matrix(a: Sequence[Sequence]) -> bool:
    return all(Fraction(x).denominator == 1 for row in a for x in row)


def to_int_matrix(a: Sequence[Sequence]) -> list[list[int]]:
    if not is_integral_matrix(a):
        raise ValueError("matrix has non-integer entries")
    return [[int(Fraction(x)) for x in row] for row in a]


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def determinant(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        piv = m[k][k]
        det *= piv
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                rk, ri = m[k], m[i]
                for j in range(k, n):
                    ri[j] -= f * rk[j]
    return det


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[k], m[p] = m[p], m[k]
        piv = m[k][k]
        m[k] = [x / piv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:] for row in m]


def rank(a: Sequence[Sequence]) -> int:
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_left(basis: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i basis[i] = v``, or None if v is not in the span."""
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in v) else None
    n = len(v)
    # augmented system: columns are basis vectors
    m = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    if any(m[i][k] != 0 for i in range(r, n)):
        return None
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        coeffs[c] = m[i][k]
    return coeffs


def symmetric_diagonalize(gram: Sequence[Sequence]) -> tuple[list[Fraction], Matrix]:
    """Congruence diagonalization over Q.

    Returns ``(diag, basis)`` where the rows of ``basis`` are vectors with
    ``basis * gram * basis^T = diag(diag)``.  A zero diagonal pivot is
    repaired by adding a row/column with a nonzero off-diagonal entry, so the
    elimination never needs square roots.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag: list[Fraction] = []
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                diag.extend(Fraction(0) for _ in range(k, n))
                break
            i, j = pair
            # v_i <- v_i + v_j makes the (i,i) entry 2*a[i][j] != 0
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            p[i] = [x + y for x, y in zip(p[i], p[j])]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
            p[k], p[piv] = p[piv], p[k]
        d = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
                p[i] = [x - f * y for x, y in zip(p[i], p[k])]
        diag.append(d)
    return diag, p


def inertia(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of the symmetric form."""
    diag, _ = symmetric_diagonalize(gram)
    return (sum(1 for x in diag if x > 0), sum(1 for x in diag if x < 0),
            sum(1 for x in diag if x == 0))
