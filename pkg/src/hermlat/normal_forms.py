"""Hermite and Smith normal forms over Z with exact Python integers."""

from __future__ import annotations

from typing import Sequence


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def row_echelon(a: Sequence[Sequence[int]], ncols: int | None = None
                ) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form (Hermite style) by unimodular row operations.

    Only the first ``ncols`` columns drive the pivoting; any further columns
    are carried along.  Returns the transformed rows and the pivot columns.
    Pivots are positive and entries above each pivot are reduced mod it.
    """
    m = [list(map(int, row)) for row in a]
    if not m:
        return m, []
    ncols = len(m[0]) if ncols is None else ncols
    rows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if m[i][c] != 0]
        if not nz:
            continue
        # gcd-combine all nonzero entries of column c into row r
        p = min(nz, key=lambda i: abs(m[i][c]))
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            if m[i][c] == 0:
                continue
            x, y = m[r][c], m[i][c]
            g, s, t = _xgcd(x, y)
            u, v = x // g, y // g
            ri, rr = m[i], m[r]
            m[r] = [s * p_ + t * q_ for p_, q_ in zip(rr, ri)]
            m[i] = [-v * p_ + u * q_ for p_, q_ in zip(rr, ri)]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        piv = m[r][c]
        for i in range(r):
            q = m[i][c] // piv
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def hermite_basis(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Hermite normal form basis of the Z-span of ``vectors`` (zero rows dropped)."""
    h, piv = row_echelon(vectors)
    return h[:len(piv)]


def integer_kernel(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Saturated Z-basis of ``{x in Z^n : M x = 0}``.

    Runs row echelon on ``[M^T | I]``: the identity part of every row whose
    ``M^T`` part vanishes is a kernel vector, and because the transform is
    unimodular these rows form a basis of a primitive sublattice.
    """
    if not m:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        n = ncols
        return [[int(i == j) for j in range(n)] for i in range(n)]
    n = len(m[0])
    k = len(m)
    aug = [[int(m[r][c]) for r in range(k)] + [int(c == j) for j in range(n)] for c in range(n)]
    h, piv = row_echelon(aug, ncols=k)
    basis = [row[k:] for row in h[len(piv):]]
    return hermite_basis(basis) if basis else []


def saturation(vectors: Sequence[Sequence[int]], n: int | None = None) -> list[list[int]]:
    """Basis of ``Q-span(vectors) ∩ Z^n``."""
    if not vectors:
        return []
    n = len(vectors[0]) if n is None else n
    perp = integer_kernel(vectors)
    if not perp:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    return integer_kernel(perp)


def smith_form(a: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Smith normal form ``U * A * V = D``.

    Returns ``(diag, U, V)`` with ``diag`` the nonzero-or-zero diagonal of D
    (length ``min(rows, cols)``), each entry dividing the next, and U, V
    unimodular.
    """
    m = [list(map(int, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, s, t, p, q):
        # (row_i, row_j) <- (s*ri + t*rj, p*ri + q*rj)
        for mat in (m, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [s * x + t * y for x, y in zip(ri, rj)]
            mat[j] = [p * x + q * y for x, y in zip(ri, rj)]

    def col_op(i, j, s, t, p, q):
        for mat in (m, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i] = s * x + t * y
                row[j] = p * x + q * y

    for k in range(min(rows, cols)):
        entries = [(abs(m[i][j]), i, j) for i in range(k, rows) for j in range(k, cols) if m[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        if i0 != k:
            m[i0], m[k] = m[k], m[i0]
            u[i0], u[k] = u[k], u[i0]
        if j0 != k:
            for mat in (m, v):
                for row in mat:
                    row[j0], row[k] = row[k], row[j0]
        while True:
            # clear column k, then row k; the pivot only ever shrinks
            for i in range(k + 1, rows):
                x, y = m[k][k], m[i][k]
                if y == 0:
                    continue
                if y % x == 0:
                    row_op(k, i, 1, 0, -(y // x), 1)
                else:
                    g, s, t = _xgcd(x, y)
                    row_op(k, i, s, t, -(y // g), x // g)
            for j in range(k + 1, cols):
                x, y = m[k][k], m[k][j]
                if y == 0:
                    continue
                if y % x == 0:
                    col_op(k, j, 1, 0, -(y // x), 1)
                else:
                    g, s, t = _xgcd(x, y)
                    col_op(k, j, s, t, -(y // g), x // g)
            if any(m[i][k] for i in range(k + 1, rows)):
                continue
            piv = m[k][k]
            bad = next((i for i in range(k + 1, rows) for j in range(k + 1, cols)
                        if m[i][j] % piv), None)
            if bad is None:
                break
            # fold the offending row into row k; the next pass lowers the pivot
            row_op(k, bad, 1, 1, 0, 1)
        if m[k][k] < 0:
            m[k] = [-x for x in m[k]]
            u[k] = [-x for x in u[k]]
    diag = [m[i][i] for i in range(min(rows, cols))]
    return diag, u, v


def elementary_divisors(a: Sequence[Sequence[int]]) -> list[int]:
    diag, _, _ = smith_form(a)
    return diag


def is_primitive_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the rows are independent and span a saturated sublattice."""
    if not vectors:
        return True
    divs = elementary_divisors(vectors)
    return len(divs) == len(vectors) and all(x == 1 for x in divs)
