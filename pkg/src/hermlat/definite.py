"""Short vectors, roots and isometries of definite lattices.

Everything is exact: the Cholesky-type decomposition used by Fincke-Pohst is
kept in Fractions and the coordinate bounds are integer square roots with an
exact correction step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .normal_forms import hermite_basis
from .quadratic import QuadraticLattice, determinant, is_definite, lattice


@dataclass(frozen=True)
class ShortVectorReport:
    norm_target: int
    vectors: tuple[tuple[int, ...], ...]   # one representative per +/- pair

    @property
    def count_total(self) -> int:
        return 2 * len(self.vectors)


def _definite_sign(Q: QuadraticLattice) -> int:
    s = is_definite(Q)
    if s == 0:
        raise ValueError("lattice is not definite")
    return s


def _positive_gram(Q: QuadraticLattice) -> tuple[list[list[Fraction]], int]:
    s = _definite_sign(Q)
    return [[s * x for x in row] for row in Q.gram], s


def _cholesky_q(gram: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Coefficients with ``x^T G x = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2``."""
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _interval(c: Fraction, r: Fraction) -> tuple[int, int]:
    """Integers x with ``(x + c)^2 <= r``, as an inclusive range (possibly empty)."""
    if r < 0:
        return 1, 0
    s = math.isqrt(r.numerator // r.denominator) + 1
    lo = math.floor(-c) - s
    hi = math.ceil(-c) + s
    while lo <= hi and (lo + c) ** 2 > r:
        lo += 1
    while hi >= lo and (hi + c) ** 2 > r:
        hi -= 1
    return lo, hi


def vectors_up_to(gram: Sequence[Sequence], bound) -> list[tuple[tuple[int, ...], Fraction]]:
    """All nonzero ``x`` (one per sign) with ``0 < x^T G x <= bound``; G positive definite."""
    n = len(gram)
    if n == 0:
        return []
    q = _cholesky_q(gram)
    bound = Fraction(bound)
    out: list[tuple[tuple[int, ...], Fraction]] = []
    x = [0] * n

    def centre(i: int) -> Fraction:
        return sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))

    def rec(i: int, remaining: Fraction) -> None:
        c = centre(i)
        lo, hi = _interval(c, remaining / q[i][i])
        for xi in range(lo, hi + 1):
            x[i] = xi
            rem = remaining - q[i][i] * (xi + c) ** 2
            if i == 0:
                if any(x):
                    out.append((tuple(x), bound - rem))
            else:
                rec(i - 1, rem)
        x[i] = 0

    rec(n - 1, bound)
    seen = []
    for v, nrm in out:
        first = next(a for a in v if a)
        if first > 0:
            seen.append((v, nrm))
    seen.sort()
    return seen


def lll_reduce(gram: Sequence[Sequence], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """Exact LLL on a positive definite Gram matrix.

    Returns a unimodular matrix T (rows are the new basis in old coordinates)
    such that ``T G T^T`` is LLL-reduced.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    t = [[int(i == j) for j in range(n)] for i in range(n)]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = g[i][j] - sum((mu[j][k] * mu[i][k] * bstar[k] for k in range(j)), Fraction(0))
                mu[i][j] = s / bstar[j]
            bstar[i] = g[i][i] - sum((mu[i][k] ** 2 * bstar[k] for k in range(i)), Fraction(0))
        return mu, bstar

    k = 1
    mu, bstar = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            c = round(mu[k][j])
            if c:
                t[k] = [a - c * b for a, b in zip(t[k], t[j])]
                g = linalg.congruent(gram, t)
                mu, bstar = gso()
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            t[k], t[k - 1] = t[k - 1], t[k]
            g = linalg.congruent(gram, t)
            mu, bstar = gso()
            k = max(k - 1, 1)
    return t


def short_vectors(Q: QuadraticLattice, norm: int) -> ShortVectorReport:
    """Vectors with ``v^T G v == norm``, exhaustively, one per +/- pair.

    A norm of the wrong sign for the definite lattice yields an empty report.
    Lattices of rank above 8 are LLL-reduced first.
    """
    gram, s = _positive_gram(Q)
    target = Fraction(norm) * s
    if target <= 0:
        return ShortVectorReport(norm, ())
    t = None
    if Q.rank > 8:
        t = lll_reduce(gram)
        gram = linalg.congruent(gram, t)
    found = [v for v, nrm in vectors_up_to(gram, target) if nrm == target]
    if t is not None:
        tt = linalg.transpose(t)
        found = [tuple(linalg.matvec(tt, v)) for v in found]
        found = [v if next(a for a in v if a) > 0 else tuple(-a for a in v) for v in found]
    return ShortVectorReport(norm, tuple(sorted(found)))


def root_count(Q: QuadraticLattice) -> int:
    """Number of vectors of norm -2 (negative definite) or 2 (positive definite)."""
    if Q.rank == 0:
        return 0
    s = _definite_sign(Q)
    return short_vectors(Q, 2 * s).count_total


# ---------------------------------------------------------------------------
# ADE identification

_EXCEPTIONAL = {(6, 72): "E6", (7, 126): "E7", (8, 240): "E8"}


def ade_label(rank: int, roots: int) -> str:
    """Irreducible root system with the given rank and number of roots."""
    if (rank, roots) in _EXCEPTIONAL:
        return _EXCEPTIONAL[(rank, roots)]
    if roots == rank * (rank + 1):
        return f"A{rank}"
    if rank >= 4 and roots == 2 * rank * (rank - 1):
        return f"D{rank}"
    raise ValueError(f"no irreducible root system of rank {rank} with {roots} roots")


def _label_key(label: str) -> tuple[str, int]:
    return label[0], int(label[1:])


@dataclass(frozen=True)
class RootSystem:
    components: tuple[str, ...]
    root_count: int
    root_rank: int
    lattice_rank: int
    index: int | None      # [Q : root sublattice] when the roots have full rank

    @property
    def has_remainder(self) -> bool:
        return self.root_rank < self.lattice_rank or self.index != 1

    def __str__(self) -> str:
        body = " + ".join(self.components) if self.components else "0"
        if self.has_remainder:
            body += f" (root sublattice rank {self.root_rank}/{self.lattice_rank}"
            body += f", index {self.index})" if self.index is not None else ")"
        return body


def root_system_identify(Q: QuadraticLattice) -> RootSystem:
    s = _definite_sign(Q)
    reps = list(short_vectors(Q, 2 * s).vectors)
    parent = list(range(len(reps)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(reps)):
        gi = linalg.matvec(Q.gram, reps[i])
        for j in range(i + 1, len(reps)):
            p = sum(a * b for a, b in zip(gi, reps[j]))
            if p in (1, -1):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(reps)):
        groups.setdefault(find(i), []).append(i)
    labels = []
    for members in groups.values():
        vecs = [reps[i] for i in members]
        labels.append(ade_label(linalg.rank(vecs), 2 * len(vecs)))
    labels.sort(key=_label_key)
    root_rank = linalg.rank(reps) if reps else 0
    index = None
    if root_rank == Q.rank:
        basis = hermite_basis(reps)
        ratio = determinant(lattice(linalg.congruent(Q.gram, basis))) / determinant(Q)
        index = math.isqrt(int(ratio))
    elif Q.rank == 0:
        index = 1
    return RootSystem(tuple(labels), 2 * len(reps), root_rank, Q.rank, index)


# ---------------------------------------------------------------------------
# isometry testing

def find_isometry(Q1: QuadraticLattice, Q2: QuadraticLattice) -> list[list[int]] | None:
    """An integer matrix T with ``T G2 T^T = G1`` (rows: images of Q1's basis), or None."""
    if Q1.rank != Q2.rank:
        return None
    if Q1.rank == 0:
        return []
    s1, s2 = _definite_sign(Q1), _definite_sign(Q2)
    if s1 != s2 or determinant(Q1) != determinant(Q2):
        return None
    g1 = [[s1 * x for x in row] for row in Q1.gram]
    g2 = [[s2 * x for x in row] for row in Q2.gram]
    # map a reduced basis of Q1, then undo the reduction at the end
    red = lll_reduce(g1)
    h1 = linalg.congruent(g1, red)
    n = len(h1)
    pools: dict[Fraction, list[tuple[int, ...]]] = {}
    for nrm in sorted({h1[i][i] for i in range(n)}):
        vecs = [v for v, x in vectors_up_to(g2, nrm) if x == nrm]
        both = vecs + [tuple(-a for a in v) for v in vecs]
        pools[nrm] = sorted(both, key=lambda v: (sum(abs(a) for a in v), v))
    images: list[tuple[int, ...]] = []
    gimg: list[list[Fraction]] = []

    def rec(i: int) -> bool:
        if i == n:
            return True
        for v in pools[h1[i][i]]:
            gv = linalg.matvec(g2, v)
            if all(sum(a * b for a, b in zip(gv, images[j])) == h1[i][j] for j in range(i)):
                images.append(v)
                gimg.append(gv)
                if rec(i + 1):
                    return True
                images.pop()
                gimg.pop()
        return False

    if not rec(0):
        return None
    # rows of `red` express the reduced basis in Q1 coordinates
    t = linalg.matmul(linalg.inverse(red), [list(v) for v in images])
    return linalg.to_int_matrix(t)


def is_isometric(Q1: QuadraticLattice, Q2: QuadraticLattice) -> bool:
    return find_isometry(Q1, Q2) is not None
