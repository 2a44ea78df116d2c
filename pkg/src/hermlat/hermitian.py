"""Hermitian lattices over the ring of integers of an imaginary quadratic field.

The form is linear in the first argument and conjugate-linear in the second,
``<v, w> = sum_ij v_i G_ij conj(w_j)``.  With this convention and the
interleaved trace basis ``(e_1, theta*e_1, e_2, theta*e_2, ...)`` the Gram
matrices A, B, C, D of the Gaussian/Eisenstein examples reproduce their
published trace forms entry for entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .exact import (
    EUCLIDEAN_D,
    FieldElement,
    check_discriminant_seed,
    is_ring_integer,
    is_unit,
    ring_basis,
    ring_divmod,
    trace_q,
)

FVector = list[FieldElement]
FMatrix = list[list[FieldElement]]


def _fe(x, d: int) -> FieldElement:
    if isinstance(x, FieldElement):
        if x.d != d:
            raise ValueError(f"entry lives in d={x.d}, expected d={d}")
        return x
    return FieldElement.rational(x, d)


@dataclass(frozen=True)
class HermitianLattice:
    """Free O_F-module with Hermitian Gram matrix ``gram`` (rank may be 0)."""

    d: int
    gram: tuple[tuple[FieldElement, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        check_discriminant_seed(self.d)
        g = tuple(tuple(_fe(x, self.d) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if g[j][i] != g[i][j].conjugate():
                    raise ValueError(f"Gram matrix not Hermitian at ({i}, {j})")
        object.__setattr__(self, "gram", g)
        if n and trace_determinant(self) == 0:
            raise ValueError("Hermitian form is degenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def form(self, v: Sequence, w: Sequence) -> FieldElement:
        return hermitian_form(self.gram, v, w, self.d)

    def rescale(self, a) -> HermitianLattice:
        return HermitianLattice(self.d, tuple(tuple(x * a for x in row) for row in self.gram))

    def __add__(self, other: HermitianLattice) -> HermitianLattice:
        return direct_sum(self, other)


@dataclass(frozen=True)
class HermitianMap:
    """Matrix of an F-linear map acting on column coordinate vectors."""

    matrix: tuple[tuple[FieldElement, ...], ...]

    def __call__(self, v: Sequence[FieldElement]) -> FVector:
        return [sum((g * x for g, x in zip(row, v)), FieldElement.rational(0, row[0].d))
                for row in self.matrix]

    def compose(self, other: HermitianMap) -> HermitianMap:
        return HermitianMap(_tuple(_fmatmul(self.matrix, other.matrix)))


def _tuple(m) -> tuple:
    return tuple(tuple(row) for row in m)


def _fmatmul(a, b) -> FMatrix:
    d = a[0][0].d
    zero = FieldElement.rational(0, d)
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), zero) for col in bt] for row in a]


def hermitian_form(gram, v: Sequence, w: Sequence, d: int) -> FieldElement:
    total = FieldElement.rational(0, d)
    for i, vi in enumerate(v):
        vi = _fe(vi, d)
        if vi.is_zero():
            continue
        for j, wj in enumerate(w):
            wj = _fe(wj, d)
            if not wj.is_zero():
                total = total + vi * gram[i][j] * wj.conjugate()
    return total


def direct_sum(*lattices: HermitianLattice) -> HermitianLattice:
    d = lattices[0].d
    n = sum(L.rank for L in lattices)
    zero = FieldElement.rational(0, d)
    g = [[zero] * n for _ in range(n)]
    off = 0
    for L in lattices:
        if L.d != d:
            raise ValueError("direct sum of lattices over different fields")
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        off += L.rank
    return HermitianLattice(d, _tuple(g))


def trace_gram(L: HermitianLattice) -> list[list[Fraction]]:
    """Gram matrix of Tr<,> on the interleaved Z-basis ``e_i, theta*e_i``."""
    theta = ring_basis(L.d).theta
    powers = (FieldElement.rational(1, L.d), theta)
    conj_powers = tuple(p.conjugate() for p in powers)
    n = L.rank
    t = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            gij = L.gram[i][j]
            for a in range(2):
                for b in range(2):
                    t[2 * i + a][2 * j + b] = trace_q(powers[a] * gij * conj_powers[b])
    return t


def trace_determinant(L: HermitianLattice) -> Fraction:
    return linalg.determinant(trace_gram(L))


def to_trace_coords(v: Sequence[FieldElement]) -> list[Fraction]:
    """Coordinates of an O_F-vector in the interleaved Z-basis."""
    out: list[Fraction] = []
    for x in v:
        out.extend(x.basis_coords())
    return out


def from_trace_coords(z: Sequence, d: int) -> FVector:
    return [FieldElement.from_basis(z[2 * i], z[2 * i + 1], d) for i in range(len(z) // 2)]


def is_integral(L: HermitianLattice) -> bool:
    """True iff ``L`` lies in its trace dual, i.e. Tr<v, w> is integral on L."""
    return linalg.is_integral_matrix(trace_gram(L))


def is_even(L: HermitianLattice) -> bool:
    if not is_integral(L):
        raise ValueError("evenness is only defined for integral Hermitian lattices")
    return all(L.gram[i][i].is_rational() and L.gram[i][i].a.denominator == 1
               for i in range(L.rank))


def signature(L: HermitianLattice) -> tuple[int, int]:
    p, q, _ = linalg.inertia(trace_gram(L))
    return p // 2, q // 2


def tau_reflection(L: HermitianLattice, r: Sequence, xi: FieldElement) -> HermitianMap:
    """Matrix of ``l -> l - (1 - xi) <l, r>/<r, r> r``."""
    d = L.d
    r = [_fe(x, d) for x in r]
    xi = _fe(xi, d)
    if not is_unit(xi):
        raise ValueError(f"{xi} is not a unit of O_F")
    if xi == 1:
        raise ValueError("xi = 1 gives the identity, not a reflection")
    rr = L.form(r, r)
    if rr.is_zero():
        raise ValueError("reflection vector is isotropic")
    c = (1 - xi) / rr
    # <l, r> = sum_j l_j * (G conj(r))_j
    gr = [sum((L.gram[j][k] * r[k].conjugate() for k in range(L.rank)), FieldElement.rational(0, d))
          for j in range(L.rank)]
    n = L.rank
    m = [[(FieldElement.rational(int(i == j), d) - c * r[i] * gr[j]) for j in range(n)]
         for i in range(n)]
    return HermitianMap(_tuple(m))


def identity_map(n: int, d: int) -> HermitianMap:
    return HermitianMap(_tuple([[FieldElement.rational(int(i == j), d) for j in range(n)]
                                for i in range(n)]))


def is_unitary(L: HermitianLattice, g: HermitianMap) -> bool:
    """``g`` preserves the form and has entries in O_F."""
    if not all(is_ring_integer(x) for row in g.matrix for x in row):
        return False
    gt = [list(col) for col in zip(*g.matrix)]
    gbar = [[x.conjugate() for x in row] for row in g.matrix]
    lhs = _fmatmul(_fmatmul(gt, [list(r) for r in L.gram]), gbar)
    return all(lhs[i][j] == L.gram[i][j] for i in range(L.rank) for j in range(L.rank))


def trace_matrix(g: HermitianMap, d: int) -> list[list[Fraction]]:
    """The Z-matrix of ``g`` on the interleaved trace basis (acts on columns)."""
    theta = ring_basis(d).theta
    powers = (FieldElement.rational(1, d), theta)
    n = len(g.matrix)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        for a in range(2):
            for i in range(n):
                x, y = (powers[a] * g.matrix[i][j]).basis_coords()
                out[2 * i][2 * j + a] = x
                out[2 * i + 1][2 * j + a] = y
    return out


def in_discriminant_kernel(L: HermitianLattice, g: HermitianMap) -> bool:
    """``g`` acts trivially on ``L^dual / L`` (checked on the trace lattice)."""
    if not is_unitary(L, g):
        raise ValueError("in_discriminant_kernel requires a unitary map")
    t = trace_gram(L)
    gz = trace_matrix(g, L.d)
    n = len(t)
    diff = [[gz[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    return linalg.is_integral_matrix(linalg.matmul(diff, linalg.inverse(t)))


def _field_rank(vectors: Sequence[Sequence[FieldElement]]) -> int:
    m = [list(v) for v in vectors]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            if not m[i][c].is_zero():
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _ring_echelon(rows: list[list[FieldElement]], ncols: int) -> tuple[list[list[FieldElement]], int]:
    """Row echelon over a norm-Euclidean O_F on the first ``ncols`` columns."""
    m = [list(r) for r in rows]
    nrows = len(m)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if not m[i][c].is_zero()]
            if not nz:
                break
            p = min(nz, key=lambda i: m[i][c].norm())
            m[r], m[p] = m[p], m[r]
            clean = True
            for i in range(r + 1, nrows):
                if not m[i][c].is_zero():
                    q, _ = ring_divmod(m[i][c], m[r][c])
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if not m[i][c].is_zero():
                        clean = False
            if clean:
                break
        if any(not m[i][c].is_zero() for i in range(r, nrows)):
            r += 1
    return m, r


def hermitian_complement(ambient: HermitianLattice, sub: Sequence[Sequence], return_basis: bool = False):
    """Saturated orthogonal complement ``{x in L : <x, s> = 0 for s in sub}``.

    Needs O_F to be norm-Euclidean (d in -1, -2, -3, -7, -11); other fields
    should fall back to the Z-complement of the trace lattice.
    """
    d = ambient.d
    if d not in EUCLIDEAN_D:
        raise ValueError(f"hermitian_complement needs a Euclidean O_F; d={d} is not")
    n = ambient.rank
    sub = [[_fe(x, d) for x in s] for s in sub]
    if any(len(s) != n for s in sub):
        raise ValueError("sublattice vectors have the wrong length")
    if not all(is_ring_integer(x) for s in sub for x in s):
        raise ValueError("sublattice generators must have O_F coordinates")
    if _field_rank(sub) != len(sub):
        raise ValueError("sublattice generators are linearly dependent")
    zero = FieldElement.rational(0, d)
    # x is orthogonal to s iff sum_j x_j (G conj s)_j = 0
    eqs = [[sum((ambient.gram[j][k] * s[k].conjugate() for k in range(n)), zero) for j in range(n)]
           for s in sub]
    scaled = []
    for row in eqs:
        den = math.lcm(*(c.denominator for x in row for c in x.basis_coords()))
        scaled.append([x * den for x in row])
    k = len(scaled)
    one = FieldElement.rational(1, d)
    aug = [[scaled[r][c] for r in range(k)] + [one if c == j else zero for j in range(n)]
           for c in range(n)]
    ech, rk = _ring_echelon(aug, k)
    basis = [row[k:] for row in ech[rk:]]
    gram = _tuple([[hermitian_form(ambient.gram, u, v, d) for v in basis] for u in basis])
    comp = HermitianLattice(d, gram)
    return (comp, basis) if return_basis else comp


def reflection_alpha(L: HermitianLattice, l: Sequence, r: Sequence) -> Fraction:
    """``2 (l, r) / (r, r)`` for the trace form, i.e. the coefficient of the
    quadratic reflection ``sigma_r(l) = l - alpha r``."""
    d = L.d
    l = [_fe(x, d) for x in l]
    r = [_fe(x, d) for x in r]
    rr = trace_q(L.form(r, r))
    if rr == 0:
        raise ValueError("reflection vector is isotropic")
    return 2 * trace_q(L.form(l, r)) / rr
