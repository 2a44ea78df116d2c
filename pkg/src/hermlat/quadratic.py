"""Z-lattices with a rational symmetric Gram matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg
from .hermitian import HermitianLattice, trace_gram
from .normal_forms import hermite_basis, smith_form


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int

    def __iter__(self):
        return iter((self.positive, self.negative))

    def __str__(self) -> str:
        return f"({self.positive},{self.negative})"


@dataclass(frozen=True)
class DiscriminantGroup:
    """``L^dual / L`` as a list of invariant factors, each dividing the next."""

    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def length(self) -> int:
        return len(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{n}" for n in self.invariant_factors)


@dataclass(frozen=True)
class QuadraticLattice:
    gram: tuple[tuple[Fraction, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if not linalg.is_symmetric(g):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        return linalg.bilinear(self.gram, u, v)

    def norm(self, v: Sequence) -> Fraction:
        return self.pair(v, v)

    def int_gram(self) -> list[list[int]]:
        return linalg.to_int_matrix(self.gram)

    def __add__(self, other: QuadraticLattice) -> QuadraticLattice:
        return direct_sum(self, other)

    def __str__(self) -> str:
        return self.name or f"QuadraticLattice(rank={self.rank})"


def lattice(gram: Sequence[Sequence], name: str = "") -> QuadraticLattice:
    return QuadraticLattice(tuple(tuple(row) for row in gram), name)


def trace_form(H: HermitianLattice) -> QuadraticLattice:
    """Underlying Z-lattice of ``H`` with the form Tr_{F/Q}<,>."""
    return lattice(trace_gram(H), f"({H.name})_Q" if H.name else "")


def determinant(Q: QuadraticLattice) -> Fraction:
    return linalg.determinant(Q.gram)


def signature(Q: QuadraticLattice) -> Signature:
    p, q, z = linalg.inertia(Q.gram)
    if z:
        raise ValueError("signature of a degenerate lattice")
    return Signature(p, q)


def is_integral(Q: QuadraticLattice) -> bool:
    return linalg.is_integral_matrix(Q.gram)


def is_even(Q: QuadraticLattice) -> bool:
    return is_integral(Q) and all(Q.gram[i][i] % 2 == 0 for i in range(Q.rank))


def is_unimodular(Q: QuadraticLattice) -> bool:
    return is_integral(Q) and abs(determinant(Q)) == 1


def is_definite(Q: QuadraticLattice) -> int:
    """+1 for positive definite, -1 for negative definite, 0 otherwise."""
    p, q, z = linalg.inertia(Q.gram)
    if z:
        return 0
    if q == 0:
        return 1
    if p == 0:
        return -1
    return 0


def discriminant_group(Q: QuadraticLattice) -> DiscriminantGroup:
    if not is_integral(Q):
        raise ValueError("discriminant group needs an integral lattice")
    if Q.rank and determinant(Q) == 0:
        raise ValueError("discriminant group of a degenerate lattice")
    diag, _, _ = smith_form(Q.int_gram())
    return DiscriminantGroup(tuple(abs(x) for x in diag if abs(x) != 1))


def ell_invariant(Q: QuadraticLattice) -> int:
    """Minimal number of generators of the discriminant group."""
    return discriminant_group(Q).length


def discriminant_elements(Q: QuadraticLattice) -> list[list[Fraction]]:
    """Coset representatives of ``Q^dual / Q`` in the coordinates of Q's basis."""
    g = Q.int_gram()
    diag, u, _ = smith_form(g)
    # G x in Z^n  <=>  x = G^-1 U^-1 w,  w running over Z^n / D Z^n
    ginv = linalg.inverse(g)
    uinv = linalg.inverse(u)
    m = linalg.matmul(ginv, uinv)
    out = []
    for w in product(*(range(abs(di)) for di in diag)):
        x = linalg.matvec(m, w)
        out.append([xi - math.floor(xi) for xi in x])
    return out


def rescale(Q: QuadraticLattice, a: int) -> QuadraticLattice:
    if a == 0:
        raise ValueError("rescaling by zero")
    if a == 1:
        return Q
    name = f"{Q.name}({a})" if Q.name else ""
    return lattice(linalg.scale(Q.gram, a), name)


def direct_sum(*lats: QuadraticLattice) -> QuadraticLattice:
    name = " + ".join(L.name for L in lats) if all(L.name for L in lats) else ""
    return lattice(linalg.block_diag(*(L.gram for L in lats)), name)


def sigma_reflection(Q: QuadraticLattice, r: Sequence[int]) -> list[list[Fraction]]:
    """Matrix of ``l -> l - 2 (l, r)/(r, r) r`` acting on column vectors."""
    rr = Q.norm(r)
    if rr == 0:
        raise ValueError("reflection in an isotropic vector")
    gr = linalg.matvec(Q.gram, r)
    n = Q.rank
    return [[Fraction(int(i == j)) - Fraction(2) * r[i] * gr[j] / rr for j in range(n)]
            for i in range(n)]


def is_isometry(Q: QuadraticLattice, g: Sequence[Sequence]) -> bool:
    lhs = linalg.matmul(linalg.matmul(linalg.transpose(g), Q.gram), g)
    return all(lhs[i][j] == Q.gram[i][j] for i in range(Q.rank) for j in range(Q.rank))


def positive_subspace(Q: QuadraticLattice) -> list[list[Fraction]]:
    """Basis of a maximal positive definite rational subspace.

    Fixed by the elimination order of :func:`linalg.symmetric_diagonalize`,
    so the orientation reference is reproducible.
    """
    diag, basis = linalg.symmetric_diagonalize(Q.gram)
    return [v for x, v in zip(diag, basis) if x > 0]


def in_O_plus(Q: QuadraticLattice, g: Sequence[Sequence]) -> bool:
    """Whether ``g`` preserves the orientation of positive definite subspaces.

    The reference subspace P comes from :func:`positive_subspace`; ``g(P)`` is
    projected back onto P along its orthogonal complement and the sign of
    the determinant of that projection decides membership.
    """
    if not is_isometry(Q, g):
        raise ValueError("in_O_plus expects an isometry of the lattice")
    P = positive_subspace(Q)
    if not P:
        return True
    gP = [linalg.matvec(g, p) for p in P]
    gram_p = linalg.congruent(Q.gram, P)
    cross = [[Q.pair(p, w) for w in gP] for p in P]
    proj = linalg.matmul(linalg.inverse(gram_p), cross)
    return linalg.determinant(proj) > 0


def in_tilde_O_plus(Q: QuadraticLattice, g: Sequence[Sequence]) -> bool:
    """Membership in the discriminant kernel of O^+."""
    if not linalg.is_integral_matrix(g):
        raise ValueError("in_tilde_O_plus expects an integral matrix")
    if not is_isometry(Q, g):
        raise ValueError("in_tilde_O_plus expects an isometry of the lattice")
    if not in_O_plus(Q, g):
        return False
    n = Q.rank
    diff = [[Fraction(g[i][j]) - int(i == j) for j in range(n)] for i in range(n)]
    return linalg.is_integral_matrix(linalg.matmul(diff, linalg.inverse(Q.gram)))


def glue_order(glue: Sequence) -> int:
    return math.lcm(*(Fraction(x).denominator for x in glue)) if glue else 1


def overlattice(Q: QuadraticLattice, glue: Sequence, index: int, name: str = "") -> QuadraticLattice:
    """Gram matrix of ``Q + Z*glue`` for a glue vector of order ``index`` mod Q."""
    glue = [Fraction(x) for x in glue]
    if len(glue) != Q.rank:
        raise ValueError("glue vector has the wrong length")
    if glue_order(glue) != index:
        raise ValueError(f"glue vector has order {glue_order(glue)} modulo Q, not {index}")
    pairings = linalg.matvec(Q.gram, glue)
    if any(x.denominator != 1 for x in pairings):
        raise ValueError("glue vector does not pair integrally with Q")
    nrm = Q.norm(glue)
    if nrm.denominator != 1 or (is_even(Q) and nrm % 2 != 0):
        raise ValueError(f"glue vector has norm {nrm}; the overlattice would not be even")
    if index == 1:
        return Q
    n = Q.rank
    scaled = [[index * int(i == j) for j in range(n)] for i in range(n)]
    scaled.append([int(index * x) for x in glue])
    basis = [[Fraction(x, index) for x in row] for row in hermite_basis(scaled)]
    return lattice(linalg.congruent(Q.gram, basis), name)
