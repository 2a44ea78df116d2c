"""Sublattices of a Z-lattice: complements, saturation, primitivity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .normal_forms import hermite_basis, integer_kernel, is_primitive_basis, saturation
from .quadratic import QuadraticLattice, Signature, lattice

__all__ = [
    "Sublattice",
    "integer_kernel",
    "orthogonal_complement",
    "is_primitive",
    "saturate",
    "nikulin_check",
]


@dataclass(frozen=True)
class Sublattice:
    ambient: QuadraticLattice
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        b = tuple(tuple(int(x) for x in v) for v in self.basis)
        if any(len(v) != self.ambient.rank for v in b):
            raise ValueError("basis vectors must live in the ambient lattice")
        if b and linalg.rank(b) != len(b):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", b)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> list[list[Fraction]]:
        return linalg.congruent(self.ambient.gram, self.basis)

    def lattice(self, name: str = "") -> QuadraticLattice:
        return lattice(self.gram(), name)


def orthogonal_complement(sub: Sublattice) -> Sublattice:
    """Saturated ``{x in ambient : (x, s) = 0 for all s in sub}``."""
    n = sub.ambient.rank
    if not sub.basis:
        return Sublattice(sub.ambient, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    rows = [linalg.matvec(sub.ambient.gram, v) for v in sub.basis]
    den = math.lcm(*(Fraction(x).denominator for row in rows for x in row))
    eqs = [[int(x * den) for x in row] for row in rows]
    return Sublattice(sub.ambient, tuple(tuple(v) for v in integer_kernel(eqs, n)))


def saturate(sub: Sublattice) -> Sublattice:
    return Sublattice(sub.ambient, tuple(tuple(v) for v in saturation(sub.basis, sub.ambient.rank)))


def is_primitive(sub: Sublattice) -> bool:
    return is_primitive_basis(sub.basis)


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Whether two bases span the same sublattice of Z^n."""
    return hermite_basis(a) == hermite_basis(b)


def nikulin_check(sub_signature: Signature | tuple[int, int], sub_ell: int,
                  ambient_signature: Signature | tuple[int, int]) -> bool:
    """Sufficient condition for a unique primitive embedding into an even unimodular lattice."""
    mp, mm = sub_signature
    np_, nm = ambient_signature
    return mp < np_ and mm < nm and sub_ell + 2 <= (np_ + nm) - (mp + mm)
