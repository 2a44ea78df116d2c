"""Ages of finite-order linear maps and the combinatorics behind the
canonical-singularity bounds for ball quotients.

Eigenvalues are recorded as exponents of a primitive root of unity of the
map's order.  All quantities are exact Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import _kernels

DIVISOR_DEGREES = {1: 1, 2: 1, 3: 2, 4: 2, 6: 2}   # d -> phi(d)
RST_ORDERS = (3, 4, 6)                             # the r with phi(r) = 2


def frac(x: Fraction) -> Fraction:
    """Fractional part ``x - floor(x)``."""
    return x - math.floor(x)


def totatives(r: int) -> list[int]:
    if r == 1:
        return [0]
    return [k for k in range(1, r) if math.gcd(k, r) == 1]


def phi(r: int) -> int:
    return len(totatives(r)) if r > 1 else 1


@dataclass(frozen=True)
class EigenvalueProfile:
    order: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        ex = tuple(int(a) for a in self.exponents)
        if any(not 0 <= a < self.order for a in ex):
            raise ValueError(f"exponents must lie in [0, {self.order})")
        object.__setattr__(self, "exponents", ex)

    @property
    def dim(self) -> int:
        return len(self.exponents)

    def inverse(self) -> EigenvalueProfile:
        return EigenvalueProfile(self.order, tuple((-a) % self.order for a in self.exponents))

    def power(self, f: int) -> EigenvalueProfile:
        return EigenvalueProfile(self.order, tuple(a * f % self.order for a in self.exponents))


def age(p: EigenvalueProfile) -> Fraction:
    """Sum of ``a_i / m`` with m the order of the map."""
    return sum((Fraction(a, p.order) for a in p.exponents), Fraction(0))


def is_quasi_reflection(p: EigenvalueProfile) -> bool:
    return sum(1 for a in p.exponents if a) == 1


def is_reflection(p: EigenvalueProfile) -> bool:
    return is_quasi_reflection(p) and any(2 * a == p.order for a in p.exponents)


def _check_k2(r: int, k2: int) -> int:
    if r < 1:
        raise ValueError("r must be positive")
    k2 %= r
    if math.gcd(k2, r) != 1:
        raise ValueError(f"k2={k2} is not a unit modulo r={r}")
    return k2


def c_w(r: int, k2: int) -> Fraction:
    """``sum {k2/r + k/r}`` over totatives k of r other than the one with k = -k2 mod r."""
    k2 = _check_k2(r, k2)
    k1 = (-k2) % r
    return sum((frac(Fraction(k2 + k, r)) for k in totatives(r) if k != k1), Fraction(0))


def t_d(d: int, r: int, k2: int) -> Fraction:
    """``sum {a/d + k2/r}`` over ``1 <= a <= d`` coprime to d."""
    if d not in DIVISOR_DEGREES:
        raise ValueError(f"d must be one of {sorted(DIVISOR_DEGREES)}")
    k2 = _check_k2(r, k2)
    return sum((frac(Fraction(a, d) + Fraction(k2, r))
                for a in range(1, d + 1) if math.gcd(a, d) == 1), Fraction(0))


@dataclass(frozen=True)
class AgeDecomposition:
    """Multiplicities ``v[d]`` of the cyclotomic pieces, for a given (r, k2)."""

    r: int
    k2: int
    v: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        items = dict(self.v)
        if set(items) - set(DIVISOR_DEGREES):
            raise ValueError(f"multiplicities only for d in {sorted(DIVISOR_DEGREES)}")
        if any(x < 0 for x in items.values()):
            raise ValueError("multiplicities must be non-negative")
        object.__setattr__(self, "v", tuple(sorted((d, x) for d, x in items.items() if x)))
        _check_k2(self.r, self.k2)

    @classmethod
    def make(cls, r: int, k2: int, **v: int) -> AgeDecomposition:
        """``AgeDecomposition.make(3, 2, v2=3)``."""
        return cls(r, k2, tuple((int(key[1:]), val) for key, val in v.items()))

    def multiplicity(self, d: int) -> int:
        return dict(self.v).get(d, 0)

    @property
    def n(self) -> int:
        return sum(DIVISOR_DEGREES[d] * x for d, x in self.v)

    def __str__(self) -> str:
        vs = ", ".join(f"v{d}={x}" for d, x in self.v) or "v=0"
        return f"r={self.r}, k2={self.k2}, {vs}"


def decomposition_age(dec: AgeDecomposition, n: int | None = None) -> Fraction:
    if n is not None and dec.n != n:
        raise ValueError(f"multiplicities give dimension {dec.n}, expected {n}")
    total = c_w(dec.r, dec.k2)
    for d, x in dec.v:
        total += x * t_d(d, dec.r, dec.k2)
    return total


def decompositions(n: int, r_values: Iterable[int] = RST_ORDERS) -> Iterable[AgeDecomposition]:
    """Every (r, k2, v) with ``v1 + v2 + 2 v3 + 2 v4 + 2 v6 = n``."""
    for r in r_values:
        for k2 in totatives(r):
            for v3, v4, v6 in product(range(n // 2 + 1), repeat=3):
                rest = n - 2 * (v3 + v4 + v6)
                if rest < 0:
                    continue
                for v1 in range(rest + 1):
                    yield AgeDecomposition(r, k2, ((1, v1), (2, rest - v1), (3, v3), (4, v4), (6, v6)))


@dataclass(frozen=True)
class RstResult:
    n: int
    minimum: Fraction
    witness: AgeDecomposition
    witnesses: tuple[AgeDecomposition, ...] = field(repr=False)

    @property
    def canonical(self) -> bool:
        return self.minimum >= 1


def rst_min_age(n: int) -> RstResult:
    """Exact minimum of the decomposition age over r in {3, 4, 6}.

    ``witness`` is the minimiser using the fewest distinct pieces (ties broken
    lexicographically); ``witnesses`` lists all of them.
    """
    if n < 1:
        raise ValueError("n must be positive")
    best: Fraction | None = None
    hits: list[AgeDecomposition] = []
    for dec in decompositions(n):
        a = decomposition_age(dec)
        if best is None or a < best:
            best, hits = a, [dec]
        elif a == best:
            hits.append(dec)
    hits.sort(key=lambda d: (len(d.v), d.r, d.k2, d.v))
    return RstResult(n, best, hits[0], tuple(hits))


# ---------------------------------------------------------------------------
# the totative-sum lemma

SEISU_WITNESSES = {5: 3, 7: 2, 8: 3, 9: 4}


def middle_coprimes(r: int) -> list[int]:
    """Integers a with r/4 < a < 3r/4 and gcd(a, r) = 1."""
    return [a for a in range(1, r) if r < 4 * a < 3 * r and math.gcd(a, r) == 1]


@dataclass(frozen=True)
class SeisuReport:
    r_max: int
    pairs_checked: int
    violations: tuple[tuple[int, int, Fraction], ...]
    tightest: tuple[int, int, Fraction]          # (r, k2, sum) with the smallest sum
    middle_gaps: tuple[int, ...]                 # r with phi(r) > 2 and no middle coprime
    witness_table: dict[int, tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.middle_gaps


def seisu_sum(r: int, k2: int) -> Fraction:
    """The lemma's sum; it equals :func:`c_w` and does not depend on how the
    remaining totatives are paired, only on which one is the partner of k2."""
    return c_w(r, k2)


def seisu_verify(r_max: int) -> SeisuReport:
    if r_max < 5:
        raise ValueError("r_max must be at least 5")
    best, arg = _kernels.seisu_min_sums(3, r_max)
    violations = []
    tight = None
    pairs = 0
    gaps = []
    for idx, r in enumerate(range(3, r_max + 1)):
        if best[idx] < 0:
            continue
        pairs += phi(r)
        s = Fraction(int(best[idx]), r)
        if s <= 1:
            violations.append((r, int(arg[idx]), s))
        if tight is None or s < tight[2]:
            tight = (r, int(arg[idx]), s)
        if not middle_coprimes(r):
            gaps.append(r)
    table = {r: tuple(middle_coprimes(r)) for r in SEISU_WITNESSES}
    return SeisuReport(r_max, pairs, tuple(violations), tight, tuple(gaps), table)


# ---------------------------------------------------------------------------
# maps whose power is a quasi-reflection

def is_power_quasi_reflection(p: EigenvalueProfile, k: int, ell: int) -> bool:
    """g of order k*ell with g^k a quasi-reflection of order ell along the last coordinate."""
    if p.order != k * ell or not p.exponents:
        return False
    head, last = p.exponents[:-1], p.exponents[-1]
    return all(a % ell == 0 for a in head) and math.gcd(last * k, p.order) * ell == p.order


def quotient_profile(p: EigenvalueProfile, k: int, ell: int, f: int) -> EigenvalueProfile:
    """Profile of g^f on the quotient of V by the quasi-reflection g^k."""
    m = k * ell
    ex = [a * f % m for a in p.exponents[:-1]] + [p.exponents[-1] * f * ell % m]
    return EigenvalueProfile(m, tuple(ex))


def age_prime(p: EigenvalueProfile, k: int, ell: int, f: int) -> Fraction:
    """``{a_n f / k} + sum_{i<n} {a_i f / (k ell)}``."""
    if k < 1 or ell < 1:
        raise ValueError("k and ell must be positive")
    if p.order != k * ell:
        raise ValueError(f"profile order {p.order} is not k*ell = {k * ell}")
    if not 1 <= f < k:
        raise ValueError(f"f must satisfy 1 <= f < k, got f={f}, k={k}")
    if not p.exponents:
        raise ValueError("empty profile")
    *head, last = p.exponents
    return frac(Fraction(last * f, k)) + sum((frac(Fraction(a * f, k * ell)) for a in head), Fraction(0))


def profile_from_sequence(order: int, exponents: Sequence[int]) -> EigenvalueProfile:
    return EigenvalueProfile(order, tuple(exponents))
