"""Exact arithmetic in imaginary quadratic fields Q(sqrt(d)).

Rationals are :class:`fractions.Fraction` throughout (always reduced, positive
denominator).  Field elements are stored as ``a + b*sqrt(d)`` even when
``d = 1 (mod 4)``; integrality is tested against the ``{1, theta}`` basis of
the ring of integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction]

# Imaginary quadratic fields whose ring of integers is norm-Euclidean.
EUCLIDEAN_D = (-1, -2, -3, -7, -11)


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def check_discriminant_seed(d: int) -> None:
    if d >= 0 or not is_squarefree(d):
        raise ValueError(f"d must be a negative squarefree integer, got {d}")


@dataclass(frozen=True)
class FieldElement:
    """The element ``a + b*sqrt(d)`` of Q(sqrt(d))."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def rational(cls, x: Number, d: int) -> FieldElement:
        return cls(Fraction(x), Fraction(0), d)

    @classmethod
    def sqrt_d(cls, d: int) -> FieldElement:
        return cls(Fraction(0), Fraction(1), d)

    @classmethod
    def from_basis(cls, x: Number, y: Number, d: int) -> FieldElement:
        """Return ``x + y*theta`` for the ring basis of ``d``."""
        return FieldElement.rational(x, d) + ring_basis(d).theta * Fraction(y)

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.d != self.d:
                raise ValueError(f"field mismatch: d={self.d} vs d={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> FieldElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return FieldElement(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        out = FieldElement.rational(1, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, FieldElement):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> FieldElement:
        return FieldElement(self.a, -self.b, self.d)

    def basis_coords(self) -> tuple[Fraction, Fraction]:
        """Coordinates ``(x, y)`` with ``self = x + y*theta``."""
        if self.d % 4 == 1:
            return self.a - self.b, 2 * self.b
        return self.a, self.b

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.a == 0:
            return f"{self.b}*{root}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*{root}"


@dataclass(frozen=True)
class RingBasis:
    """Z-basis ``{1, theta}`` of the ring of integers of Q(sqrt(d))."""

    d: int
    theta: FieldElement


@lru_cache(maxsize=None)
def ring_basis(d: int) -> RingBasis:
    check_discriminant_seed(d)
    if d % 4 == 1:
        theta = FieldElement(Fraction(1, 2), Fraction(1, 2), d)
    else:
        theta = FieldElement(Fraction(0), Fraction(1), d)
    return RingBasis(d, theta)


def conjugate(x: FieldElement) -> FieldElement:
    return x.conjugate()


def trace_q(x: FieldElement) -> Fraction:
    """Tr_{F/Q}(x) = x + conj(x)."""
    return 2 * x.a


def is_ring_integer(x: FieldElement) -> bool:
    u, v = x.basis_coords()
    return u.denominator == 1 and v.denominator == 1


def units(d: int) -> list[FieldElement]:
    """The full unit group of the ring of integers, in a fixed order."""
    check_discriminant_seed(d)
    one = FieldElement.rational(1, d)
    if d == -1:
        i = FieldElement.sqrt_d(-1)
        return [one, -one, i, -i]
    if d == -3:
        omega = FieldElement(Fraction(-1, 2), Fraction(1, 2), -3)
        omega2 = omega * omega
        return [one, -one, omega, -omega, omega2, -omega2]
    return [one, -one]


def is_unit(x: FieldElement) -> bool:
    return is_ring_integer(x) and x.norm() == 1


def ring_divmod(x: FieldElement, y: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Euclidean division ``x = q*y + r`` with ``N(r) < N(y)``.

    Only valid for the norm-Euclidean fields in :data:`EUCLIDEAN_D`.
    """
    if x.d not in EUCLIDEAN_D:
        raise ValueError(f"ring of integers for d={x.d} is not norm-Euclidean")
    if y.is_zero():
        raise ZeroDivisionError("division by zero ring element")
    u, v = (x / y).basis_coords()
    u0, v0 = round(u), round(v)
    best = None
    for du in (-1, 0, 1):
        for dv in (-1, 0, 1):
            q = FieldElement.from_basis(u0 + du, v0 + dv, x.d)
            r = x - q * y
            if best is None or r.norm() < best[1].norm():
                best = (q, r)
    q, r = best
    assert r.norm() < y.norm()
    return q, r
