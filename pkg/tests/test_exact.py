import random
from fractions import Fraction

import pytest

from hermlat.exact import (
    FieldElement,
    check_discriminant_seed,
    conjugate,
    is_ring_integer,
    is_unit,
    ring_basis,
    ring_divmod,
    trace_q,
    units,
)

I = FieldElement.sqrt_d(-1)
OMEGA = FieldElement(Fraction(-1, 2), Fraction(1, 2), -3)


def fe(a, b, d):
    return FieldElement(Fraction(a), Fraction(b), d)


def test_conjugate_examples():
    assert conjugate(FieldElement.rational(1, -1)) == 1
    assert conjugate(fe(2, 3, -1)) == fe(2, -3, -1)
    assert conjugate(OMEGA) == OMEGA * OMEGA
    assert OMEGA * conjugate(OMEGA) == 1


def test_trace_examples():
    assert trace_q(I) == 0
    assert trace_q(OMEGA) == -1
    assert trace_q(FieldElement.rational(5, -7)) == 10


def test_ring_integer_examples():
    assert is_ring_integer(fe(1, 1, -1))
    assert is_ring_integer(OMEGA)
    assert not is_ring_integer(fe(Fraction(1, 2), Fraction(1, 2), -1))
    # d = 1 mod 4: half-integers with matching parity are integral
    assert is_ring_integer(fe(Fraction(1, 2), Fraction(1, 2), -7))
    assert not is_ring_integer(fe(Fraction(1, 2), 0, -7))


def test_units():
    assert set(units(-1)) == {FieldElement.rational(s, -1) for s in (1, -1)} | {I, -I}
    assert set(units(-3)) == {FieldElement.rational(1, -3), FieldElement.rational(-1, -3),
                              OMEGA, -OMEGA, OMEGA * OMEGA, -(OMEGA * OMEGA)}
    assert len(units(-5)) == 2
    assert all(is_unit(u) for d in (-1, -2, -3, -5) for u in units(d))
    assert OMEGA ** 3 == 1


def test_ring_basis():
    assert ring_basis(-1).theta == I
    assert ring_basis(-3).theta == fe(Fraction(1, 2), Fraction(1, 2), -3)
    assert ring_basis(-5).theta == FieldElement.sqrt_d(-5)


@pytest.mark.parametrize("d", [0, 1, -4, -12, 5])
def test_bad_seed(d):
    with pytest.raises(ValueError):
        check_discriminant_seed(d)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        _ = I + OMEGA


def test_field_axioms_random():
    rng = random.Random(11)
    for _ in range(500):
        d = rng.choice((-1, -2, -3, -7, -11, -5))
        x, y, z = (fe(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                      Fraction(rng.randint(-9, 9), rng.randint(1, 4)), d) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x * y).norm() == x.norm() * y.norm()
        if not x.is_zero():
            assert x * x.inverse() == 1
            assert (y / x) * x == y


def test_from_basis_round_trip():
    rng = random.Random(12)
    for _ in range(200):
        d = rng.choice((-1, -3, -7, -15, -2))
        u, v = rng.randint(-20, 20), rng.randint(-20, 20)
        x = FieldElement.from_basis(u, v, d)
        assert x.basis_coords() == (u, v)
        assert is_ring_integer(x)


def test_ring_divmod_norm_decreases():
    rng = random.Random(13)
    for _ in range(300):
        d = rng.choice((-1, -2, -3, -7, -11))
        x = FieldElement.from_basis(rng.randint(-50, 50), rng.randint(-50, 50), d)
        y = FieldElement.from_basis(rng.randint(-9, 9), rng.randint(-9, 9), d)
        if y.is_zero():
            continue
        q, r = ring_divmod(x, y)
        assert q * y + r == x
        assert r.norm() < y.norm()
        assert is_ring_integer(q) and is_ring_integer(r)


def test_ring_divmod_refuses_non_euclidean():
    with pytest.raises(ValueError):
        ring_divmod(FieldElement.rational(3, -5), FieldElement.rational(2, -5))
