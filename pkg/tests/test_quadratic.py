import random
from fractions import Fraction

import pytest

from hermlat import catalog, hermitian, linalg, quadratic
from hermlat.quadratic import lattice
from hermlat.standard import E, U, from_label

A_Q = lattice(catalog.TRACE_A)
B_Q = lattice(catalog.TRACE_B)


def ii_2_26():
    neg = quadratic.rescale(B_Q, -1)
    return quadratic.direct_sum(A_Q, neg, neg, neg)


def test_signature_examples():
    assert str(quadratic.signature(A_Q)) == "(2,2)"
    assert tuple(quadratic.signature(ii_2_26())) == (2, 26)
    assert tuple(quadratic.signature(lattice([[-2]]))) == (0, 1)


def test_det_even_unimodular_examples():
    M = ii_2_26()
    assert quadratic.determinant(M) == 1 and quadratic.is_even(M) and quadratic.is_unimodular(M)
    a2 = lattice([[2, -1], [-1, 2]])
    assert quadratic.determinant(a2) == 3 and quadratic.is_even(a2) and not quadratic.is_unimodular(a2)
    one = lattice([[1]])
    assert quadratic.determinant(one) == 1 and not quadratic.is_even(one) and quadratic.is_unimodular(one)


def test_discriminant_group_examples():
    assert quadratic.discriminant_group(from_label("A2(-1)")).invariant_factors == (3,)
    assert quadratic.discriminant_group(from_label("D4(-1)")).invariant_factors == (2, 2)
    assert quadratic.discriminant_group(E(8)).invariant_factors == ()
    assert quadratic.ell_invariant(from_label("A2(-1)^4")) == 4
    assert quadratic.ell_invariant(E(8)) == 0
    # (Z/2)^2 + Z/3 = Z/2 + Z/6 needs only two generators
    disc = quadratic.discriminant_group(from_label("A2(-1)+D4(-1)"))
    assert disc.invariant_factors == (2, 6) and disc.order == 12
    assert quadratic.ell_invariant(from_label("A2(-1)+D4(-1)")) == 2


def test_discriminant_elements_count_and_duality():
    for label in ("A2", "D4", "A1^2+<16>", "A3+A1"):
        Q = from_label(label)
        els = quadratic.discriminant_elements(Q)
        assert len(els) == abs(quadratic.determinant(Q))
        assert len({tuple(x) for x in els}) == len(els)
        for x in els:
            assert all(y.denominator == 1 for y in linalg.matvec(Q.gram, x))


def test_sigma_examples():
    assert quadratic.sigma_reflection(lattice([[2]]), [1]) == [[-1]]
    a2 = lattice([[2, -1], [-1, 2]])
    s = quadratic.sigma_reflection(a2, [1, 0])
    assert linalg.matvec(s, [0, 1]) == [1, 1]
    with pytest.raises(ValueError):
        quadratic.sigma_reflection(A_Q, [1, 0, 0, 0])


def test_o_plus_examples():
    n = A_Q.rank
    ident = linalg.identity(n)
    assert quadratic.in_O_plus(A_Q, ident)
    assert quadratic.in_O_plus(A_Q, linalg.scale(ident, -1))
    # r = e1 + e4 has norm -2, r = e1 - e4 has norm 2
    neg, pos = [1, 0, 0, 1], [1, 0, 0, -1]
    assert A_Q.norm(neg) == -2 and A_Q.norm(pos) == 2
    assert quadratic.in_O_plus(A_Q, quadratic.sigma_reflection(A_Q, neg))
    assert not quadratic.in_O_plus(A_Q, quadratic.sigma_reflection(A_Q, pos))


def test_o_plus_random_reflections():
    rng = random.Random(31)
    M = quadratic.direct_sum(U(), U(), from_label("A2(-1)"))
    done = 0
    while done < 100:
        r = [rng.randint(-2, 2) for _ in range(M.rank)]
        nrm = M.norm(r)
        if nrm == 0:
            continue
        assert quadratic.in_O_plus(M, quadratic.sigma_reflection(M, r)) == (nrm < 0)
        done += 1


def test_tilde_o_plus():
    Q = A_Q
    assert quadratic.in_tilde_O_plus(Q, linalg.identity(4))
    with pytest.raises(ValueError):
        quadratic.in_tilde_O_plus(Q, [[Fraction(1, 2), 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    # on A2(-1)+U+U, -id acts as -1 on Z/3 and so is not in the kernel
    M = quadratic.direct_sum(U(), U(), from_label("A2(-1)"))
    assert not quadratic.in_tilde_O_plus(M, linalg.scale(linalg.identity(M.rank), -1))
    r = [0, 0, 0, 0, 1, 0]
    assert M.norm(r) == -2
    assert quadratic.in_tilde_O_plus(M, quadratic.sigma_reflection(M, r))


def _lq(case_name):
    case = catalog.case_by_name(case_name)
    L = hermitian.hermitian_complement(case.ambient, case.embedding)
    return quadratic.trace_form(L)


@pytest.mark.parametrize("case_name,expected", [("gaussian-A1^2", True), ("eisenstein-A2^1", False)])
def test_minus_sigma_on_catalog_lattice(case_name, expected):
    # -sigma_r lies in the discriminant kernel iff -id acts trivially on L_Q^dual / L_Q,
    # i.e. iff that group is 2-elementary
    LQ = _lq(case_name)
    n = LQ.rank
    r = next(v for v in (linalg.identity(n)[i] for i in range(n)) if LQ.norm(v) == -2)
    g = linalg.scale(quadratic.sigma_reflection(LQ, r), -1)
    assert quadratic.in_tilde_O_plus(LQ, g) is expected
    disc = quadratic.discriminant_group(LQ)
    assert all(f == 2 for f in disc.invariant_factors) is expected


def test_rescale_and_sum():
    e8m = quadratic.rescale(E(8), -1)
    assert quadratic.is_definite(e8m) == -1 and quadratic.determinant(e8m) == 1
    assert quadratic.rescale(E(8), 1).gram == E(8).gram
    s = quadratic.direct_sum(from_label("A2"), from_label("D4"))
    assert s.rank == 6 and quadratic.determinant(s) == 12


def test_overlattice():
    Q = from_label("A1^2+<16>")
    assert quadratic.overlattice(Q, [0, 0, 0], 1).gram == Q.gram
    glued = quadratic.overlattice(Q, [Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)], 4)
    assert quadratic.is_even(glued) and quadratic.determinant(glued) == 4
    with pytest.raises(ValueError):
        quadratic.overlattice(Q, [Fraction(1, 2), Fraction(1, 2), 0], 2)   # norm 1, odd
    with pytest.raises(ValueError):
        quadratic.overlattice(Q, [Fraction(1, 3), 0, 0], 3)                # not in the dual
    # D8 with a spinor glue (basis coordinates, reduced mod 1) is E8
    d8 = from_label("D8")
    spinor = [Fraction(1, 2), 0, Fraction(1, 2), 0, Fraction(1, 2), 0, Fraction(1, 2), 0]
    glued = quadratic.overlattice(d8, spinor, 2)
    assert quadratic.determinant(glued) == 1 and quadratic.is_even(glued)


def test_definite_flag():
    assert quadratic.is_definite(E(8)) == 1
    assert quadratic.is_definite(from_label("A2(-1)")) == -1
    assert quadratic.is_definite(U()) == 0
