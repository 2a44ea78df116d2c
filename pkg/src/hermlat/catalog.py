"""Hermitian models of II_{2,26} over Z[i] and Z[omega], and the built-in
sublattices whose complements are checked by :func:`general_type.run_case`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import FieldElement
from .general_type import Candidate, EmbeddingCase
from .hermitian import HermitianLattice, direct_sum

H = Fraction(1, 2)
T = Fraction(1, 3)


def _g(a, b=0) -> FieldElement:
    return FieldElement(Fraction(a), Fraction(b), -1)


def _e(a, b=0) -> FieldElement:
    return FieldElement(Fraction(a), Fraction(b), -3)


# Gaussian blocks: a hyperbolic plane and an E8 form
MATRIX_A = ((_g(0), _g(0, -H)),
            (_g(0, H), _g(0)))
MATRIX_B = ((_g(1), _g(0, -H), _g(0, -H), _g(H)),
            (_g(0, H), _g(1), _g(H), _g(0, H)),
            (_g(0, H), _g(H), _g(1), _g(H)),
            (_g(H), _g(0, -H), _g(H), _g(1)))

# Eisenstein blocks
MATRIX_C = ((_e(0), _e(0, -T)),
            (_e(0, T), _e(0)))
MATRIX_D = ((_e(1), _e(0), _e(0, T), _e(0, T)),
            (_e(0), _e(1), _e(0, T), _e(0, -T)),
            (_e(0, -T), _e(0, -T), _e(1), _e(0)),
            (_e(0, -T), _e(0, T), _e(0), _e(1)))

# the corresponding trace forms on the interleaved basis
TRACE_A = ((0, 0, 0, -1), (0, 0, 1, 0), (0, 1, 0, 0), (-1, 0, 0, 0))
TRACE_B = ((2, 0, 0, -1, 0, -1, 1, 0),
           (0, 2, 1, 0, 1, 0, 0, 1),
           (0, 1, 2, 0, 1, 0, 0, 1),
           (-1, 0, 0, 2, 0, 1, -1, 0),
           (0, 1, 1, 0, 2, 0, 1, 0),
           (-1, 0, 0, 1, 0, 2, 0, 1),
           (1, 0, 0, -1, 1, 0, 2, 0),
           (0, 1, 1, 0, 0, 1, 0, 2))
TRACE_D = ((2, 1, 0, 0, 0, 1, 0, 1),
           (1, 2, 0, 0, -1, 0, -1, 0),
           (0, 0, 2, 1, 0, 1, 0, -1),
           (0, 0, 1, 2, -1, 0, 1, 0),
           (0, -1, 0, -1, 2, 1, 0, 0),
           (1, 0, 1, 0, 1, 2, 0, 0),
           (0, -1, 0, 1, 0, 0, 2, 1),
           (1, 0, -1, 0, 0, 0, 1, 2))


def block(name: str) -> HermitianLattice:
    d, gram = {"A": (-1, MATRIX_A), "B": (-1, MATRIX_B),
               "C": (-3, MATRIX_C), "D": (-3, MATRIX_D)}[name]
    return HermitianLattice(d, gram, name)


@lru_cache(maxsize=None)
def gaussian_ambient() -> HermitianLattice:
    """``A + B(-1)^3`` over Z[i]; its trace lattice is II_{2,26}."""
    b = block("B").rescale(-1)
    return HermitianLattice(-1, direct_sum(block("A"), b, b, b).gram, "A + B(-1)^3")


@lru_cache(maxsize=None)
def eisenstein_ambient() -> HermitianLattice:
    """``C + D(-1)^3`` over Z[omega]; its trace lattice is II_{2,26}."""
    dm = block("D").rescale(-1)
    return HermitianLattice(-3, direct_sum(block("C"), dm, dm, dm).gram, "C + D(-1)^3")


def _unit_vector(pos: int, d: int, sign: int = 1) -> tuple:
    return tuple(FieldElement.rational(sign if i == pos else 0, d) for i in range(14))


def _a2_trace(k: int) -> tuple:
    n = 2 * k
    return tuple(tuple(-2 if i == j else -1 if i // 2 == j // 2 else 0 for j in range(n))
                 for i in range(n))


# first coordinate of each B(-1) / D(-1) block in the 14-dimensional ambient
BLOCK_START = (2, 6, 10)

DETS_A1 = frozenset({2, 4, 8, 16})
DETS_A2D4 = frozenset({4, 8, 16})

CANDIDATES_A1 = (
    Candidate("A3"),
    Candidate("A1^3"),
    Candidate("A1^2+<16>", 2, prefix="A1"),
    Candidate("A2+<48>", 3),
)
CANDIDATES_D4 = (
    Candidate("D5"),
    Candidate("A1+D4"),
    Candidate("A1^2+A3", excluded=True),
)
CANDIDATES_A2D4 = (
    Candidate("D7"),
    Candidate("A1+D6"),
    Candidate("A7"),
    Candidate("D6+<8>", 2),
    Candidate("E6+<24>", 3),
    Candidate("A3+D4"),
    Candidate("A1^2+D5"),
    Candidate("D6+A4"),
    Candidate("D5+<8>", 2, prefix="A1"),
    Candidate("D6+<16>", 2),
    Candidate("A6+<112>", 7),
    Candidate("A4+A1^2+<80>", 10),
    Candidate("D4+A2+<48>", 6),
    Candidate("A5+<112>", 3),
    Candidate("A3^2+<4>", 2),
    Candidate("D5+<4>^2", 2),
    Candidate("A3+A1^4", 2),
    Candidate("D4+A1^2+<4>", 2),
)

D4_GRAM = ((_e(-1), _e(0, T)), (_e(0, -T), _e(-1)))
D4_TRACE = ((-2, -1, 0, 1), (-1, -2, -1, 0), (0, -1, -2, -1), (1, 0, -1, -2))


def catalog() -> list[EmbeddingCase]:
    g_amb, e_amb = gaussian_ambient(), eisenstein_ambient()
    b0, b1 = BLOCK_START[0], BLOCK_START[1]
    cases = [
        EmbeddingCase(
            name="gaussian-A1^2", field_d=-1, ambient=g_amb,
            sub_gram=((_g(-1),),),
            embedding=(_unit_vector(b0, -1),),
            expected_complement="A1(-1)^2", expected_weight=14, expected_root_weight=7, n=12,
            candidates=CANDIDATES_A1, candidate_dets=DETS_A1,
            expected_sub_trace=((-2, 0), (0, -2)),
        ),
        EmbeddingCase(
            name="gaussian-A2^2", field_d=-1, ambient=g_amb,
            sub_gram=((_g(-1), _g(H)), (_g(H), _g(-1))),
            embedding=(_unit_vector(b0, -1), _unit_vector(b0 + 3, -1, sign=-1)),
            expected_complement="A2(-1)^2", expected_weight=18, expected_root_weight=9, n=11,
            expected_sub_trace=((-2, 0, 1, 0), (0, -2, 0, 1), (1, 0, -2, 0), (0, 1, 0, -2)),
        ),
    ]
    a2_positions = (b0, b0 + 1, b1, b1 + 1)
    for k in range(1, 5):
        cases.append(EmbeddingCase(
            name=f"eisenstein-A2^{k}", field_d=-3, ambient=e_amb,
            sub_gram=tuple(tuple(_e(-1) if i == j else _e(0) for j in range(k)) for i in range(k)),
            embedding=tuple(_unit_vector(p, -3) for p in a2_positions[:k]),
            expected_complement=f"A2(-1)^{k}" if k > 1 else "A2(-1)",
            expected_weight=12 + 3 * k, expected_root_weight=4 + k, n=13 - k,
            odd_candidates=("A1+<1>+<1>", "A2+<1>", "<3>+<1>+<1>") if k == 1 else (),
            expected_sub_trace=_a2_trace(k),
        ))
    cases.append(EmbeddingCase(
        name="eisenstein-D4", field_d=-3, ambient=e_amb,
        sub_gram=D4_GRAM,
        embedding=(_unit_vector(b0, -3), _unit_vector(b0 + 2, -3)),
        expected_complement="D4(-1)", expected_weight=24, expected_root_weight=8, n=11,
        candidates=CANDIDATES_D4, candidate_dets=DETS_A1,
        expected_sub_trace=D4_TRACE,
    ))
    a2d4_gram = ((_e(-1), _e(0), _e(0)),
                 (_e(0), D4_GRAM[0][0], D4_GRAM[0][1]),
                 (_e(0), D4_GRAM[1][0], D4_GRAM[1][1]))
    a2d4_trace = tuple(tuple(row) for row in
                       [[-2, -1, 0, 0, 0, 0], [-1, -2, 0, 0, 0, 0]] +
                       [[0, 0] + list(r) for r in D4_TRACE])
    cases.append(EmbeddingCase(
        name="eisenstein-A2+D4", field_d=-3, ambient=e_amb,
        sub_gram=a2d4_gram,
        embedding=(_unit_vector(b0, -3), _unit_vector(b1, -3), _unit_vector(b1 + 2, -3)),
        expected_complement="A2(-1)+D4(-1)", expected_weight=27, expected_root_weight=9, n=10,
        candidates=CANDIDATES_A2D4, candidate_dets=DETS_A2D4,
        expected_sub_trace=a2d4_trace,
    ))
    return cases


def case_by_name(name: str) -> EmbeddingCase:
    for case in catalog():
        if case.name == name:
            return case
    raise KeyError(f"no catalog case named {name!r}")
