"""Quasi-pullback weights, the reflective root-count comparison, and the
end-to-end hypothesis check for a Hermitian sublattice of the II_{2,26} model.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import embeddings, hermitian, linalg
from .definite import find_isometry, root_count, root_system_identify
from .exact import FieldElement, ring_basis, units
from .hermitian import HermitianLattice
from .quadratic import (
    QuadraticLattice,
    determinant,
    discriminant_elements,
    glue_order,
    is_definite,
    is_even,
    lattice,
    overlattice,
    signature,
    trace_form,
)
from .standard import from_label


@dataclass(frozen=True)
class QuasiPullbackReport:
    root_count: int
    weight: Fraction
    is_cusp: bool
    character: str = "det"


def quasi_pullback_weight(root_count: int) -> QuasiPullbackReport:
    if root_count < 0 or root_count % 2:
        raise ValueError(f"root count must be a non-negative even integer, got {root_count}")
    return QuasiPullbackReport(root_count, Fraction(12) + Fraction(root_count, 2), root_count > 0)


def multiplicity(field_d: int) -> int:
    """Half the number of units: how many roots of the pulled-back form can be taken."""
    return len(units(field_d)) // 2


def root_extracted_weight(weight, field_d: int) -> Fraction:
    if field_d not in (-1, -3):
        raise ValueError("root extraction is only available for d = -1 and d = -3")
    w = Fraction(weight) / multiplicity(field_d)
    if w.denominator != 1:
        raise ValueError(f"weight {weight} is not divisible by {multiplicity(field_d)}")
    return w


def inequality_check(n: int, root_count: int, field_d: int) -> bool:
    """``n > (24 + r) / #units``."""
    return Fraction(n) > Fraction(24 + root_count, len(units(field_d)))


# ---------------------------------------------------------------------------
# candidates for the complement of r^perp

@dataclass(frozen=True)
class Candidate:
    """A possible positive definite S_r^perp(-1), optionally an overlattice ``[label]_index``.

    ``prefix`` is an extra orthogonal summand outside the brackets, as in
    ``A1 + [A1^2 + <16>]_2``.
    """

    label: str
    index: int = 1
    prefix: str = ""
    excluded: bool = False      # ruled out a priori (fewer roots than S^perp)

    @property
    def display(self) -> str:
        inner = f"[{self.label}]_{self.index}" if self.index > 1 else self.label
        return f"{self.prefix} + {inner}" if self.prefix else inner


@dataclass
class CandidateResult:
    candidate: Candidate
    root_count: int | None
    rank: int
    det: Fraction | None
    passed: bool | None
    glue_count: int = 0
    note: str = ""


def _glued_lattices(base: QuadraticLattice, index: int) -> list[QuadraticLattice]:
    """All distinct even overlattices ``base + Z x`` with x of order ``index``."""
    seen = set()
    out = []
    for x in discriminant_elements(base):
        if glue_order(x) != index:
            continue
        nrm = base.norm(x)
        if nrm.denominator != 1 or nrm % 2:
            continue
        # different glue generators of the same cyclic group give the same lattice
        span = tuple(sorted(tuple(((k * xi) % 1) for xi in x) for k in range(1, index)
                            if math.gcd(k, index) == 1))
        if span in seen:
            continue
        seen.add(span)
        out.append(overlattice(base, x, index))
    return out


def evaluate_candidate(cand: Candidate, s_perp_roots: int) -> CandidateResult:
    base = from_label(cand.label)
    prefix = from_label(cand.prefix) if cand.prefix else None
    if cand.index == 1:
        lats = [base]
    else:
        lats = _glued_lattices(base, cand.index)
    if not lats:
        rank = base.rank + (prefix.rank if prefix else 0)
        return CandidateResult(cand, None, rank, None, None, 0,
                               "unverified candidate: no even glue of this order exists")
    if prefix is not None:
        lats = [lattice(linalg.block_diag(prefix.gram, L.gram)) for L in lats]
    for L in lats:
        if is_definite(L) == 0:
            raise ValueError(f"candidate {cand.display} is not definite")
    counts = [root_count(L) for L in lats]
    # conservative: the comparison must hold for every admissible glue
    r = min(counts)
    det = determinant(lats[counts.index(r)])
    passed = s_perp_roots < r
    note = ""
    if len(set(counts)) > 1:
        note = f"root counts over glues: {sorted(set(counts))}"
    return CandidateResult(cand, r, lats[0].rank, det, passed, len(lats) if cand.index > 1 else 0, note)


@dataclass
class ComparisonReport:
    s_perp_roots: int
    results: list[CandidateResult]

    @property
    def passed(self) -> bool:
        """Every admissible candidate has strictly more roots; excluded ones must not."""
        for res in self.results:
            if res.passed is None:
                continue
            if res.candidate.excluded == res.passed:
                return False
        return True


def reflective_comparison(s_perp_roots: int, candidates: Sequence[Candidate]) -> ComparisonReport:
    return ComparisonReport(s_perp_roots, [evaluate_candidate(c, s_perp_roots) for c in candidates])


# ---------------------------------------------------------------------------
# end-to-end verdicts

class Status(str, enum.Enum):
    GENERAL_TYPE_CONDITIONAL_ON_STAR = "GENERAL_TYPE_CONDITIONAL_ON_STAR"
    HYPOTHESIS_FAILED = "HYPOTHESIS_FAILED"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Verdict:
    case: str
    status: Status
    checks: list[Check]
    notes: list[str] = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def failed_conditions(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


@dataclass
class EmbeddingCase:
    name: str
    field_d: int
    ambient: HermitianLattice
    sub_gram: tuple                      # Hermitian Gram of the embedded lattice
    embedding: tuple                     # images of the sub basis, ambient coordinates
    expected_complement: str             # label of (L_Q)^perp, e.g. "A2(-1)^2"
    expected_weight: int | None          # None: report the computed value only
    expected_root_weight: int | None
    n: int
    star_assumed: bool = True
    candidates: tuple[Candidate, ...] = ()
    odd_candidates: tuple[str, ...] = ()  # listed lattices that must fail evenness
    expected_sub_trace: tuple | None = None
    candidate_dets: frozenset[int] | None = None

    @property
    def sub_rank(self) -> int:
        return len(self.embedding)


def _trace_vectors(vectors, d: int) -> list[list[int]]:
    theta = ring_basis(d).theta
    out = []
    for v in vectors:
        for mult in (FieldElement.rational(1, d), theta):
            coords = hermitian.to_trace_coords([mult * x for x in v])
            out.append([int(c) for c in coords])
    return out


def run_case(case: EmbeddingCase) -> Verdict:
    checks: list[Check] = []
    notes: list[str] = []
    values: dict = {}
    d = case.field_d
    M = case.ambient

    def check(name: str, ok: bool, detail: str = "") -> bool:
        checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    if d not in (-1, -3):
        return Verdict(case.name, Status.NOT_APPLICABLE,
                       [Check("field has extra units", False, f"d={d}")], notes, values)

    # (1) the embedded lattice
    emb = [[hermitian._fe(x, d) for x in v] for v in case.embedding]
    K = HermitianLattice(d, case.sub_gram)
    image = [[M.form(u, w) for w in emb] for u in emb]
    if all(image[i][j] == K.gram[i][j] for i in range(K.rank) for j in range(K.rank)):
        check("embedding preserves the form", True)
    else:
        same_trace = find_isometry(lattice(hermitian.trace_gram(HermitianLattice(d, image))),
                                   trace_form(K)) is not None if is_definite(trace_form(K)) else False
        check("embedding preserves the form", same_trace,
              "image Gram differs; trace forms isometric" if same_trace else "image Gram differs")
        if same_trace:
            notes.append("image Gram is the conjugate-convention form of the stated Gram; "
                         "the trace lattices agree")
    check("embedded lattice is integral and even", hermitian.is_integral(K) and hermitian.is_even(K))
    KQ = trace_form(K)
    if case.expected_sub_trace is not None:
        check("trace form of the embedded lattice", [list(r) for r in KQ.int_gram()] ==
              [list(r) for r in case.expected_sub_trace])
    MQ = trace_form(M)
    check("ambient trace lattice is even unimodular of signature (2,26)",
          is_even(MQ) and abs(determinant(MQ)) == 1 and tuple(signature(MQ)) == (2, 26))
    k_trace = _trace_vectors(emb, d)
    k_sub = embeddings.Sublattice(MQ, tuple(map(tuple, k_trace)))
    check("embedded lattice is primitive", embeddings.is_primitive(k_sub))

    # (2) L = complement over O_F, and its trace lattice inside II_{2,26}
    L, l_basis = hermitian.hermitian_complement(M, emb, return_basis=True)
    sig = hermitian.signature(L)
    values["signature"] = sig
    values["n"] = sig[1]
    check("L has signature (1,n)", sig == (1, case.n), f"got {sig}, expected (1,{case.n})")
    check("L is even", hermitian.is_integral(L) and hermitian.is_even(L))
    LQ_sub = embeddings.Sublattice(MQ, tuple(map(tuple, _trace_vectors(l_basis, d))))
    check("L_Q is primitive in II_{2,26}", embeddings.is_primitive(LQ_sub))
    comp = embeddings.orthogonal_complement(LQ_sub)
    check("complement of L_Q is the embedded lattice",
          embeddings.same_lattice(comp.basis, k_sub.basis))
    C = comp.lattice()
    expected = from_label(case.expected_complement)
    iso = is_definite(C) != 0 and find_isometry(C, expected) is not None
    check(f"(L_Q)^perp isometric to {case.expected_complement}", iso)
    ident = root_system_identify(C) if is_definite(C) else None
    values["root_system"] = str(ident) if ident else "indefinite"

    # (3) roots and weights
    r = root_count(C) if is_definite(C) else 0
    values["root_count"] = r
    check("r((L_Q)^perp) > 0", r > 0, f"r = {r}")
    if r % 2 == 0:
        qp = quasi_pullback_weight(r)
        values["weight"] = qp.weight
        if case.expected_weight is not None:
            check("quasi-pullback weight", qp.weight == case.expected_weight,
                  f"{qp.weight} vs expected {case.expected_weight}")
        try:
            rw = root_extracted_weight(qp.weight, d)
        except ValueError as exc:
            check("root-extracted weight", False, str(exc))
        else:
            values["root_weight"] = rw
            if case.expected_root_weight is not None:
                check("root-extracted weight", rw == case.expected_root_weight,
                      f"{rw} vs expected {case.expected_root_weight}")
            check("root-extracted weight < n", rw < sig[1], f"{rw} < {sig[1]}")
    check("n > (24 + r)/#units", inequality_check(sig[1], r, d),
          f"{sig[1]} > {Fraction(24 + r, len(units(d)))}")

    # (4) reflective comparison
    if case.candidates:
        rep = reflective_comparison(r, case.candidates)
        values["comparison"] = rep
        check("r(S^perp) < r(S_r^perp) for admissible candidates", rep.passed)
        for res in rep.results:
            want_rank = C.rank + 1
            if res.rank != want_rank:
                notes.append(f"candidate {res.candidate.display} has rank {res.rank}, "
                             f"expected {want_rank}")
            if res.det is not None and case.candidate_dets and res.det not in case.candidate_dets:
                notes.append(f"candidate {res.candidate.display} has det {res.det}, "
                             f"outside {sorted(case.candidate_dets)}")
            if res.note:
                notes.append(f"candidate {res.candidate.display}: {res.note}")
    else:
        check("no reflective candidates (comparison holds vacuously)", True)
    for label in case.odd_candidates:
        check(f"listed lattice {label} is odd", not is_even(from_label(label)))

    failed = [c for c in checks if not c.passed]
    if failed:
        status = Status.HYPOTHESIS_FAILED
    elif not case.star_assumed:
        status = Status.NOT_APPLICABLE
        notes.append("star condition not assumed; all checkable hypotheses hold")
    else:
        status = Status.GENERAL_TYPE_CONDITIONAL_ON_STAR
    return Verdict(case.name, status, checks, notes, values)
