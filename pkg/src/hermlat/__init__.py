"""Exact Hermitian lattices over imaginary quadratic fields, their trace
lattices, and the arithmetic checks built on them."""

from .exact import FieldElement
from .general_type import (
    Candidate,
    EmbeddingCase,
    Status,
    Verdict,
    quasi_pullback_weight,
    root_extracted_weight,
    run_case,
)
from .hermitian import HermitianLattice, hermitian_complement, tau_reflection
from .quadratic import (
    QuadraticLattice,
    determinant,
    discriminant_group,
    is_even,
    lattice,
    sigma_reflection,
    signature,
    trace_form,
)
from .definite import find_isometry, root_count, root_system_identify, short_vectors
from .singularity import EigenvalueProfile, age, c_w, rst_min_age, seisu_verify, t_d

__version__ = "0.1.0"

__all__ = [
    "Candidate", "EigenvalueProfile", "EmbeddingCase", "FieldElement", "HermitianLattice",
    "QuadraticLattice", "Status", "Verdict", "age", "c_w", "determinant", "discriminant_group",
    "find_isometry", "hermitian_complement", "is_even", "lattice", "quasi_pullback_weight",
    "root_count", "root_extracted_weight", "root_system_identify", "rst_min_age", "run_case",
    "seisu_verify", "short_vectors", "sigma_reflection", "signature", "t_d", "tau_reflection",
    "trace_form",
]
