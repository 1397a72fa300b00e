"""Finitely presented algebras, rewriting and presets."""

from .core import (
    DegreeOverflow, FPComoduleAlgebra, GeneratorMap, NFElement, NFTensor, PresentationError,
    PresentedAlgebra, check_confluence, check_fp_comodule_algebra, check_hopf,
    check_termination, degree_bound, format_terms, tensor_from_string,
)
from .presets import (
    FP_PRESETS, borel_bq2, borel_coaction, borel_projection, fp_preset, graded_quantum_plane,
    group_algebra_Zn, o_glq2, o_slq2, o_slq2_commutative, quantum_plane,
    quantum_plane_commutative, smash, smash_coaction, trivial_fp_coaction,
)

__all__ = [
    "DegreeOverflow", "FPComoduleAlgebra", "FP_PRESETS", "GeneratorMap", "NFElement", "NFTensor",
    "PresentationError", "PresentedAlgebra", "borel_bq2", "borel_coaction", "borel_projection",
    "check_confluence", "check_fp_comodule_algebra", "check_hopf", "check_termination",
    "degree_bound", "format_terms", "fp_preset", "graded_quantum_plane", "group_algebra_Zn",
    "o_glq2", "o_slq2", "o_slq2_commutative", "quantum_plane", "quantum_plane_commutative",
    "smash", "smash_coaction", "tensor_from_string", "trivial_fp_coaction",
]
