"""Exact Samelson-type complex structures on tangent Lie algebras."""

from .algebra import (
    Element,
    LieAlgebra,
    ad_matrix,
    bracket,
    center,
    centralizer,
    change_basis,
    check_compact_type,
    check_jacobi,
    direct_sum,
    killing_form,
    killing_matrix,
)
from .errors import AlgebraError, DecompositionError, ParseError
from .report import VerificationItem, VerificationReport
from .roots import (
    Root,
    RootDatum,
    choose_positive_system,
    find_maximal_torus,
    normalize_root_vectors,
    root_space_decomposition,
)
from .scalars import GaussianRational
from .structures import (
    ComplexStructure,
    build_classic_samelson,
    build_tangent_samelson,
    lift_complex_structure,
    tower_complex_structure,
)
from .tangent import TangentAlgebra, tangent_algebra, tower
from . import linalg
from .verify import (
    case_suite,
    nijenhuis,
    verification_report,
    verify_integrability,
    verify_j_squared,
)

__version__ = "0.1.0"

__all__ = [
    "ad_matrix",
    "AlgebraError",
    "bracket",
    "build_classic_samelson",
    "build_tangent_samelson",
    "case_suite",
    "center",
    "centralizer",
    "change_basis",
    "check_compact_type",
    "check_jacobi",
    "choose_positive_system",
    "ComplexStructure",
    "DecompositionError",
    "direct_sum",
    "Element",
    "find_maximal_torus",
    "GaussianRational",
    "killing_form",
    "killing_matrix",
    "LieAlgebra",
    "lift_complex_structure",
    "linalg",
    "nijenhuis",
    "normalize_root_vectors",
    "ParseError",
    "Root",
    "root_space_decomposition",
    "RootDatum",
    "tangent_algebra",
    "TangentAlgebra",
    "tower",
    "tower_complex_structure",
    "verification_report",
    "VerificationItem",
    "VerificationReport",
    "verify_integrability",
    "verify_j_squared",
]
