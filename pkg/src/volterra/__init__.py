"""Exact-arithmetic derivation solver for genetic Volterra algebras."""

__version__ = "0.1.0"

from .algebra import AlgebraSpec, HalfGraph, basis_product, half_graph, product, validate
from .derivations import (
    CaseLabel,
    case_family,
    check_family_containment,
    check_nonedge_zeros,
    check_row_sums,
    classify_case,
    coincidence_report,
    derivation_space,
    is_derivation,
)
from .linalg import Matrix, Subspace, annihilator, kernel_basis, rref, subspace_intersect
from .localder import local_conditions_at, local_derivation_space, local_equals_der, orbit

__all__ = [
    "AlgebraSpec",
    "CaseLabel",
    "HalfGraph",
    "Matrix",
    "Subspace",
    "annihilator",
    "basis_product",
    "case_family",
    "check_family_containment",
    "check_nonedge_zeros",
    "check_row_sums",
    "classify_case",
    "coincidence_report",
    "derivation_space",
    "half_graph",
    "is_derivation",
    "kernel_basis",
    "local_conditions_at",
    "local_derivation_space",
    "local_equals_der",
    "orbit",
    "product",
    "rref",
    "subspace_intersect",
    "validate",
    "__version__",
]
