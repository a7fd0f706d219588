"""Exact two-particle eigensolutions on a star graph with delta interaction."""

from .core import A12, A21, ParameterError, Params, Region, Wave, from_coords, to_coords, wave_add, wave_scale
from .basis import SubbasisKind, build_Phi, build_Psi, phi, product, subbasis, verify_dependencies
from .conditions import defect, diag_jump, diag_value, dbc_residual, is_solution, vertex_residuals
from .solutions import (
    certify,
    certify_completeness,
    continuous_nonsmooth_subspace,
    defect_range_analysis,
    enumerate_solutions,
    family_antisymmetric,
    family_nonsmooth,
    family_off_diagonal,
)

__all__ = [
    "A12", "A21", "ParameterError", "Params", "Region", "Wave", "from_coords", "to_coords",
    "wave_add", "wave_scale", "SubbasisKind", "build_Phi", "build_Psi", "phi", "product",
    "subbasis", "verify_dependencies", "defect", "diag_jump", "diag_value", "dbc_residual",
    "is_solution", "vertex_residuals", "certify", "certify_completeness",
    "continuous_nonsmooth_subspace", "defect_range_analysis", "enumerate_solutions",
    "family_antisymmetric", "family_nonsmooth", "family_off_diagonal",
]
