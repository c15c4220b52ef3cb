"""Nearest singular matrices and structured conditioning for symmetric tridiagonal Toeplitz matrices."""

__version__ = "0.1.0"

from .core import SttMatrix, dense, eigenvalue, eigenvalues, eigenvector, spectrum
from .distance import (
    nearest_singular_fixed_index,
    spectral_bounds,
    structured_distance,
    tie_analysis,
    unstructured_distance,
)
from .errors import DomainError, NotDefiniteError, ResourceError, SttError, UnsupportedStructureError
from .sensitivity import project_rank_one, structured_condition_number, worst_case_perturbation

__all__ = [
    "SttMatrix",
    "dense",
    "eigenvalue",
    "eigenvalues",
    "eigenvector",
    "spectrum",
    "nearest_singular_fixed_index",
    "spectral_bounds",
    "structured_distance",
    "tie_analysis",
    "unstructured_distance",
    "project_rank_one",
    "structured_condition_number",
    "worst_case_perturbation",
    "DomainError",
    "NotDefiniteError",
    "ResourceError",
    "SttError",
    "UnsupportedStructureError",
]
