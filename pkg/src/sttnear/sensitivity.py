"""Structured eigenvalue condition numbers for symmetric tridiagonal Toeplitz matrices.

Every eigenvector of ``(n; delta, sigma)`` is independent of ``delta`` and
``sigma``, so the projection of ``x_h x_h^T`` onto the Toeplitz subspace has the
closed form ``(n; 1/n, c_h/(n-1))`` with ``c_h = cos(h pi/(n+1))``. Its Frobenius
norm is the structured condition number of ``lambda_h``; the unstructured one
is 1 for a symmetric matrix with unit eigenvectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core
from .core import SttMatrix
from .errors import DomainError


@dataclass(frozen=True)
class SttProjection:
    """A Toeplitz triple ``(n; d, s)`` produced by projection or rescaling."""

    n: int
    d: float
    s: float

    @property
    def fro_norm(self) -> float:
        return math.sqrt(self.n * self.d**2 + 2 * (self.n - 1) * self.s**2)

    def as_matrix(self) -> SttMatrix:
        return SttMatrix(self.n, self.d, self.s)

    def dense(self) -> np.ndarray:
        return core.dense(self.as_matrix())


@dataclass(frozen=True)
class ConditionReport:
    h: int
    kappa_structured: float
    kappa_unstructured: float = 1.0

    @property
    def ratio(self) -> float:
        return self.kappa_structured / self.kappa_unstructured


@dataclass(frozen=True)
class ExtremeReport:
    """Indices sharing the extreme structured condition number, plus its large-n estimate."""

    indices: tuple[int, ...]
    kappa: float
    estimate: float


def _check_n(n: int) -> None:
    if n < 2:
        raise DomainError(f"structured condition numbers need n >= 2, got {n}")


def structured_condition_number(n: int, h=None):
    """``sqrt(1/n + 2/(n-1) cos^2(h pi/(n+1)))``; all h = 1..n when ``h`` is None."""
    _check_n(n)
    c = core.cosines(n, h)
    return np.sqrt(1.0 / n + 2.0 / (n - 1) * c**2) if h is None else math.sqrt(1.0 / n + 2.0 / (n - 1) * c * c)


def condition_report(n: int, h: int) -> ConditionReport:
    return ConditionReport(h, structured_condition_number(n, h))


def project_rank_one(m: SttMatrix, h: int) -> SttProjection:
    """Closed-form projection of ``x_h x_h^T`` onto the Toeplitz subspace."""
    c = core.cosines(m.n, h)
    return SttProjection(m.n, 1.0 / m.n, c / (m.n - 1))


def worst_case_perturbation(m: SttMatrix, h: int) -> SttProjection:
    """Unit Frobenius-norm Toeplitz perturbation that moves ``lambda_h`` the most."""
    p = project_rank_one(m, h)
    norm = p.fro_norm
    return SttProjection(p.n, p.d / norm, p.s / norm)


def condition_extremes(n: int) -> tuple[ExtremeReport, ExtremeReport]:
    """(smallest, largest) structured condition numbers with their attaining indices.

    The smallest sits at the central index (pair of central indices for even n),
    the largest at the two extremal indices 1 and n.
    """
    _check_n(n)
    if n % 2:
        lo_idx = ((n + 1) // 2,)
    else:
        lo_idx = (n // 2, n // 2 + 1)
    lo = ExtremeReport(lo_idx, structured_condition_number(n, lo_idx[0]), math.sqrt(1.0 / n))
    hi = ExtremeReport((1, n), structured_condition_number(n, 1), math.sqrt(3.0 / n))
    return lo, hi


def extremes_ratio(n: int) -> float:
    lo, hi = condition_extremes(n)
    return hi.kappa / lo.kappa


def kappa_table(n: int) -> list[tuple[int, float]]:
    return list(zip(range(1, n + 1), structured_condition_number(n).tolist()))


def extremes_ratio_table(n_max: int = 100, n_min: int = 2) -> list[tuple[int, float, str]]:
    """Rows ``(n, kappa_max/kappa_min, parity)`` for n in [n_min, n_max]."""
    return [(n, extremes_ratio(n), "even" if n % 2 == 0 else "odd") for n in range(n_min, n_max + 1)]
