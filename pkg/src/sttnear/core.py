"""Symmetric tridiagonal Toeplitz matrices and their closed-form eigenpairs.

A matrix ``(n; delta, sigma)`` has ``delta`` on the diagonal and ``sigma`` on
both first off-diagonals. Eigenpairs are indexed ``h = 1..n`` with

    lambda_h = delta + 2 sigma cos(h pi / (n + 1))
    x_{h,k}  = sqrt(2 / (n + 1)) sin(h k pi / (n + 1))

so index order follows the cosine (decreasing), not magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DENSE_CAP
from .errors import DomainError, ResourceError


@dataclass(frozen=True)
class SttMatrix:
    """The triple ``(n; delta, sigma)``."""

    n: int
    delta: float
    sigma: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if self.n < 2:
            raise DomainError(f"n must be >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "delta", float(self.delta))
        object.__setattr__(self, "sigma", float(self.sigma))
        if not (math.isfinite(self.delta) and math.isfinite(self.sigma)):
            raise DomainError("delta and sigma must be finite")

    @property
    def scale(self) -> float:
        """``|delta| + 2 |sigma|``, an upper bound on the spectral radius."""
        return abs(self.delta) + 2.0 * abs(self.sigma)

    def scaled(self, alpha: float) -> "SttMatrix":
        return SttMatrix(self.n, alpha * self.delta, alpha * self.sigma)

    def __str__(self):
        return f"({self.n}; {self.delta:.17g}, {self.sigma:.17g})"


@dataclass(frozen=True)
class EigenPair:
    h: int
    lam: float
    x: np.ndarray


@dataclass(frozen=True)
class Spectrum:
    """All eigenpairs of ``m``; ``values[h-1]`` and ``vectors[:, h-1]`` belong to index h."""

    m: SttMatrix
    values: np.ndarray
    vectors: np.ndarray

    def __len__(self):
        return self.m.n

    def __getitem__(self, h: int) -> EigenPair:
        _check_index(self.m.n, h)
        return EigenPair(h, float(self.values[h - 1]), self.vectors[:, h - 1])

    @property
    def pairs(self) -> list[EigenPair]:
        return [self[h] for h in range(1, self.m.n + 1)]

    @cached_property
    def magnitude_order(self) -> np.ndarray:
        """Indices h sorted by increasing |lambda_h| (stable, ties by lower h)."""
        return np.argsort(np.abs(self.values), kind="stable") + 1


def _check_index(n: int, h) -> None:
    if isinstance(h, bool) or int(h) != h or not 1 <= h <= n:
        raise DomainError(f"eigen-index must lie in 1..{n}, got {h!r}")


def cosines(n: int, h=None) -> np.ndarray | float:
    """``cos(h pi / (n + 1))`` for index ``h`` (scalar) or for all h = 1..n.

    Evaluated as ``sin((n + 1 - 2h) pi / (2(n + 1)))`` so that mirrored indices
    give exactly opposite values and the central index of odd n gives exactly 0.
    """
    if h is None:
        hs = np.arange(1, n + 1)
        return np.sin((n + 1 - 2 * hs) * np.pi / (2 * (n + 1)))
    _check_index(n, h)
    return math.sin((n + 1 - 2 * int(h)) * math.pi / (2 * (n + 1)))


def eigenvalue(m: SttMatrix, h: int) -> float:
    return m.delta + 2.0 * m.sigma * cosines(m.n, h)


def eigenvalues(m: SttMatrix) -> np.ndarray:
    """All eigenvalues in index order h = 1..n."""
    return m.delta + 2.0 * m.sigma * cosines(m.n)


def eigenvector(m: SttMatrix, h: int) -> np.ndarray:
    """Unit eigenvector for index h. Depends on ``m.n`` only."""
    _check_index(m.n, h)
    return _eigenvector(m.n, int(h))


def _eigenvector(n: int, h: int) -> np.ndarray:
    k = np.arange(1, n + 1)
    # reduce h*k modulo the period 2(n+1) before scaling by pi
    phase = (h * k) % (2 * (n + 1))
    return math.sqrt(2.0 / (n + 1)) * np.sin(phase * np.pi / (n + 1))


def eigenvectors(n: int) -> np.ndarray:
    """Orthogonal matrix X with the index-h eigenvector in column h-1."""
    k = np.arange(1, n + 1)
    phase = np.outer(k, k) % (2 * (n + 1))
    return math.sqrt(2.0 / (n + 1)) * np.sin(phase * np.pi / (n + 1))


def spectrum(m: SttMatrix) -> Spectrum:
    return Spectrum(m, eigenvalues(m), eigenvectors(m.n))


def is_singular(m: SttMatrix) -> bool:
    return bool(np.any(eigenvalues(m) == 0.0))


def dense(m: SttMatrix, cap: int = DENSE_CAP) -> np.ndarray:
    """Dense n-by-n realization."""
    if m.n > cap:
        raise ResourceError(f"dense realization of n={m.n} exceeds cap {cap}")
    a = np.zeros((m.n, m.n))
    i = np.arange(m.n)
    a[i, i] = m.delta
    a[i[:-1], i[1:]] = m.sigma
    a[i[1:], i[:-1]] = m.sigma
    return a
