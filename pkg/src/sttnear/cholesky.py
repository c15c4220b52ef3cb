"""Cholesky factor of a definite symmetric tridiagonal Toeplitz matrix.

The factor ``R`` of ``T = R^T R`` is upper bidiagonal and follows the forward
recurrence ``r_11 = sqrt(delta)``, ``r_{i-1,i} = sigma / r_{i-1,i-1}``,
``r_ii = sqrt(delta - r_{i-1,i}^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core
from .config import DENSE_CAP
from .core import SttMatrix
from .errors import DomainError, NotDefiniteError, ResourceError

# slack for the non-strict monotonicity checks; the recurrence converges to a
# fixed point, where neighbouring entries differ only by rounding
_MONO_RTOL = 8 * np.finfo(float).eps


@dataclass(frozen=True)
class CholeskyFactor:
    """Diagonal and superdiagonal of ``R``; ``sign * R^T R`` reproduces T."""

    diag: np.ndarray
    super: np.ndarray
    sign: int = 1

    @property
    def n(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        r = np.diag(self.diag)
        if self.n > 1:
            r[np.arange(self.n - 1), np.arange(1, self.n)] = self.super
        return r

    def reconstruct(self) -> np.ndarray:
        r = self.dense()
        return self.sign * (r.T @ r)


@dataclass(frozen=True)
class MonotonicityReport:
    # (i) r_{i-1,i-1} >= r_ii > 0
    diagonal_decreasing: bool
    diagonal_violation: int | None
    # (ii) sign(r_{i-1,i}) == sign(sigma) and |r_{i-1,i}| <= |r_{i,i+1}|
    super_sign_ok: bool
    super_sign_violation: int | None
    super_increasing: bool
    super_violation: int | None
    # (iii) only meaningful when delta >= 2|sigma|
    dominance_applicable: bool
    dominance_holds: bool
    dominance_violation: int | None

    @property
    def all_hold(self) -> bool:
        ok = self.diagonal_decreasing and self.super_sign_ok and self.super_increasing
        return ok and (self.dominance_holds or not self.dominance_applicable)


@dataclass(frozen=True)
class InverseFactorReport:
    """Sign and monotonicity pattern of the upper triangle of ``R^{-1}``.

    For sigma > 0 the entries alternate in sign along each row; ``positive``
    then checks that alternation and the monotonicity checks use magnitudes.
    """

    positive: bool
    rows_decreasing: bool
    row_violation: tuple[int, int] | None
    diagonals_increasing: bool
    diagonal_violation: tuple[int, int] | None

    @property
    def all_hold(self) -> bool:
        return self.positive and self.rows_decreasing and self.diagonals_increasing


def smallest_eigenvalue(m: SttMatrix) -> float:
    return m.delta - 2.0 * abs(m.sigma) * core.cosines(m.n, 1)


def is_positive_definite(m: SttMatrix) -> bool:
    return smallest_eigenvalue(m) > 0.0


def _recurrence(n: int, delta: float, sigma: float) -> tuple[np.ndarray, np.ndarray]:
    diag = np.empty(n)
    sup = np.empty(n - 1)
    diag[0] = math.sqrt(delta)
    for i in range(1, n):
        sup[i - 1] = sigma / diag[i - 1]
        diag[i] = math.sqrt(delta - sup[i - 1] ** 2)
    return diag, sup


def cholesky_factor(m: SttMatrix) -> CholeskyFactor:
    """Factor a positive definite ``m``; a negative definite one is factored as ``-m``."""
    lam_min = smallest_eigenvalue(m)
    if lam_min > 0.0:
        return CholeskyFactor(*_recurrence(m.n, m.delta, m.sigma), sign=1)
    lam_max = m.delta + 2.0 * abs(m.sigma) * core.cosines(m.n, 1)
    if lam_max < 0.0:
        return CholeskyFactor(*_recurrence(m.n, -m.delta, -m.sigma), sign=-1)
    raise NotDefiniteError(f"{m} is not definite (smallest eigenvalue {lam_min:.6g})", lam_min)


def _first(mask: np.ndarray) -> int | None:
    bad = np.flatnonzero(~mask)
    return None if bad.size == 0 else int(bad[0])


def monotonicity_report(f: CholeskyFactor, m: SttMatrix) -> MonotonicityReport:
    """Check the diagonal/superdiagonal ordering of the factor.

    Violation indices are the 1-based row ``i`` of the inequality that fails.
    """
    r, u = f.diag, f.super
    sigma = f.sign * m.sigma
    delta = f.sign * m.delta

    ok_i = (r[1:] <= r[:-1] * (1 + _MONO_RTOL)) & (r[1:] > 0)
    v = _first(ok_i)
    diag_violation = None if v is None else v + 2
    if r[0] <= 0:
        diag_violation = 1

    sign_ok = np.sign(u) == np.sign(sigma)
    v = _first(sign_ok)
    sign_violation = None if v is None else v + 2

    au = np.abs(u)
    ok_ii = au[:-1] <= au[1:] * (1 + _MONO_RTOL)
    v = _first(ok_ii)
    super_violation = None if v is None else v + 2

    applicable = delta >= 2 * abs(sigma)
    ok_iii = (r[:-1] > au) & (r[1:] > au)
    v = _first(ok_iii)
    dom_violation = None if v is None else v + 2

    return MonotonicityReport(
        diagonal_decreasing=diag_violation is None,
        diagonal_violation=diag_violation,
        super_sign_ok=sign_violation is None,
        super_sign_violation=sign_violation,
        super_increasing=super_violation is None,
        super_violation=super_violation,
        dominance_applicable=bool(applicable),
        dominance_holds=dom_violation is None,
        dominance_violation=dom_violation,
    )


def inverse_factor(f: CholeskyFactor, cap: int = DENSE_CAP) -> np.ndarray:
    """Dense ``R^{-1}`` by substitution on the bidiagonal factor (no general inverse)."""
    n = f.n
    if n > cap:
        raise ResourceError(f"dense inverse of n={n} exceeds cap {cap}")
    x = np.zeros((n, n))
    # column j of X R = I:  x[:, j-1] * u_{j-1} + x[:, j] * r_j = e_j
    x[0, 0] = 1.0 / f.diag[0]
    for j in range(1, n):
        x[:j, j] = -f.super[j - 1] * x[:j, j - 1] / f.diag[j]
        x[j, j] = 1.0 / f.diag[j]
    return x


def inverse_factor_report(rinv: np.ndarray, sigma: float) -> InverseFactorReport:
    n = rinv.shape[0]
    a = np.abs(rinv)
    i, j = np.triu_indices(n)
    entries = rinv[i, j]
    if sigma < 0:
        positive = bool(np.all(entries > 0))
    else:
        # columns alternate in sign: sign(r^{-1}_{ij}) = (-1)^(j-i)
        positive = bool(np.all(entries * (-1.0) ** (j - i) > 0))

    row_violation = None
    for i in range(n - 1):
        row = a[i, i:]
        bad = np.flatnonzero(row[1:] > row[:-1] * (1 + _MONO_RTOL))
        if bad.size:
            row_violation = (i + 1, i + 2 + int(bad[0]))
            break

    diag_violation = None
    for k in range(n):
        d = np.diagonal(a, k)
        bad = np.flatnonzero(d[1:] < d[:-1] * (1 - _MONO_RTOL))
        if bad.size:
            diag_violation = (k, int(bad[0]) + 2)
            break

    return InverseFactorReport(
        positive=positive,
        rows_decreasing=row_violation is None,
        row_violation=row_violation,
        diagonals_increasing=diag_violation is None,
        diagonal_violation=diag_violation,
    )


def laplacian_inverse_entry(n: int, i: int, j: int) -> float:
    """Entry (i, j) of the inverse of ``(n; 2, -1)``, 1-based."""
    for idx in (i, j):
        if isinstance(idx, bool) or int(idx) != idx or not 1 <= idx <= n:
            raise DomainError(f"index must lie in 1..{n}, got {idx!r}")
    if i > j:
        i, j = j, i
    return i * (n - j + 1) / (n + 1)


def laplacian_inverse(n: int) -> np.ndarray:
    k = np.arange(1, n + 1)
    lo = np.minimum.outer(k, k)
    hi = np.maximum.outer(k, k)
    return lo * (n - hi + 1) / (n + 1)
