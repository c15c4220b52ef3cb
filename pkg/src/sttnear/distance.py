"""Distance to singularity, unstructured and within the Toeplitz class.

Unstructured (Frobenius or spectral): ``min_h |lambda_h|`` by Eckart-Young.
Structured (Frobenius): ``min_h |lambda_h| / kappa_h`` where ``kappa_h`` is the
structured condition number; the minimizing index ``h`` determines the closest
singular Toeplitz matrix ``(n; delta_*, sigma_*)`` in closed form.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import core
from .config import DENSE_CAP, TIE_RTOL
from .core import SttMatrix
from .errors import DomainError, ResourceError, UnsupportedStructureError
from .sensitivity import project_rank_one, structured_condition_number


@dataclass(frozen=True)
class SingularCandidate:
    """Closest Toeplitz matrix to ``T`` whose h-th eigenvalue vanishes."""

    n: int
    h: int
    delta_star: float
    sigma_star: float
    distance_f: float

    @property
    def matrix(self) -> SttMatrix:
        return SttMatrix(self.n, self.delta_star, self.sigma_star)


@dataclass(frozen=True)
class NearestSingularReport:
    n: int
    delta: float
    sigma: float
    minimizers: list[SingularCandidate]
    structured_distance_f: float
    unique: bool
    unstructured_distance: float
    unstructured_minimizer_indices: list[int]
    spectral_lower: float
    spectral_upper: float
    definite: bool

    @property
    def minimizer_indices(self) -> list[int]:
        return [c.h for c in self.minimizers]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TieReport:
    case: str  # "singular", "zero-diagonal-pair" or "general"
    magnitude_minimizers: list[int]
    ratio_minimizers: list[int]
    magnitude_unique: bool
    ratio_unique: bool
    coincide: bool
    tie_structure_ok: bool
    notes: list[str] = field(default_factory=list)


def _require_sigma(m: SttMatrix) -> None:
    if m.sigma == 0.0:
        raise UnsupportedStructureError(
            "sigma == 0: eigenvectors and structured condition numbers are not defined for a multiple of I"
        )


def _argmins(values: np.ndarray, rtol: float) -> list[int]:
    """1-based indices whose value is within ``rtol`` (relative) of the minimum."""
    best = float(values.min())
    return (np.flatnonzero(values <= best + rtol * abs(best)) + 1).tolist()


def ratios(m: SttMatrix) -> np.ndarray:
    """``|lambda_h| / kappa_h`` for h = 1..n."""
    return np.abs(core.eigenvalues(m)) / structured_condition_number(m.n)


def unstructured_distance(m: SttMatrix, tie_rtol: float = TIE_RTOL) -> tuple[float, list[int]]:
    """Frobenius (and spectral) distance to the singular matrices, and all attaining indices."""
    mags = np.abs(core.eigenvalues(m))
    return float(mags.min()), _argmins(mags, tie_rtol)


def nearest_singular_fixed_index(m: SttMatrix, h: int) -> SingularCandidate:
    n = m.n
    c = core.cosines(n, h)
    lam = m.delta + 2.0 * m.sigma * c
    if lam == 0.0:
        return SingularCandidate(n, h, m.delta, m.sigma, 0.0)
    denom = n - 1 + 2 * n * c * c
    delta_star = 2.0 * (n * c * c * m.delta - (n - 1) * c * m.sigma) / denom
    sigma_star = ((n - 1) * m.sigma - n * c * m.delta) / denom
    dist = abs(lam) / math.sqrt(1.0 / n + 2.0 * c * c / (n - 1))
    return SingularCandidate(n, h, delta_star, sigma_star, dist)


def rank_correction(m: SttMatrix, h: int) -> SttMatrix:
    """``T - lambda_h P / ||P||_F^2`` with ``P`` the projected rank-one eigenprojector.

    Built from the projection rather than the (delta_*, sigma_*) formulas; the
    two constructions coincide.
    """
    p = project_rank_one(m, h)
    lam = core.eigenvalue(m, h)
    w = lam / p.fro_norm**2
    return SttMatrix(m.n, m.delta - w * p.d, m.sigma - w * p.s)


def spectral_bounds(m: SttMatrix, h: int) -> tuple[float, float]:
    """Lower/upper bounds on the structured spectral-norm distance, ``h`` a ratio minimizer."""
    n = m.n
    c = core.cosines(n, h)
    c1 = core.cosines(n, 1)
    lam = core.eigenvalue(m, h)
    lower = float(np.abs(core.eigenvalues(m)).min())
    upper = abs(lam) * (n - 1 + 2 * n * abs(c) * c1) / (n - 1 + 2 * n * c * c)
    return lower, upper


def is_definite(m: SttMatrix) -> bool:
    lam = core.eigenvalues(m)
    return bool(lam.min() > 0.0 or lam.max() < 0.0)


def structured_distance(m: SttMatrix, tie_rtol: float = TIE_RTOL) -> NearestSingularReport:
    _require_sigma(m)
    r = ratios(m)
    best = _argmins(r, tie_rtol)
    minimizers = [nearest_singular_fixed_index(m, h) for h in best]
    d_unstructured, unstructured_idx = unstructured_distance(m, tie_rtol)
    upper = min(spectral_bounds(m, h)[1] for h in best)
    return NearestSingularReport(
        n=m.n,
        delta=m.delta,
        sigma=m.sigma,
        minimizers=minimizers,
        structured_distance_f=float(r[best[0] - 1]),
        unique=len(minimizers) == 1,
        unstructured_distance=d_unstructured,
        unstructured_minimizer_indices=unstructured_idx,
        spectral_lower=d_unstructured,
        spectral_upper=upper,
        definite=is_definite(m),
    )


def eckart_young_nearest(m: SttMatrix, k: int, cap: int = DENSE_CAP) -> np.ndarray:
    """Dense ``sum_{h != k} lambda_h x_h x_h^T``: drops the k-th spectral component."""
    if m.n > cap:
        raise ResourceError(f"dense realization of n={m.n} exceeds cap {cap}")
    core._check_index(m.n, k)
    lam = core.eigenvalues(m)
    lam[k - 1] = 0.0
    x = core.eigenvectors(m.n)
    return (x * lam) @ x.T


def _same_half(n: int, a: int, b: int) -> bool:
    """Both indices in one monotone half of 1..n; for odd n the halves share the centre."""
    mid = (n + 1) // 2 if n % 2 else n // 2
    if n % 2:
        return (a <= mid and b <= mid) or (a >= mid and b >= mid)
    return (a <= mid) == (b <= mid)


def _pair_ok(m: SttMatrix, pair: list[int]) -> bool:
    """Two tied indices must be consecutive with eigenvalues of opposite sign."""
    if len(pair) != 2:
        return False
    a, b = pair
    lam_a, lam_b = core.eigenvalue(m, a), core.eigenvalue(m, b)
    return abs(a - b) == 1 and lam_a * lam_b < 0


def tie_analysis(m: SttMatrix, tie_rtol: float = TIE_RTOL) -> TieReport:
    _require_sigma(m)
    n = m.n
    _, mag = unstructured_distance(m, tie_rtol)
    rat = _argmins(ratios(m), tie_rtol)
    notes = []

    if m.delta == 0.0 and n % 2:
        notes.append("delta = 0 and n odd: T is singular, both distances vanish")
        case = "singular"
        ok = mag == [(n + 1) // 2] and rat == mag
    elif m.delta == 0.0:
        case = "zero-diagonal-pair"
        pair = [n // 2, n // 2 + 1]
        ok = mag == pair and rat == pair and _pair_ok(m, pair)
        notes.append("delta = 0 and n even: two closest singular matrices, structured and unstructured")
    else:
        case = "general"
        ok = True
        if len(mag) > 1:
            ok &= _pair_ok(m, mag)
            notes.append(f"magnitude tie at {mag}")
        if len(rat) > 1:
            ok &= _pair_ok(m, rat) and _same_half(n, *rat)
            notes.append(f"ratio tie at {rat}")
        if len(mag) == 1 and len(rat) == 1 and mag != rat:
            notes.append(
                f"smallest |lambda| at h={mag[0]} but smallest |lambda|/kappa at h={rat[0]}"
            )
    return TieReport(
        case=case,
        magnitude_minimizers=mag,
        ratio_minimizers=rat,
        magnitude_unique=len(mag) == 1,
        ratio_unique=len(rat) == 1,
        coincide=mag == rat,
        tie_structure_ok=bool(ok),
        notes=notes,
    )


@dataclass(frozen=True)
class LaplacianAsymptotics:
    n: int
    lambda1: float
    lambda1_scaled: float  # lambda_1 n^2 / pi^2 -> 1
    structured_distance: float
    structured_scaled: float  # ratio n^{3/2} sqrt(3) / pi^2 -> 1
    delta_star: float  # -> 2
    sigma_star: float  # -> -1
    distance_ratio: float  # d_F / d_F^T
    distance_ratio_estimate: float  # sqrt(3/n)


def laplacian_asymptotics(n: int) -> LaplacianAsymptotics:
    """Large-n behaviour of the discrete Laplacian ``(n; 2, -1)``."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    # 2 - 2cos(t) = 4 sin^2(t/2) avoids cancellation for large n
    lam1 = 4.0 * math.sin(math.pi / (2 * (n + 1))) ** 2
    kappa1 = structured_condition_number(n, 1)
    cand = nearest_singular_fixed_index(SttMatrix(n, 2.0, -1.0), 1)
    ratio = lam1 / kappa1
    return LaplacianAsymptotics(
        n=n,
        lambda1=lam1,
        lambda1_scaled=lam1 * n**2 / math.pi**2,
        structured_distance=ratio,
        structured_scaled=ratio * n**1.5 * math.sqrt(3.0) / math.pi**2,
        delta_star=cand.delta_star,
        sigma_star=cand.sigma_star,
        distance_ratio=kappa1,
        distance_ratio_estimate=math.sqrt(3.0 / n),
    )


@dataclass(frozen=True)
class ZeroDiagonalAsymptotics:
    n: int
    sigma: float
    distance_f: float  # order 1/n
    structured_distance_f: float  # order 1/sqrt(n)
    plus: SingularCandidate  # index n/2
    minus: SingularCandidate  # index n/2 + 1
    distance_f_scaled: float  # d_F n / (pi |sigma|) -> 1
    structured_scaled: float  # d_F^T sqrt(n) / (pi |sigma|) -> 1
    distance_ratio_scaled: float  # (d_F / d_F^T) sqrt(n) -> 1


def zero_diag_asymptotics(n: int, sigma: float) -> ZeroDiagonalAsymptotics:
    """Large-n behaviour of ``(n; 0, sigma)`` for even n (odd n is singular)."""
    if n % 2:
        raise DomainError(f"(n; 0, sigma) is singular for odd n={n}")
    m = SttMatrix(n, 0.0, sigma)
    _require_sigma(m)
    c = core.cosines(n, n // 2)
    d_f = 2.0 * abs(sigma) * abs(c)
    kappa = structured_condition_number(n, n // 2)
    plus = nearest_singular_fixed_index(m, n // 2)
    minus = nearest_singular_fixed_index(m, n // 2 + 1)
    d_t = d_f / kappa
    return ZeroDiagonalAsymptotics(
        n=n,
        sigma=sigma,
        distance_f=d_f,
        structured_distance_f=d_t,
        plus=plus,
        minus=minus,
        distance_f_scaled=d_f * n / (math.pi * abs(sigma)),
        structured_scaled=d_t * math.sqrt(n) / (math.pi * abs(sigma)),
        distance_ratio_scaled=d_f / d_t * math.sqrt(n),
    )
