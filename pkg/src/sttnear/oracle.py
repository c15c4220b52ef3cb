"""Brute-force cross-checks that never touch the closed-form eigenvalues.

* eigenvalues by Sturm-sequence bisection (dense symmetric input is first
  reduced to tridiagonal form with Householder reflections);
* projection of an arbitrary square matrix onto the Toeplitz subspace by
  averaging each structure diagonal;
* nearest singular Toeplitz matrix with a prescribed null eigen-index by
  direct 1-D minimization of the Frobenius distance;
* the random-sampling experiment counting matrices whose smallest |lambda|
  and smallest |lambda|/kappa sit at different indices.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import core
from .config import DENSE_CAP, TIE_RTOL
from .core import SttMatrix
from .errors import DomainError
from .sensitivity import SttProjection, structured_condition_number

_EPS = np.finfo(float).eps


# -- eigenvalues ---------------------------------------------------------------


def sturm_count(diag, off, shifts) -> np.ndarray:
    """Number of eigenvalues strictly below each shift.

    Runs the LDL^T pivot recurrence ``q_i = (a_i - x) - b_{i-1}^2 / q_{i-1}``
    for all shifts at once and counts negative pivots.
    """
    diag = np.asarray(diag, dtype=float)
    off2 = np.asarray(off, dtype=float) ** 2
    x = np.atleast_1d(np.asarray(shifts, dtype=float))
    scale = max(np.abs(diag).max(initial=0.0), math.sqrt(off2.max(initial=0.0)), 1e-300)
    pivmin = _EPS * _EPS * scale * scale
    count = np.zeros(x.shape, dtype=np.int64)
    q = diag[0] - x
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count += q < 0
    for i in range(1, len(diag)):
        q = (diag[i] - x) - off2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count


def tridiagonal_eigenvalues(diag, off, max_iter: int = 200) -> np.ndarray:
    """All eigenvalues of a symmetric tridiagonal matrix, ascending, by bisection."""
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    n = len(diag)
    if n == 1:
        return diag.copy()
    radius = np.zeros(n)
    radius[:-1] += np.abs(off)
    radius[1:] += np.abs(off)
    lo_bound = float((diag - radius).min())
    hi_bound = float((diag + radius).max())
    pad = 2 * _EPS * max(abs(lo_bound), abs(hi_bound), 1e-300)
    lo = np.full(n, lo_bound - pad)
    hi = np.full(n, hi_bound + pad)
    target = np.arange(1, n + 1)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        # stop once no interval can be split further in floating point
        if np.all((mid <= lo) | (mid >= hi)):
            break
        below = sturm_count(diag, off, mid) >= target
        hi = np.where(below, mid, hi)
        lo = np.where(below, lo, mid)
    return 0.5 * (lo + hi)


def householder_tridiagonal(a) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal similarity reduction of a dense symmetric matrix to tridiagonal form."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k]
        norm = np.linalg.norm(x)
        if norm == 0.0:
            continue
        alpha = -math.copysign(norm, x[0])
        v = x.copy()
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        block = a[k + 1 :, k:]
        block -= 2.0 * np.outer(v, v @ block)
        block = a[k:, k + 1 :]
        block -= 2.0 * np.outer(block @ v, v)
    return np.diagonal(a).copy(), np.diagonal(a, 1).copy()


def symmetric_eigenvalues(a) -> np.ndarray:
    """Ascending eigenvalues of a dense symmetric matrix (Householder + bisection)."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0, atol=1e-13 * max(np.abs(a).max(), 1.0)):
        raise DomainError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    return tridiagonal_eigenvalues(*householder_tridiagonal(a))


def dense_eigenvalues(m: SttMatrix, cap: int = DENSE_CAP) -> np.ndarray:
    """Ascending eigenvalues of the dense realization of ``m``, computed by bisection."""
    a = core.dense(m, cap)
    return tridiagonal_eigenvalues(np.diagonal(a), np.diagonal(a, 1))


# -- projection ----------------------------------------------------------------


def project_to_stt(a) -> SttProjection:
    """Frobenius-nearest symmetric tridiagonal Toeplitz matrix to a square ``a``.

    ``d`` is the mean of the diagonal; ``s`` the mean of the 2(n-1) entries on
    the first sub- and super-diagonal pooled together.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    d = float(np.mean(np.diagonal(a)))
    s = float(np.mean(np.concatenate([np.diagonal(a, 1), np.diagonal(a, -1)])))
    return SttProjection(n, d, s)


# -- 1-D optimization ------------------------------------------------------------

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def singular_family_distance(m: SttMatrix, h: int, s: float) -> float:
    """Frobenius distance from ``m`` to ``(n; -2 c_h s, s)``, which is singular at index h."""
    c = core.cosines(m.n, h)
    dd = m.delta + 2.0 * c * s
    ds = m.sigma - s
    return math.sqrt(m.n * dd * dd + 2 * (m.n - 1) * ds * ds)


def grid_optimal_singular(m: SttMatrix, h: int, grid_points: int = 401) -> tuple[float, float]:
    """Minimize the distance to the singular family by grid bracketing + golden section.

    The squared distance is an upward parabola in ``s`` so one grid pass
    brackets the minimum inside ``[-B, B]``, ``B = 2(|sigma| + |delta|) + 1``.
    Returns ``(s_opt, distance)``.
    """
    core._check_index(m.n, h)

    def f(s):
        return singular_family_distance(m, h, s)

    bound = 2.0 * (abs(m.sigma) + abs(m.delta)) + 1.0
    grid = np.linspace(-bound, bound, grid_points)
    values = [f(s) for s in grid]
    i = int(np.argmin(values))
    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, grid_points - 1)]

    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(400):
        if b - a <= 4 * _EPS * max(abs(a), abs(b), 1e-300):
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    candidates = [(f1, x1), (f2, x2), (f(a), a), (f(b), b)]
    best_f, best_s = min(candidates)
    return float(best_s), float(best_f)


# -- sampling experiment ----------------------------------------------------------

DISCARD_RULES = (
    "delta * sigma == 0",
    "|delta| >= 2 |sigma| cos(pi / (n + 1))  (definite or singular)",
)
RNG_NAME = "numpy PCG64, stream SeedSequence([seed, n, block])"
NORMAL_TRANSFORM = "ziggurat (numpy.random.Generator.standard_normal)"


@dataclass(frozen=True)
class ExperimentConfig:
    n_min: int = 2
    n_max: int = 50
    samples_per_n: int = 10_000
    seed: int = 20240611
    block_size: int = 10_000
    tie_rtol: float = TIE_RTOL
    workers: int = 1
    discard_rules: tuple[str, ...] = field(default=DISCARD_RULES, init=False)

    def __post_init__(self):
        if self.n_min < 2:
            raise DomainError(f"n_min must be >= 2, got {self.n_min}")
        if self.n_max < self.n_min:
            raise DomainError(f"empty n range [{self.n_min}, {self.n_max}]")
        if self.samples_per_n < 1:
            raise DomainError(f"samples_per_n must be >= 1, got {self.samples_per_n}")
        if self.block_size < 1 or self.workers < 1:
            raise DomainError("block_size and workers must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def n_range(self) -> range:
        return range(self.n_min, self.n_max + 1)


@dataclass(frozen=True)
class NCounts:
    n: int
    draws: int
    tested: int
    discarded: int
    ties_skipped: int
    mismatches: int

    def __add__(self, other: "NCounts") -> "NCounts":
        assert self.n == other.n
        return NCounts(
            self.n,
            self.draws + other.draws,
            self.tested + other.tested,
            self.discarded + other.discarded,
            self.ties_skipped + other.ties_skipped,
            self.mismatches + other.mismatches,
        )


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    per_n: tuple[NCounts, ...]

    @property
    def per_n_counts(self) -> dict[int, int]:
        return {row.n: row.mismatches for row in self.per_n}

    def _total(self, name: str) -> int:
        return sum(getattr(row, name) for row in self.per_n)

    @property
    def draws(self) -> int:
        return self._total("draws")

    @property
    def totals(self) -> dict[str, int]:
        return {k: self._total(k) for k in ("tested", "discarded", "ties_skipped", "mismatches")}

    @property
    def percentage(self) -> float:
        t = self.totals
        return 100.0 * t["mismatches"] / t["tested"] if t["tested"] else 0.0

    def metadata(self) -> dict:
        return {
            "rng": RNG_NAME,
            "normal_transform": NORMAL_TRANSFORM,
            "seed": self.config.seed,
            "n_min": self.config.n_min,
            "n_max": self.config.n_max,
            "samples_per_n": self.config.samples_per_n,
            "block_size": self.config.block_size,
            "tie_rtol": self.config.tie_rtol,
            "discard_rules": list(self.config.discard_rules),
        }


def _two_smallest_tie(values: np.ndarray, rtol: float) -> np.ndarray:
    two = np.partition(values, 1, axis=1)[:, :2]
    return two[:, 1] - two[:, 0] <= rtol * two[:, 0]


def _run_block(args) -> NCounts:
    n, seed, block, size, tie_rtol = args
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, n, block])))
    z = rng.standard_normal((size, 2))
    delta, sigma = z[:, 0], z[:, 1]
    discard = (delta * sigma == 0) | (np.abs(delta) >= 2 * np.abs(sigma) * core.cosines(n, 1))
    delta, sigma = delta[~discard], sigma[~discard]

    c = core.cosines(n)
    mags = np.abs(delta[:, None] + 2.0 * sigma[:, None] * c)
    ratios = mags / structured_condition_number(n)
    tie = _two_smallest_tie(mags, tie_rtol) | _two_smallest_tie(ratios, tie_rtol)
    mismatch = (np.argmin(mags, axis=1) != np.argmin(ratios, axis=1)) & ~tie
    n_discard = int(discard.sum())
    n_tie = int(tie.sum())
    return NCounts(n, size, size - n_discard - n_tie, n_discard, n_tie, int(mismatch.sum()))


def mismatch_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Count indefinite matrices whose magnitude- and ratio-minimizing indices differ.

    Each (n, block) work unit draws from its own stream, so the result does
    not depend on ``cfg.workers``.
    """
    units = []
    for n in cfg.n_range:
        remaining, block = cfg.samples_per_n, 0
        while remaining > 0:
            size = min(cfg.block_size, remaining)
            units.append((n, cfg.seed, block, size, cfg.tie_rtol))
            remaining -= size
            block += 1
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(_run_block, units, chunksize=8))
    else:
        parts = [_run_block(u) for u in units]

    per_n: dict[int, NCounts] = {}
    for part in parts:
        per_n[part.n] = per_n[part.n] + part if part.n in per_n else part
    return ExperimentResult(cfg, tuple(per_n[n] for n in cfg.n_range))
