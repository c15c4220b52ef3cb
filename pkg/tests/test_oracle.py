import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sttnear import core, oracle
from sttnear.core import SttMatrix
from sttnear.distance import nearest_singular_fixed_index
from sttnear.errors import DomainError, ResourceError
from sttnear.oracle import (
    ExperimentConfig,
    NCounts,
    dense_eigenvalues,
    grid_optimal_singular,
    mismatch_experiment,
    project_to_stt,
    sturm_count,
    symmetric_eigenvalues,
    tridiagonal_eigenvalues,
)


def test_sturm_count_simple():
    # (3; 0, 1) has eigenvalues -sqrt(2), 0, sqrt(2)
    counts = sturm_count([0, 0, 0], [1, 1], [-2, -1, 0.5, 2])
    assert counts.tolist() == [0, 1, 2, 3]


def test_bisection_n3():
    np.testing.assert_allclose(tridiagonal_eigenvalues([0, 0, 0], [1, 1]), [-math.sqrt(2), 0, math.sqrt(2)], atol=1e-15)


def test_bisection_n40_vs_closed_form():
    m = SttMatrix(40, 0.3, -1.7)
    ref = np.sort(core.eigenvalues(m))
    assert np.abs(dense_eigenvalues(m) - ref).max() <= 1e-10 * m.scale


def test_bisection_non_toeplitz_vs_numpy():
    rng = np.random.default_rng(3)
    d, e = rng.normal(size=25), rng.normal(size=24)
    a = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    np.testing.assert_allclose(tridiagonal_eigenvalues(d, e), np.linalg.eigvalsh(a), atol=1e-12)


def test_householder_dense_vs_numpy():
    rng = np.random.default_rng(11)
    b = rng.normal(size=(15, 15))
    a = b + b.T
    np.testing.assert_allclose(symmetric_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-11)


def test_symmetric_eigenvalues_rejects_bad_input():
    with pytest.raises(DomainError):
        symmetric_eigenvalues(np.ones((2, 3)))
    with pytest.raises(DomainError):
        symmetric_eigenvalues([[1.0, 2.0], [0.0, 1.0]])


def test_dense_eigenvalues_cap():
    with pytest.raises(ResourceError):
        dense_eigenvalues(SttMatrix(30, 1, 1), cap=10)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 40), st.floats(-10, 10), st.floats(-10, 10).filter(lambda s: abs(s) > 1e-6), st.data())
def test_candidate_certified_singular(n, delta, sigma, data):
    m = SttMatrix(n, delta, sigma)
    h = data.draw(st.integers(1, n))
    c = nearest_singular_fixed_index(m, h)
    lam = dense_eigenvalues(c.matrix)
    assert np.abs(lam).min() <= 1e-10 * max(c.matrix.scale, 1.0)


def test_projection_2x2():
    p = project_to_stt([[1, 2], [3, 4]])
    assert (p.d, p.s) == (2.5, 2.5)


def test_projection_idempotent_on_stt():
    m = SttMatrix(7, 1.25, -0.5)
    p = project_to_stt(core.dense(m))
    assert (p.d, p.s) == (1.25, -0.5)


def test_projection_rejects_non_square():
    with pytest.raises(DomainError):
        project_to_stt(np.zeros((2, 3)))
    with pytest.raises(DomainError):
        project_to_stt(np.zeros((1, 1)))


def test_projection_is_nearest():
    rng = np.random.default_rng(5)
    a = rng.normal(size=(9, 9))
    p = project_to_stt(a)
    best = np.linalg.norm(a - p.dense())
    for _ in range(200):
        q = SttMatrix(9, p.d + rng.normal(scale=0.3), p.s + rng.normal(scale=0.3))
        assert np.linalg.norm(a - core.dense(q)) >= best
    # residual is orthogonal to the Toeplitz basis
    r = a - p.dense()
    assert abs(np.trace(r)) <= 1e-12
    assert abs(np.diagonal(r, 1).sum() + np.diagonal(r, -1).sum()) <= 1e-12


def test_grid_recovers_case_3_sigma():
    m = SttMatrix(9, math.cos(math.pi / 20), -math.sqrt(2) / 2)
    s_opt, dist = grid_optimal_singular(m, 2)
    cand = nearest_singular_fixed_index(m, 2)
    assert s_opt == pytest.approx(cand.sigma_star, abs=1e-6)
    assert dist == pytest.approx(cand.distance_f, abs=1e-8)
    assert dist == pytest.approx(2.9845e-1, rel=1e-4)


def test_grid_already_singular():
    m = SttMatrix(5, 0.0, 1.0)
    s_opt, dist = grid_optimal_singular(m, 3)
    assert dist <= 1e-12 and s_opt == pytest.approx(1.0, abs=1e-6)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.floats(-10, 10), st.floats(-10, 10).filter(lambda s: abs(s) > 1e-6), st.data())
def test_grid_matches_closed_form(n, delta, sigma, data):
    m = SttMatrix(n, delta, sigma)
    h = data.draw(st.integers(1, n))
    s_opt, dist = grid_optimal_singular(m, h)
    cand = nearest_singular_fixed_index(m, h)
    assert s_opt == pytest.approx(cand.sigma_star, abs=1e-6 * max(m.scale, 1.0))
    assert dist == pytest.approx(cand.distance_f, abs=1e-8 * max(m.scale, 1.0))


def test_experiment_config_validation():
    with pytest.raises(DomainError):
        ExperimentConfig(n_min=1)
    with pytest.raises(DomainError):
        ExperimentConfig(n_min=5, n_max=4)
    with pytest.raises(DomainError):
        ExperimentConfig(samples_per_n=0)
    with pytest.raises(DomainError):
        ExperimentConfig(seed=-1)


def test_experiment_bookkeeping_and_determinism():
    cfg = ExperimentConfig(n_min=2, n_max=12, samples_per_n=3000, block_size=700, seed=1)
    a = mismatch_experiment(cfg)
    b = mismatch_experiment(cfg)
    assert a == b
    for row in a.per_n:
        assert row.tested + row.discarded + row.ties_skipped == row.draws == 3000
        assert 0 <= row.mismatches <= row.tested
    assert a.draws == 11 * 3000
    assert a.per_n_counts[2] == 0
    assert 0 <= a.percentage <= 100


def test_experiment_independent_of_workers():
    cfg = ExperimentConfig(n_min=3, n_max=8, samples_per_n=2000, block_size=500, seed=9)
    serial = mismatch_experiment(cfg)
    parallel = mismatch_experiment(ExperimentConfig(**{**cfg.__dict__, "workers": 2}))
    assert serial.per_n == parallel.per_n


def test_experiment_seed_changes_counts():
    a = mismatch_experiment(ExperimentConfig(n_min=10, n_max=10, samples_per_n=5000, seed=1))
    b = mismatch_experiment(ExperimentConfig(n_min=10, n_max=10, samples_per_n=5000, seed=2))
    assert a.per_n != b.per_n


def test_mismatch_count_matches_per_draw_recount():
    # recount one block draw by draw with the closed-form spectrum
    n, seed = 7, 4
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, n, 0])))
    z = rng.standard_normal((400, 2))
    tested = mismatches = 0
    for delta, sigma in z:
        if delta * sigma == 0 or abs(delta) >= 2 * abs(sigma) * math.cos(math.pi / (n + 1)):
            continue
        m = SttMatrix(n, float(delta), float(sigma))
        lam = np.abs(dense_eigenvalues(m))
        # the oracle returns ascending order; map back to index h through the closed form
        order = np.argsort(core.eigenvalues(m))
        mags = np.empty(n)
        mags[order] = lam
        kappa = np.array([math.sqrt(1 / n + 2 / (n - 1) * math.cos(h * math.pi / (n + 1)) ** 2) for h in range(1, n + 1)])
        tested += 1
        mismatches += int(np.argmin(mags) != np.argmin(mags / kappa))
    res = mismatch_experiment(ExperimentConfig(n_min=n, n_max=n, samples_per_n=400, seed=seed))
    row = res.per_n[0]
    assert row.ties_skipped == 0
    assert (row.tested, row.mismatches) == (tested, mismatches)


def test_ncounts_add():
    a = NCounts(4, 10, 6, 3, 1, 2)
    assert a + a == NCounts(4, 20, 12, 6, 2, 4)


def test_metadata_fields():
    res = mismatch_experiment(ExperimentConfig(n_min=2, n_max=3, samples_per_n=10))
    meta = res.metadata()
    assert {"rng", "seed", "samples_per_n", "discard_rules", "normal_transform"} <= set(meta)
    assert meta["discard_rules"] == list(oracle.DISCARD_RULES)
