import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sttnear import core
from sttnear.core import SttMatrix
from sttnear.errors import DomainError, ResourceError


def test_eigenvalue_laplacian_1000():
    assert core.eigenvalue(SttMatrix(1000, 2, -1), 1) == pytest.approx(9.8499e-6, rel=1e-4)


@pytest.mark.parametrize("h", [1, 3, 5])
def test_eigenvalue_zero_offdiagonal(h):
    assert core.eigenvalue(SttMatrix(5, 7, 0), h) == 7


def test_eigenvalue_central_index():
    m = SttMatrix(9, math.cos(math.pi / 20), -math.sqrt(2) / 2)
    assert core.eigenvalue(m, 5) == pytest.approx(9.8769e-1, rel=1e-4)


@pytest.mark.parametrize("h", [0, 4, -1, 2.5])
def test_eigen_index_out_of_range(h):
    m = SttMatrix(3, 1, 1)
    with pytest.raises(DomainError):
        core.eigenvalue(m, h)
    with pytest.raises(DomainError):
        core.eigenvector(m, h)


def test_n_below_two_rejected():
    with pytest.raises(DomainError):
        SttMatrix(1, 1.0, 1.0)
    with pytest.raises(DomainError):
        SttMatrix(3, float("nan"), 1.0)


def test_eigenvector_n3_h2():
    v = core.eigenvector(SttMatrix(3, 0.4, 9.0), 2)
    np.testing.assert_allclose(v, [math.sqrt(2) / 2, 0, -math.sqrt(2) / 2], atol=1e-15)


def test_eigenvector_n2_h1():
    v = core.eigenvector(SttMatrix(2, -1.0, 3.0), 1)
    np.testing.assert_allclose(v, [1 / math.sqrt(2)] * 2, rtol=1e-15)


def test_eigenvector_residual_n12():
    m = SttMatrix(12, 0.3, 1.7)
    v = core.eigenvector(m, 4)
    assert np.linalg.norm(core.dense(m) @ v - core.eigenvalue(m, 4) * v) <= 1e-12


def test_spectrum_n2():
    s = core.spectrum(SttMatrix(2, 0, 1))
    assert s[1].lam == pytest.approx(1.0, abs=1e-15)
    assert s[2].lam == pytest.approx(-1.0, abs=1e-15)
    assert [p.h for p in s.pairs] == [1, 2]


def test_spectrum_example_2_center():
    lam = core.eigenvalues(SttMatrix(1000, 0, 1))
    assert lam[499] == pytest.approx(3.1385e-3, rel=1e-4)
    assert lam[500] == -lam[499]


def test_spectrum_example_4_first_two():
    lam = core.eigenvalues(SttMatrix(10, 1.8, -1))
    assert lam[1] == pytest.approx(1.1749e-1, rel=1e-4)
    assert lam[0] == pytest.approx(-1.1899e-1, rel=1e-4)


def test_magnitude_order_is_a_separate_view():
    s = core.spectrum(SttMatrix(10, 1.8, -1))
    assert s.magnitude_order[:2].tolist() == [2, 1]
    assert s.values[0] < s.values[1]


def test_dense_small():
    np.testing.assert_array_equal(core.dense(SttMatrix(2, 3.5, -2)), [[3.5, -2], [-2, 3.5]])
    np.testing.assert_array_equal(core.dense(SttMatrix(3, 0, 1)), [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    np.testing.assert_array_equal(core.dense(SttMatrix(5, 2, -1)).sum(axis=1), [1, 0, 0, 0, 1])


def test_dense_cap():
    with pytest.raises(ResourceError):
        core.dense(SttMatrix(20, 1, 1), cap=10)


def test_central_eigenvalue_exactly_zero_for_zero_diagonal():
    assert core.eigenvalue(SttMatrix(7, 0.0, 2.3), 4) == 0.0
    assert core.is_singular(SttMatrix(7, 0.0, 2.3))


stt = st.builds(
    SttMatrix,
    st.integers(2, 200),
    st.floats(-1e3, 1e3),
    st.floats(-1e3, 1e3).filter(lambda s: s != 0),
)


@settings(max_examples=100, deadline=None)
@given(stt)
def test_eigenvalue_symmetry(m):
    lam = core.eigenvalues(m)
    np.testing.assert_allclose(lam + lam[::-1], 2 * m.delta, rtol=0, atol=1e-12 * (m.scale + 1))


@settings(max_examples=60, deadline=None)
@given(stt)
def test_residual(m):
    a = core.dense(m)
    x = core.eigenvectors(m.n)
    lam = core.eigenvalues(m)
    res = np.linalg.norm(a @ x - x * lam, axis=0)
    assert res.max() <= 1e-10 * (abs(m.delta) + 2 * abs(m.sigma) + 1)


@pytest.mark.parametrize("n", [2, 3, 17, 100, 257, 500])
def test_orthonormality(n):
    x = core.eigenvectors(n)
    assert np.abs(x.T @ x - np.eye(n)).max() <= 1e-10


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 60), st.data())
def test_eigenvectors_independent_of_entries(n, data):
    h = data.draw(st.integers(1, n))
    a = core.eigenvector(SttMatrix(n, 1.0, 2.0), h)
    b = core.eigenvector(SttMatrix(n, -7.25, 1e-9), h)
    assert a.tobytes() == b.tobytes()
    np.testing.assert_array_equal(core.eigenvectors(n)[:, h - 1], a)
