import math

import numpy as np
import pytest

from sttnear import core
from sttnear.core import SttMatrix
from sttnear.errors import DomainError
from sttnear.sensitivity import (
    condition_extremes,
    condition_report,
    extremes_ratio,
    extremes_ratio_table,
    project_rank_one,
    structured_condition_number,
    worst_case_perturbation,
)


def summed_projection(n, h):
    """Projection of x_h x_h^T by explicit diagonal sums (independent of the closed form)."""
    x = core.eigenvector(SttMatrix(n, 0.0, 1.0), h)
    d = float(np.sum(x * x)) / n
    s = float(np.sum(x[:-1] * x[1:])) / (n - 1)
    return d, s


def test_projection_central_odd():
    p = project_rank_one(SttMatrix(3, 1, 1), 2)
    assert p.d == pytest.approx(1 / 3)
    assert p.s == 0.0


def test_projection_n100_h1_matches_summation():
    d, s = summed_projection(100, 1)
    p = project_rank_one(SttMatrix(100, 0, 1), 1)
    assert p.d == pytest.approx(d, rel=1e-12)
    assert p.s == pytest.approx(s, rel=1e-12)
    assert p.fro_norm == pytest.approx(math.sqrt(1 / 100 + 2 / 99 * math.cos(math.pi / 101) ** 2), rel=1e-12)


def test_projection_n9_h1_table_value():
    assert project_rank_one(SttMatrix(9, 0, 1), 1).fro_norm == pytest.approx(5.8072e-1, rel=1e-4)


def test_condition_number_reference_values():
    assert structured_condition_number(1000, 1) == pytest.approx(5.4790e-2, rel=1e-4)
    assert structured_condition_number(1000, 500) == pytest.approx(3.16229e-2, rel=1e-5)


@pytest.mark.parametrize("n", [3, 9, 101, 999])
def test_condition_number_central_odd(n):
    assert structured_condition_number(n, (n + 1) // 2) == math.sqrt(1 / n)


def test_condition_number_rejects_small_n():
    with pytest.raises(DomainError):
        structured_condition_number(1, 1)


def test_condition_report_fields():
    r = condition_report(10, 3)
    assert r.kappa_unstructured == 1.0
    assert 0 < r.kappa_structured <= 1
    assert r.ratio == r.kappa_structured


@pytest.mark.parametrize("n,h", [(2, 1), (10, 3), (57, 20), (300, 300)])
def test_worst_case_unit_norm(n, h):
    assert worst_case_perturbation(SttMatrix(n, 0, 1), h).fro_norm == pytest.approx(1.0, abs=1e-12)


def test_band_weight_extremal_larger_than_central():
    m = SttMatrix(100, 0, 1)
    assert project_rank_one(m, 1).fro_norm > project_rank_one(m, 50).fro_norm


def test_quadratic_form_equals_projection_norm_n10_h3():
    m = SttMatrix(10, 0.5, 2.0)
    x = core.eigenvector(m, 3)
    e = worst_case_perturbation(m, 3)
    assert x @ e.dense() @ x == pytest.approx(project_rank_one(m, 3).fro_norm, rel=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 7, 30, 151, 300])
def test_closed_form_vs_summation_all_h(n):
    kappa = structured_condition_number(n)
    for h in range(1, n + 1):
        d, s = summed_projection(n, h)
        assert kappa[h - 1] == pytest.approx(math.sqrt(n * d * d + 2 * (n - 1) * s * s), rel=1e-12)


def test_extremes_n3():
    lo, hi = condition_extremes(3)
    assert lo.indices == (2,)
    assert lo.kappa == pytest.approx(math.sqrt(1 / 3))
    assert hi.indices == (1, 3)
    assert hi.kappa == pytest.approx(math.sqrt(1 / 3 + 1 / 2))


def test_extremes_even_pair():
    lo, hi = condition_extremes(100)
    assert lo.indices == (50, 51)
    k = structured_condition_number(100)
    assert lo.kappa == pytest.approx(k.min())
    assert hi.kappa == pytest.approx(k.max())
    assert lo.estimate == pytest.approx(0.1) and hi.estimate == pytest.approx(math.sqrt(0.03))


def test_seventy_percent_claim():
    assert all(extremes_ratio(n) >= 1.7 for n in range(10, 1001))


def test_ratio_table_n2_is_one():
    rows = extremes_ratio_table(100)
    assert rows[0] == (2, pytest.approx(1.0), "even")
    assert len(rows) == 99


@pytest.mark.parametrize("n", [2, 3, 8, 9, 64, 65, 300])
def test_monotonicity_and_bounds(n):
    k = structured_condition_number(n)
    first = k[: math.ceil(n / 2)]
    second = k[n // 2 :]
    assert np.all(np.diff(first) < 0)
    assert np.all(np.diff(second) > 0)
    assert np.all(k >= math.sqrt(1 / n) * (1 - 1e-15))
    assert np.all(k <= math.sqrt(1 / n + 2 / (n - 1)))


def test_asymptotic_extremal_estimate():
    n = 10_000
    assert 0.99 <= structured_condition_number(n, 1) / math.sqrt(3 / n) <= 1.01
