import json
import math

import numpy as np
import pytest

from sttnear import export
from sttnear.cases import Check, CASE_3_ROWS, run_case
from sttnear.config import DEFAULTS, env_overrides, load_settings, parse_config_text
from sttnear.core import SttMatrix
from sttnear.distance import structured_distance
from sttnear.expr import evaluate, parse_number


@pytest.mark.parametrize(
    "text,value",
    [
        ("cos(pi/20)", math.cos(math.pi / 20)),
        ("-sqrt(2)/2", -math.sqrt(2) / 2),
        ("2*sin(pi/6) + 1", 2.0),
        ("+3 - -1", 4.0),
    ],
)
def test_evaluate(text, value):
    assert evaluate(text) == value


@pytest.mark.parametrize("text", ["__import__('os')", "cos(1, 2)", "e", "2**3", "cos(", "x"])
def test_evaluate_rejects(text):
    with pytest.raises(ValueError):
        evaluate(text)


def test_parse_number_prefers_literal():
    assert parse_number("1e-3") == 1e-3
    assert parse_number("pi") == math.pi


def test_parse_config_text():
    text = "# tolerances\ntie_rtol = 1e-10\nseed=3  # inline\n\ndense-cap = 100\n"
    assert parse_config_text(text) == {"tie_rtol": 1e-10, "seed": 3, "dense_cap": 100}
    with pytest.raises(ValueError):
        parse_config_text("no equals sign")
    with pytest.raises(ValueError):
        parse_config_text("unknown = 1")


def test_precedence(tmp_path):
    path = tmp_path / "cfg"
    path.write_text("seed = 1\nsamples = 50\n")
    env = {"TSL_SEED": "2", "TSL_WORKERS": "3"}
    s = load_settings(path, env, seed=None)
    assert (s.seed, s.samples, s.workers) == (2, 50, 3)
    assert load_settings(path, env, seed=9).seed == 9
    assert load_settings(None, {}) == DEFAULTS
    assert env_overrides({"TSL_TIE_RTOL": " "}) == {}


def test_fmt():
    assert export.fmt_plain(9.849886e-6) == "9.8499e-06"
    assert export.fmt_machine(0.1) == "0.10000000000000001"
    assert float(export.fmt_machine(math.pi)) == math.pi
    assert export.fmt_machine(np.int64(4)) == "4"
    assert export.fmt_machine(True) == "true"


def test_csv_text_header_and_lf():
    text = export.csv_text(("a", "b"), [(1, 0.5), (2, "x")])
    assert text == "a,b\n1,0.5\n2,x\n"


def test_json_text_handles_dataclasses_and_numpy():
    r = structured_distance(SttMatrix(6, 0.2, 1.0))
    data = json.loads(export.json_text({"r": r, "arr": np.arange(3), "x": np.float64(0.1)}))
    assert data["arr"] == [0, 1, 2] and data["x"] == 0.1
    assert data["r"]["structured_distance_f"] == r.structured_distance_f


def test_plain_table_alignment():
    lines = export.plain_table(("h", "v"), [(1, 1.0), (10, -2.5)]).splitlines()
    assert len({len(line) for line in lines}) == 1


def test_grid_rows_upper():
    rows = list(export.grid_rows(np.arange(9.0).reshape(3, 3), upper_only=True))
    assert rows[0] == (1, 1, 0.0) and len(rows) == 6


def test_check_five_digit_match():
    assert Check("x", 9.84988e-6, 9.8499e-6).passed
    assert not Check("x", 9.8510e-6, 9.8499e-6).passed
    assert Check("z", 3e-12, 0.0, abs_tol=1e-10).passed
    assert Check("s", "{1}", "{1}").passed


def test_case_3_h5_entry_equals_delta_star():
    # the h=5 cosine is zero, so lambda_5(S_*^T) is delta_*
    row = dict((r[0], r) for r in CASE_3_ROWS)[5]
    res = run_case(3)
    check = next(c for c in res.checks if c.label == "lambda_5(S_*^T)")
    assert check.passed and row[3] == 1.0510


@pytest.mark.parametrize("case", [1, 2, 3, 4])
def test_cases_pass(case):
    res = run_case(case)
    failed = [c for c in res.checks if not c.passed]
    assert not failed, failed
