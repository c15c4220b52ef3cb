"""CSV / JSON / plain-text rendering of tables and reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, is_dataclass
from typing import Iterable, Sequence

import numpy as np

from . import core
from .cholesky import CholeskyFactor
from .core import SttMatrix
from .distance import NearestSingularReport, nearest_singular_fixed_index, ratios
from .oracle import ExperimentResult
from .sensitivity import structured_condition_number


def fmt_machine(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def fmt_plain(x) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return f"{float(x):.4e}"


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt_machine(v) for v in row])
    return buf.getvalue()


def plain_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    cells = [list(header)] + [[v if isinstance(v, str) else fmt_plain(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    if is_dataclass(obj):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def json_text(obj) -> str:
    # json writes floats with repr(), which round-trips exactly
    return json.dumps(_jsonable(obj), indent=2, sort_keys=False) + "\n"


# -- tables -----------------------------------------------------------------------

DISTANCE_HEADER = ("h", "lambda", "kappa", "ratio")


def distance_rows(m: SttMatrix) -> list[tuple]:
    """``(h, lambda_h, kappa_h, |lambda_h|/kappa_h)`` for every index."""
    lam = core.eigenvalues(m)
    kap = structured_condition_number(m.n)
    rat = ratios(m)
    return [(h, lam[h - 1], kap[h - 1], rat[h - 1]) for h in range(1, m.n + 1)]


def nearest_spectrum_rows(m: SttMatrix, h_star: int) -> list[tuple]:
    """``(h, lambda_h, kappa_h, lambda_h(S_*^T))`` where S_*^T zeroes index ``h_star``."""
    cand = nearest_singular_fixed_index(m, h_star)
    lam_star = core.eigenvalues(cand.matrix)
    return [row[:3] + (lam_star[row[0] - 1],) for row in distance_rows(m)]


def report_dict(report: NearestSingularReport) -> dict:
    d = report.to_dict()
    return {
        "n": d["n"],
        "delta": d["delta"],
        "sigma": d["sigma"],
        "minimizers": d["minimizers"],
        "structured_distance_f": d["structured_distance_f"],
        "unstructured_distance": d["unstructured_distance"],
        "unstructured_minimizer_indices": d["unstructured_minimizer_indices"],
        "unique": d["unique"],
        "definite": d["definite"],
        "spectral_lower": d["spectral_lower"],
        "spectral_upper": d["spectral_upper"],
    }


def factor_rows(f: CholeskyFactor) -> list[tuple]:
    """``(i, r_ii, r_{i,i+1})``; the last row has an empty superdiagonal cell."""
    rows = [(i + 1, f.diag[i], f.super[i]) for i in range(f.n - 1)]
    rows.append((f.n, f.diag[-1], ""))
    return rows


def grid_rows(a: np.ndarray, upper_only: bool = False) -> Iterable[tuple]:
    """``(row, col, value)`` triples, 1-based; optionally only the upper triangle."""
    n = a.shape[0]
    if upper_only:
        i, j = np.triu_indices(n)
    else:
        i, j = np.indices(a.shape).reshape(2, -1)
    return ((int(r) + 1, int(c) + 1, a[r, c]) for r, c in zip(i, j))


EXPERIMENT_HEADER = ("n", "tested", "discarded", "ties_skipped", "mismatches")


def experiment_rows(result: ExperimentResult) -> list[tuple]:
    return [(r.n, r.tested, r.discarded, r.ties_skipped, r.mismatches) for r in result.per_n]


def experiment_summary(result: ExperimentResult) -> dict:
    return {
        "percentage": result.percentage,
        "draws": result.draws,
        **result.totals,
        "per_n_mismatches": {str(k): v for k, v in result.per_n_counts.items()},
        "metadata": result.metadata(),
    }
