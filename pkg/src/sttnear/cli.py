"""Command-line front end: ``sttnear <command> [options]``.

Exit codes: 0 success, 1 usage or parse error, 2 domain error
(sigma = 0, non-definite matrix where one is required, ...).
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from pathlib import Path

from . import __version__, core
from .cases import CASES, run_case
from .cholesky import (
    cholesky_factor,
    inverse_factor,
    laplacian_inverse,
    monotonicity_report,
)
from .config import load_settings
from .core import SttMatrix
from .distance import structured_distance, tie_analysis
from .errors import DomainError, SttError
from .expr import parse_number
from .oracle import ExperimentConfig, mismatch_experiment
from .sensitivity import extremes_ratio_table, kappa_table, structured_condition_number
from . import export


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _number(text: str) -> float:
    try:
        return parse_number(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Global flags; accepted both before and after the subcommand."""
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("plain", "csv", "json"), default=argparse.SUPPRESS if suppress else "plain")
    p.add_argument("--out", type=Path, default=default, help="write output here instead of stdout")
    p.add_argument("--seed", type=int, default=default)
    p.add_argument("--tie-rtol", type=float, default=default)
    p.add_argument("--config", type=Path, default=default, help="key=value settings file")
    return p


def _matrix_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="dimension (>= 2)")
    p.add_argument("-d", "--delta", type=_number, help="diagonal entry, number or expression")
    p.add_argument("-s", "--sigma", type=_number, help="off-diagonal entry, number or expression")
    p.add_argument("--delta-expr", type=_number, help='e.g. "cos(pi/20)"')
    p.add_argument("--sigma-expr", type=_number, help='e.g. "-sqrt(2)/2" (write --sigma-expr=-sqrt(2)/2)')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sttnear", description=__doc__.splitlines()[0], parents=[_common(False)])
    parser.add_argument("--version", action="version", version=f"sttnear {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_common(True)]

    p = sub.add_parser("analyze", parents=common, help="distances to singularity and closest singular matrices")
    _matrix_args(p)
    p.add_argument("--table", action=argparse.BooleanOptionalAction, default=None, help="print the per-index table (default: n <= 50)")

    p = sub.add_parser("spectrum", parents=common, help="closed-form eigenvalues and structured condition numbers")
    _matrix_args(p)

    p = sub.add_parser("cholesky", parents=common, help="Cholesky factor of a definite matrix")
    _matrix_args(p)
    p.add_argument("--grid", type=Path, help="also write R^-1 as (row, col, value) CSV")

    p = sub.add_parser("examples", parents=common, help="run a reference case and compare with reference values")
    p.add_argument("id", type=int)
    p.add_argument("--grid", type=Path, help="case 1: write R^-1 as (row, col, value) CSV")

    p = sub.add_parser("figures", parents=common, help="CSV data behind the reference figures")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("-n", type=int, help="dimension (figures 1, 2, 4) or n_max (figure 3)")
    p.add_argument("--h", type=int, default=1, help="figure 2: eigen-index of x_h x_h^T")
    p.add_argument("--grid", choices=("rinv", "tinv"), default="rinv", help="figure 4: matrix to export")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--workers", type=int)

    p = sub.add_parser("experiment", parents=common, help="random-sampling mismatch experiment")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int, help="draws per n")
    p.add_argument("--workers", type=int)
    return parser


@contextmanager
def _output(path: Path | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _matrix(args) -> SttMatrix:
    delta = args.delta_expr if args.delta_expr is not None else args.delta
    sigma = args.sigma_expr if args.sigma_expr is not None else args.sigma
    if delta is None or sigma is None:
        raise UsageError("both --delta and --sigma are required")
    return SttMatrix(args.n, delta, sigma)


def _envelope(settings, command: str) -> dict:
    return {"tool": "sttnear", "version": __version__, "command": command, "config": settings.as_dict()}


# -- commands -----------------------------------------------------------------------


def cmd_analyze(args, settings, out) -> None:
    m = _matrix(args)
    report = structured_distance(m, settings.tie_rtol)
    ties = tie_analysis(m, settings.tie_rtol)
    rows = export.distance_rows(m)
    if args.format == "json":
        payload = {**export.report_dict(report), "ties": ties, "table": [dict(zip(export.DISTANCE_HEADER, r)) for r in rows]}
        payload["metadata"] = _envelope(settings, "analyze")
        out.write(export.json_text(payload))
        return
    if args.format == "csv":
        out.write(export.csv_text(export.DISTANCE_HEADER, rows))
        return
    show = args.table if args.table is not None else m.n <= 50
    out.write(f"T = ({m.n}; {export.fmt_plain(m.delta)}, {export.fmt_plain(m.sigma)})\n")
    if show:
        out.write(export.plain_table(("h", "lambda_h", "kappa_h", "|lambda_h|/kappa_h"), rows))
    f = export.fmt_plain
    out.write(f"d_F = {f(report.unstructured_distance)}  at h = {report.unstructured_minimizer_indices}\n")
    out.write(f"d_F^T = {f(report.structured_distance_f)}  at h = {report.minimizer_indices}")
    out.write("  (unique)\n" if report.unique else "  (not unique)\n")
    for c in report.minimizers:
        out.write(f"  S_*^T(h={c.h}) = ({m.n}; {f(c.delta_star)}, {f(c.sigma_star)})\n")
    out.write(f"d_2 = {f(report.spectral_lower)} <= d_2^T <= {f(report.spectral_upper)}\n")
    out.write(f"definite: {'yes' if report.definite else 'no'}\n")
    out.write(f"tie case: {ties.case}; structure consistent: {ties.tie_structure_ok}\n")
    for note in ties.notes:
        out.write(f"  {note}\n")


def cmd_spectrum(args, settings, out) -> None:
    m = _matrix(args)
    spec = core.spectrum(m)
    kappa = structured_condition_number(m.n)
    rank = {int(h): i + 1 for i, h in enumerate(spec.magnitude_order)}
    rows = [(h, spec.values[h - 1], kappa[h - 1], rank[h]) for h in range(1, m.n + 1)]
    header = ("h", "lambda", "kappa", "magnitude_rank")
    if args.format == "json":
        out.write(export.json_text({"n": m.n, "delta": m.delta, "sigma": m.sigma, "rows": [dict(zip(header, r)) for r in rows]}))
    elif args.format == "csv":
        out.write(export.csv_text(header, rows))
    else:
        out.write(export.plain_table(header, rows))


def cmd_cholesky(args, settings, out) -> None:
    m = _matrix(args)
    f = cholesky_factor(m)
    mono = monotonicity_report(f, m)
    if args.grid is not None:
        rinv = inverse_factor(f, settings.dense_cap)
        args.grid.write_text(export.csv_text(("row", "col", "value"), export.grid_rows(rinv, upper_only=True)))
    rows = export.factor_rows(f)
    header = ("i", "r_ii", "r_i_i+1")
    if args.format == "json":
        out.write(export.json_text({"sign": f.sign, "diag": f.diag, "super": f.super, "monotonicity": mono}))
    elif args.format == "csv":
        out.write(export.csv_text(header, rows))
    else:
        if f.sign < 0:
            out.write("negative definite: factored -T = R^T R\n")
        out.write(export.plain_table(header, rows if m.n <= 50 else rows[:10]))
        for name, value in vars(mono).items():
            out.write(f"{name}: {value}\n")


def cmd_examples(args, settings, out) -> None:
    if args.id not in CASES:
        raise UsageError(f"unknown example id {args.id}; choose from {sorted(CASES)}")
    res = run_case(args.id, settings.tie_rtol)
    if args.id == 1 and args.grid is not None:
        rinv = inverse_factor(cholesky_factor(res.matrix), settings.dense_cap)
        args.grid.write_text(export.csv_text(("row", "col", "value"), export.grid_rows(rinv, upper_only=True)))
    if args.format == "json":
        out.write(export.json_text({
            "id": res.case_id,
            "title": res.title,
            "matrix": res.matrix,
            "passed": res.passed,
            "checks": [{"label": c.label, "computed": c.computed, "expected": c.expected, "pass": c.passed} for c in res.checks],
        }))
    elif args.format == "csv":
        out.write(export.csv_text(("label", "computed", "expected", "pass"), [
            (c.label, c.computed, c.expected, "PASS" if c.passed else "FAIL") for c in res.checks
        ]))
    else:
        out.write(f"Example {res.case_id}: {res.title}\nT = {res.matrix}\n")
        for header, rows in res.tables.values():
            out.write(export.plain_table(header, rows))
        for c in res.checks:
            comp = c.computed if isinstance(c.computed, str) else export.fmt_plain(c.computed)
            exp = c.expected if isinstance(c.expected, str) else export.fmt_plain(c.expected)
            out.write(f"[{'PASS' if c.passed else 'FAIL'}] {c.label}: computed {comp}, expected {exp}\n")
        for note in res.notes:
            out.write(f"  {note}\n")
        out.write(f"overall: {'PASS' if res.passed else 'FAIL'}\n")


def _experiment_config(args, settings) -> ExperimentConfig:
    # a bad range or count is a usage error (exit 1), not a domain error
    try:
        return ExperimentConfig(
            n_min=args.n_min if args.n_min is not None else settings.n_min,
            n_max=args.n_max if args.n_max is not None else settings.n_max,
            samples_per_n=args.samples if args.samples is not None else settings.samples,
            seed=settings.seed,
            tie_rtol=settings.tie_rtol,
            workers=args.workers if args.workers is not None else settings.workers,
        )
    except DomainError as exc:
        raise UsageError(f"sttnear: {exc}") from exc


def cmd_figures(args, settings, out) -> None:
    if args.which == 1:
        n = args.n or 100
        out.write(export.csv_text(("h", "kappa"), kappa_table(n)))
    elif args.which == 2:
        n = args.n or 100
        x = core.eigenvector(SttMatrix(n, 0.0, 1.0), args.h)
        grid = x[:, None] * x[None, :]
        out.write(export.csv_text(("row", "col", "value"), export.grid_rows(grid)))
    elif args.which == 3:
        out.write(export.csv_text(("n", "ratio", "parity"), extremes_ratio_table(args.n or 100)))
    elif args.which == 4:
        n = args.n or 1000
        if args.grid == "rinv":
            grid = inverse_factor(cholesky_factor(SttMatrix(n, 2.0, -1.0)), settings.dense_cap)
            rows = export.grid_rows(grid, upper_only=True)
        else:
            rows = export.grid_rows(laplacian_inverse(n))
        out.write(export.csv_text(("row", "col", "value"), rows))
    else:
        result = mismatch_experiment(_experiment_config(args, settings))
        out.write(export.csv_text(export.EXPERIMENT_HEADER, export.experiment_rows(result)))


def cmd_experiment(args, settings, out) -> None:
    result = mismatch_experiment(_experiment_config(args, settings))
    if args.format == "json":
        out.write(export.json_text({**export.experiment_summary(result), "envelope": _envelope(settings, "experiment")}))
    elif args.format == "csv":
        out.write(export.csv_text(export.EXPERIMENT_HEADER, export.experiment_rows(result)))
    else:
        t = result.totals
        out.write(f"n in [{result.config.n_min}, {result.config.n_max}], {result.config.samples_per_n} draws per n, seed {result.config.seed}\n")
        out.write(f"draws {result.draws}: tested {t['tested']}, discarded {t['discarded']}, ties skipped {t['ties_skipped']}\n")
        out.write(f"mismatches {t['mismatches']} = {result.percentage:.4f}% of tested\n")
        out.write(export.plain_table(export.EXPERIMENT_HEADER, export.experiment_rows(result)))


COMMANDS = {
    "analyze": cmd_analyze,
    "spectrum": cmd_spectrum,
    "cholesky": cmd_cholesky,
    "examples": cmd_examples,
    "figures": cmd_figures,
    "experiment": cmd_experiment,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        settings = load_settings(args.config, seed=args.seed, tie_rtol=args.tie_rtol)
        with _output(args.out) as out:
            COMMANDS[args.command](args, settings, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SttError as exc:
        print(f"sttnear: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"sttnear: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
