"""Configuration-driven experiment runner.

Subcommands
-----------
verify-family
    Regularity certificates over an alpha sweep; writes ``regularity.csv``.
sweep
    Reconstruction error sweep; writes ``convergence.csv``.
reconstruct
    Pointwise values of the approximant at chosen points; writes
    ``reconstruction.json`` (a JSON array ordered by x).
list-signals
    Print the builtin signal catalog.

Exit codes: 0 on success (rows flagged precision-limited still count as
success), 1 on numeric failure (a solve broke down or a sweep row failed),
2 on configuration or contract errors.

Output conventions: CSV files carry a mandatory header row, UTF-8 bytes, LF
line endings, and shortest round-trip float formatting (``repr``), so two
runs with the same config produce byte-identical tables. ``manifest.json``
records the normalized config echo, library version, timestamp, file listing,
and run-level checks; it is written exactly when the run completes, whether
clean or with flagged rows. The ``output.formats`` list gates the data
tables: ``"csv"`` enables the CSV files, ``"json"`` enables JSON mirrors of
the same rows; the manifest and ``reconstruction.json`` are always written
when their run completes.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .config import ExperimentConfig, load_config
from .engine import evaluate_J, reconstruct
from .errors import (
    AccuracyError,
    ConditioningError,
    ConfigError,
    ContractError,
    DomainError,
)
from .kernels import RegularityTolerances, regularity_verdict, verify_regularity
from .metrics import sweep as run_sweep
from .metrics import truncated_signal_values
from .signals import builtin_signals, signal_spectrum
from .spectral import amalgam_norm, frequency_grid


def _cell(value: object) -> str:
    # bool first: bool is an int subclass and must print True/False.
    if isinstance(value, bool):
        return repr(value)
    if isinstance(value, float):
        return repr(value)
    raise ContractError(f"unsupported CSV cell type {type(value).__name__}")


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _write_csv(path: Path, header: list[str], rows: list[list[object]]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    _write_text(path, "\n".join(lines) + "\n")


def _jsonable(value: object) -> object:
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def _write_json(path: Path, payload: object) -> None:
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_manifest(
    outdir: Path, command: str, config: ExperimentConfig, files: list[str], checks: dict
) -> None:
    manifest = {
        "command": command,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config": config.echo(),
        "files": files,
        "checks": checks,
    }
    _write_json(outdir / "manifest.json", manifest)


def _quadrature_drift(config: ExperimentConfig) -> float:
    """One-shot self-check: amalgam norm drift under grid refinement."""
    signal = config.make_signal()
    coarse = frequency_grid(config.points_per_band)
    fine = frequency_grid(config.points_per_band * config.quadrature_refinement)
    a = amalgam_norm(signal_spectrum(signal, coarse, config.m_max), coarse)
    b = amalgam_norm(signal_spectrum(signal, fine, config.m_max), fine)
    return abs(a - b) / (abs(b) or 1.0)


def _outdir(args: argparse.Namespace, config: ExperimentConfig) -> Path:
    outdir = Path(args.out) if args.out else Path(config.out_directory)
    outdir.mkdir(parents=True, exist_ok=True)
    return outdir


def cmd_verify_family(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    outdir = _outdir(args, config)
    family = config.make_family()
    tolerances = RegularityTolerances()
    reports = verify_regularity(family, config.alpha_values(), tolerances=tolerances)
    verdict = regularity_verdict(reports, tolerances)

    xi_grid = list(reports[0].h3_profile)
    header = (
        ["alpha", "delta_estimate", "m_alpha", "h2_ratio"]
        + [f"h3_ratio_at_{xi!r}" for xi in xi_grid]
        + ["pass_A2", "pass_A3", "pass_H2", "pass_H3"]
    )
    rows: list[list[object]] = [
        [
            report.alpha,
            report.delta_estimate,
            report.m_alpha,
            report.h2_ratio,
            *[report.h3_profile[xi] for xi in xi_grid],
            report.pass_a2,
            report.pass_a3,
            report.pass_h2,
            report.pass_h3,
        ]
        for report in reports
    ]
    files = []
    if "csv" in config.out_formats:
        _write_csv(outdir / "regularity.csv", header, rows)
        files.append("regularity.csv")
    if "json" in config.out_formats:
        payload = [dict(zip(header, map(_jsonable, row))) for row in rows]
        _write_json(outdir / "regularity.json", payload)
        files.append("regularity.json")
    files.append("manifest.json")
    checks = {**verdict, "all_pass": all(verdict.values())}
    _write_manifest(outdir, "verify-family", config, files, checks)
    return 0 if checks["all_pass"] else 1


_SWEEP_HEADER = [
    "alpha",
    "l2_error",
    "amalgam_error",
    "sup_error",
    "rhs_bound",
    "bound_ratio",
    "condition_estimate",
    "tail_slack_f",
    "tail_slack_J",
    "precision_limited",
]


def cmd_sweep(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    outdir = _outdir(args, config)
    reports = run_sweep(
        config.make_signal(),
        config.make_family(),
        config.alpha_values(),
        config.make_nodes(),
        config.make_grid(),
        config.make_spatial_grid(),
        config.m_max,
        config.j_cap,
        tol=config.solver_tol,
        workers=config.workers,
    )
    rows: list[list[object]] = [
        [
            r.alpha,
            r.l2_error,
            r.amalgam_error,
            r.sup_error,
            r.rhs_bound,
            r.bound_ratio,
            r.condition_estimate,
            r.tail_slack_f,
            r.tail_slack_J,
            r.precision_limited,
        ]
        for r in reports
    ]
    files = []
    if "csv" in config.out_formats:
        _write_csv(outdir / "convergence.csv", _SWEEP_HEADER, rows)
        files.append("convergence.csv")
    if "json" in config.out_formats:
        payload = [
            {**dict(zip(_SWEEP_HEADER, map(_jsonable, row))), "flags": list(r.flags)}
            for row, r in zip(rows, reports)
        ]
        _write_json(outdir / "convergence.json", payload)
        files.append("convergence.json")
    files.append("manifest.json")

    clean = [r for r in reports if not r.flags]
    decreasing = all(
        all(b < a for a, b in zip(col, col[1:]))
        for col in (
            [r.l2_error for r in clean],
            [r.amalgam_error for r in clean],
            [r.sup_error for r in clean],
        )
    )
    checks = {
        "rows": len(reports),
        "failed_rows": sum(1 for r in reports if r.flags),
        "precision_limited_rows": sum(1 for r in reports if r.precision_limited),
        "embedding_l2_le_amalgam": all(
            r.l2_error <= r.amalgam_error + 1e-10 for r in clean
        ),
        "errors_strictly_decreasing": decreasing,
        "quadrature_refinement_factor": config.quadrature_refinement,
        "quadrature_drift": _quadrature_drift(config),
    }
    _write_manifest(outdir, "sweep", config, files, checks)
    return 1 if checks["failed_rows"] else 0


def _parse_eval_points(text: str) -> list[float]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return [float(t) for t in items]
    except ValueError as exc:
        raise ConfigError(f"--eval-points must be comma-separated reals: {exc}") from exc


def cmd_reconstruct(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    alphas = config.alpha_values()
    if len(alphas) != 1:
        raise ConfigError(
            f"reconstruct needs a single alpha; the sweep resolves to {len(alphas)} values"
        )
    outdir = _outdir(args, config)
    if args.eval_points is None:
        xs = [float(x) for x in config.make_spatial_grid().points]
    else:
        xs = _parse_eval_points(args.eval_points)
    xs.sort()

    signal = config.make_signal()
    grid = config.make_grid()
    approx = reconstruct(
        signal,
        config.make_family(),
        alphas[0],
        config.make_nodes(),
        grid,
        config.m_max,
        tol=config.solver_tol,
        workers=config.workers,
    )
    points = []
    if xs:
        xs_arr = np.asarray(xs, dtype=float)
        j_vals = np.atleast_1d(evaluate_J(approx, xs_arr))
        # Reference values: the closed spatial form when the signal has one,
        # otherwise the band-truncated quadrature inversion (the same target
        # the approximant is built against).
        if signal.f is not None:
            f_vals = np.asarray(signal.f(xs_arr), dtype=complex)
        else:
            f_vals = truncated_signal_values(signal, grid, config.m_max, xs_arr)
        points = [
            {
                "x": float(x),
                "f": [float(fv.real), float(fv.imag)],
                "J": [float(jv.real), float(jv.imag)],
                "error": float(abs(fv - jv)),
            }
            for x, fv, jv in zip(xs, f_vals, j_vals)
        ]
    _write_json(outdir / "reconstruction.json", points)
    files = ["reconstruction.json", "manifest.json"]
    checks = {
        "alpha": alphas[0],
        "points": len(points),
        "max_pointwise_error": max((p["error"] for p in points), default=0.0),
        "quadrature_refinement_factor": config.quadrature_refinement,
        "quadrature_drift": _quadrature_drift(config),
    }
    _write_manifest(outdir, "reconstruct", config, files, checks)
    return 0


def cmd_list_signals(args: argparse.Namespace) -> int:
    for signal in builtin_signals():
        tags = ",".join(sorted(signal.class_tags)) or "-"
        real = "yes" if signal.is_real else "no"
        closed = "yes" if signal.f is not None else "no"
        print(
            f"{signal.signal_id:<12} classes={tags:<32} real={real:<4} closed_form={closed}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwamalgam",
        description="Band-decomposition reconstruction experiments with regular interpolators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    specs = [
        ("verify-family", cmd_verify_family, "certify interpolator regularity over an alpha sweep"),
        ("sweep", cmd_sweep, "run a reconstruction error sweep"),
        ("reconstruct", cmd_reconstruct, "evaluate the approximant pointwise"),
        ("list-signals", cmd_list_signals, "print the builtin signal catalog"),
    ]
    for name, func, help_text in specs:
        cmd = sub.add_parser(name, help=help_text)
        if name != "list-signals":
            cmd.add_argument("--config", required=True, help="path to the JSON config")
            cmd.add_argument(
                "--out", default=None, help="output directory (overrides output.directory)"
            )
        if name == "reconstruct":
            cmd.add_argument(
                "--eval-points",
                default=None,
                help="comma-separated x values; defaults to the interior spatial grid",
            )
        cmd.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConditioningError, AccuracyError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
