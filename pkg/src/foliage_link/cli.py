"""Command-line frontend: point losses, sweeps, budget solving, scenarios, bounds.

Exit codes: 0 on success, 1 on domain or solver errors (one-line diagnostic
on stderr), 2 on usage errors. The environment variable
``FOLIAGE_LINK_FSPL_CONST`` overrides the free-space constant (default
32.45) for model-variant experiments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .budget import RadioConfig, max_foliage_factor, max_foliage_height, max_range
from .errors import FoliageLinkError
from .propagation import (
    DEFAULT_FSPL_CONSTANT_DB,
    LinkGeometry,
    LossBreakdown,
    delta_bounds,
    delta_from_heights,
    total_loss,
)
from .scenario import (
    REPORT_CSV_HEADER,
    SWEEP_CSV_HEADER,
    emit_csv,
    emit_json,
    evaluate_scenario,
    parse_scenario,
    sweep_rows_as_objects,
)
from .sweep import SweepSpec, SweepVariable, preset, run_sweep

FSPL_CONST_ENV = "FOLIAGE_LINK_FSPL_CONST"

_SWEEP_VARS = {
    "delta": SweepVariable.DELTA,
    "foliage-height": SweepVariable.FOLIAGE_HEIGHT,
    "distance": SweepVariable.DISTANCE,
    "frequency-mhz": SweepVariable.FREQUENCY_MHZ,
}


class _UsageError(Exception):
    """Bad flag combination; maps to exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foliage-link",
        description="Link-budget planning for wireless links crossing foliage cover.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("table", "csv", "json"), default="table",
            help="output format (default: table)",
        )
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    def add_geometry_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--d-km", type=float, help="total path length in km")
        p.add_argument("--delta", type=float, help="foliage cover factor in [0,1]")
        p.add_argument("--h-m", type=float, help="base antenna height above sensor, m")
        p.add_argument("--h-f-m", type=float, help="foliage height above sensor, m")

    loss = sub.add_parser("loss", help="loss breakdown for one link")
    add_geometry_flags(loss)
    loss.add_argument("--f-mhz", type=float, required=True, help="frequency in MHz")
    add_output_flags(loss)

    sweep = sub.add_parser("sweep", help="one-dimensional parameter sweep")
    sweep.add_argument(
        "--preset", choices=("figure2", "figure3", "figure4"),
        help="bundled sweep (exclusive of --var/--start/--stop/--steps)",
    )
    sweep.add_argument("--var", choices=tuple(_SWEEP_VARS), help="variable to sweep")
    sweep.add_argument("--start", type=float, help="first swept value")
    sweep.add_argument("--stop", type=float, help="last swept value")
    sweep.add_argument("--steps", type=int, help="number of points, endpoints included")
    sweep.add_argument("--delta-cap", type=float, default=0.95,
                       help="upper cap for cover-factor sweeps (default 0.95)")
    add_geometry_flags(sweep)
    sweep.add_argument("--f-mhz", type=float, help="fixed frequency in MHz")
    add_output_flags(sweep)

    budget = sub.add_parser("budget", help="inverse solves against a radio budget")
    budget.add_argument("--solve", choices=("range", "delta", "height"), required=True)
    budget.add_argument("--tx-dbm", type=float, required=True, help="transmit power, dBm")
    budget.add_argument("--tx-gain", type=float, default=0.0, help="transmit gain, dBi")
    budget.add_argument("--rx-gain", type=float, default=0.0, help="receive gain, dBi")
    budget.add_argument("--sensitivity-dbm", type=float, required=True,
                        help="receiver sensitivity, dBm (negative)")
    budget.add_argument("--margin-db", type=float, default=0.0, help="required fade margin, dB")
    budget.add_argument("--delta-cap", type=float, default=0.95,
                        help="cover-factor ceiling for delta/height solves")
    add_geometry_flags(budget)
    budget.add_argument("--f-mhz", type=float, required=True, help="frequency in MHz")
    add_output_flags(budget)

    scenario = sub.add_parser("scenario", help="evaluate a scenario JSON file")
    scenario.add_argument("--file", required=True, metavar="PATH", help="scenario document")
    add_output_flags(scenario)

    bounds = sub.add_parser("bounds", help="admissible cover-factor band")
    bounds.add_argument("--delta-min", type=float, required=True)
    bounds.add_argument("--delta-max", type=float, required=True)
    bounds.add_argument("--sigma", type=float, required=True,
                        help="fractional perturbation, e.g. 0.5 for +/-50%%")
    add_output_flags(bounds)

    return parser


def _fspl_constant_from_env() -> float:
    raw = os.environ.get(FSPL_CONST_ENV)
    if raw is None:
        return DEFAULT_FSPL_CONSTANT_DB
    try:
        return float(raw)
    except ValueError:
        raise _UsageError(f"{FSPL_CONST_ENV} must be a number, got {raw!r}") from None


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.7f}"
    if value is None:
        return "-"
    return str(value)


def _kv_table(pairs: list[tuple[str, object]]) -> str:
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key.ljust(width)}  {_fmt(value)}" for key, value in pairs) + "\n"


def _single_row_csv(header: list[str], values: list[object]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerow(
        [
            repr(v) if isinstance(v, float) else ("true" if v is True else "false" if v is False else str(v))
            for v in values
        ]
    )
    return out.getvalue()


def _geometry_from_args(args: argparse.Namespace) -> LinkGeometry:
    if args.d_km is None:
        raise _UsageError("--d-km is required here")
    if args.delta is not None and (args.h_m is not None or args.h_f_m is not None):
        raise _UsageError("--delta and --h-m/--h-f-m are mutually exclusive")
    if args.delta is None and (args.h_m is None or args.h_f_m is None):
        raise _UsageError("supply --delta, or both --h-m and --h-f-m")
    return LinkGeometry(d_km=args.d_km, h_m=args.h_m, h_f_m=args.h_f_m, delta=args.delta)


def _delta_from_args(args: argparse.Namespace) -> float:
    if args.delta is not None:
        if args.h_m is not None or args.h_f_m is not None:
            raise _UsageError("--delta and --h-m/--h-f-m are mutually exclusive")
        return args.delta
    if args.h_m is None or args.h_f_m is None:
        raise _UsageError("supply --delta, or both --h-m and --h-f-m")
    return delta_from_heights(args.h_f_m, args.h_m)


def _breakdown_fields(breakdown: LossBreakdown) -> list[tuple[str, object]]:
    return [
        ("delta", breakdown.split.delta),
        ("d_f_m", breakdown.split.d_f_m),
        ("d_fsp_m", breakdown.split.d_fsp_m),
        ("l_foliage_db", breakdown.l_foliage_db),
        ("l_fsp_db", breakdown.l_fsp_db),
        ("l_total_db", breakdown.l_total_db),
        ("regime", breakdown.foliage.regime.value),
        ("validity", breakdown.foliage.validity.value),
    ]


def _run_loss(args: argparse.Namespace, fspl_constant: float) -> str:
    geometry = _geometry_from_args(args)
    breakdown = total_loss(geometry, args.f_mhz, fspl_constant)
    fields = _breakdown_fields(breakdown)
    if args.format == "json":
        return json.dumps(dict(fields), indent=2) + "\n"
    if args.format == "csv":
        return _single_row_csv([k for k, _ in fields], [v for _, v in fields])
    return _kv_table(fields)


def _sweep_table_text(table) -> str:
    lines = ["  ".join(name.ljust(13) for name in SWEEP_CSV_HEADER)]
    for row in table.rows:
        cells = []
        for name in SWEEP_CSV_HEADER:
            value = getattr(row, name)
            cells.append(_fmt(value if not hasattr(value, "value") else value.value).ljust(13))
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def _run_sweep_cmd(args: argparse.Namespace, fspl_constant: float) -> str:
    custom_flags = (args.var, args.start, args.stop, args.steps)
    if args.preset is not None:
        if any(flag is not None for flag in custom_flags):
            raise _UsageError("--preset is exclusive of --var/--start/--stop/--steps")
        spec = preset(args.preset)
    else:
        if any(flag is None for flag in custom_flags):
            raise _UsageError("supply --preset, or all of --var/--start/--stop/--steps")
        variable = _SWEEP_VARS[args.var]
        if variable is SweepVariable.DELTA:
            if args.d_km is None:
                raise _UsageError("--d-km is required for a delta sweep")
            base = LinkGeometry(d_km=args.d_km, delta=args.start)
        elif variable is SweepVariable.FOLIAGE_HEIGHT:
            if args.d_km is None or args.h_m is None:
                raise _UsageError("--d-km and --h-m are required for a foliage-height sweep")
            base = LinkGeometry(d_km=args.d_km, h_m=args.h_m, h_f_m=args.start)
        elif variable is SweepVariable.DISTANCE:
            delta = _delta_from_args(args)
            base = LinkGeometry(d_km=args.start, delta=delta)
        else:  # frequency sweep
            base = _geometry_from_args(args)
        f_mhz = args.f_mhz
        if variable is SweepVariable.FREQUENCY_MHZ:
            f_mhz = args.start if f_mhz is None else f_mhz
        if f_mhz is None:
            raise _UsageError("--f-mhz is required here")
        spec = SweepSpec(
            variable=variable,
            start=args.start,
            stop=args.stop,
            steps=args.steps,
            base=base,
            f_mhz=f_mhz,
            delta_cap=args.delta_cap,
        )
    table = run_sweep(spec, fspl_constant)
    if args.format == "csv":
        return emit_csv(table)
    if args.format == "json":
        return json.dumps(sweep_rows_as_objects(table), indent=2) + "\n"
    return _sweep_table_text(table)


def _run_budget(args: argparse.Namespace, fspl_constant: float) -> str:
    radio = RadioConfig(
        tx_power_dbm=args.tx_dbm,
        tx_gain_dbi=args.tx_gain,
        rx_gain_dbi=args.rx_gain,
        rx_sensitivity_dbm=args.sensitivity_dbm,
        required_margin_db=args.margin_db,
    )
    if args.solve == "range":
        delta = _delta_from_args(args)
        result = max_range(radio, delta, args.f_mhz, fspl_constant=fspl_constant)
    elif args.solve == "delta":
        if args.d_km is None:
            raise _UsageError("--d-km is required for --solve delta")
        result = max_foliage_factor(
            radio, args.d_km, args.f_mhz, args.delta_cap, fspl_constant=fspl_constant
        )
    else:
        if args.d_km is None or args.h_m is None:
            raise _UsageError("--d-km and --h-m are required for --solve height")
        result = max_foliage_height(
            radio, args.d_km, args.h_m, args.f_mhz, args.delta_cap,
            fspl_constant=fspl_constant,
        )
    fields: list[tuple[str, object]] = [
        ("solve", args.solve),
        ("value", result.value),
        ("achieved_loss_db", result.achieved_loss_db),
        ("iterations", result.iterations),
        ("converged", result.converged),
        ("all_feasible", result.all_feasible),
    ]
    if args.format == "json":
        return json.dumps(dict(fields), indent=2) + "\n"
    if args.format == "csv":
        return _single_row_csv([k for k, _ in fields], [v for _, v in fields])
    return _kv_table(fields)


def _report_table_text(reports) -> str:
    lines = ["  ".join(name.ljust(13) for name in REPORT_CSV_HEADER)]
    for report in reports:
        cells = []
        for name in REPORT_CSV_HEADER:
            value = getattr(report, name)
            if hasattr(value, "value"):
                value = value.value
            cells.append(_fmt(value).ljust(13))
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def _run_scenario(args: argparse.Namespace, fspl_constant: float) -> str:
    text = Path(args.file).read_text(encoding="utf-8")
    scenario = parse_scenario(text)
    reports = evaluate_scenario(scenario, fspl_constant)
    if args.format == "json":
        return emit_json(reports) + "\n"
    if args.format == "csv":
        return emit_csv(reports)
    return _report_table_text(reports)


def _run_bounds(args: argparse.Namespace) -> str:
    bounds = delta_bounds(args.delta_min, args.delta_max, args.sigma)
    fields: list[tuple[str, object]] = [
        ("delta_min", bounds.delta_min),
        ("delta_max", bounds.delta_max),
        ("sigma", bounds.sigma),
        ("alpha_low_min", bounds.alpha_low_min),
        ("alpha_high_max", bounds.alpha_high_max),
    ]
    if args.format == "json":
        return json.dumps(dict(fields), indent=2) + "\n"
    if args.format == "csv":
        return _single_row_csv([k for k, _ in fields], [v for _, v in fields])
    return _kv_table(fields)


def run(argv: list[str] | None = None) -> int:
    """Parse argv, execute one subcommand, return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        fspl_constant = _fspl_constant_from_env()
        if args.command == "loss":
            text = _run_loss(args, fspl_constant)
        elif args.command == "sweep":
            text = _run_sweep_cmd(args, fspl_constant)
        elif args.command == "budget":
            text = _run_budget(args, fspl_constant)
        elif args.command == "scenario":
            text = _run_scenario(args, fspl_constant)
        else:
            text = _run_bounds(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        print(parser.format_usage(), end="", file=sys.stderr)
        return 2
    except FoliageLinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is not None:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
