"""Command-line interface: ``gridsec sweep`` and ``gridsec validate``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .config import ScenarioConfig, ValidationError, default_scenario
from .sweep import MODES, SWEEP_AXES, ParseError, SweepSpec, emit_csv, parse_config, run_sweep

_INT_AXES = {"m_gateways", "n_a", "n_j", "k_blocks"}


def _parse_values(axis: str, text: str):
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        x = float(token)
        if axis in _INT_AXES:
            if x != int(x):
                raise ValidationError(f"axis {axis} takes integer values, got {token}")
            x = int(x)
        values.append(x)
    if not values:
        raise ValidationError("--values must contain at least one number")
    return tuple(values)


def _load_base(args) -> ScenarioConfig:
    cfg = parse_config(args.config) if args.config else default_scenario()
    overrides = {}
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "trials", None) is not None:
        overrides["trials"] = args.trials
    return replace(cfg, **overrides) if overrides else cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridsec",
        description="Outage, secrecy, and demand-cost simulator for a two-hop "
                    "MIMO smart-grid link under jamming and eavesdropping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a one-axis parameter sweep and write CSV")
    sweep.add_argument("--config", help="scenario file (key = value lines); defaults apply if omitted")
    sweep.add_argument("--axis", required=True, choices=SWEEP_AXES)
    sweep.add_argument("--values", required=True,
                       help="comma-separated list of values for the swept axis")
    sweep.add_argument("--mode", default="selection", choices=MODES)
    sweep.add_argument("--out", required=True, help="output CSV path")
    sweep.add_argument("--seed", type=int, help="override the scenario seed")
    sweep.add_argument("--trials", type=int, help="override the trial count")
    sweep.add_argument("--jobs", type=int, default=1,
                       help="parallel workers (results are identical for any value)")

    validate = sub.add_parser("validate", help="check a scenario file and exit")
    validate.add_argument("--config", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            cfg = parse_config(args.config)
            print(f"ok: {args.config} is a valid scenario ({cfg.trials} trials, seed {cfg.seed})")
            return 0
        base = _load_base(args)
        spec = SweepSpec(axis=args.axis, values=_parse_values(args.axis, args.values), base=base)
        report = run_sweep(spec, mode=args.mode, n_jobs=args.jobs)
    except (ParseError, ValidationError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    for failure in report.failures:
        print(f"point {failure.value} ({failure.mode}) failed: {failure.error}", file=sys.stderr)
    if report.points:
        emit_csv(report, args.out)
        print(f"wrote {len(report.points)} rows to {args.out}")
    else:
        print("error: every sweep point failed, no CSV written", file=sys.stderr)
    return 0 if report.ok and report.points else 1


if __name__ == "__main__":
    sys.exit(main())
