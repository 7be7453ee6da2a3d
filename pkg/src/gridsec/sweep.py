"""Parameter sweeps and their CSV contract.

A sweep varies one scenario field over an ordered list of values, estimates
outage/secrecy at every point, attaches the monetary loss, and emits one CSV
row per (point, mode). Numeric CSV content is a pure function of the base
configuration and seed; failed points are recorded and skipped, never fatal.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .config import ScenarioConfig, ValidationError, default_scenario
from .cost import CostModel, expected_loss
from .outage import OutageEstimate, estimate_analytic_mode, estimate_selection_mode

SWEEP_AXES = ("rate_target", "m_gateways", "n_a", "n_j", "theta", "k_blocks")
MODES = ("selection", "analytic", "both")

CSV_COLUMNS = ("axis", "p_outage", "stderr_outage", "p_sec_block",
               "unsecured_fraction", "per_consumer_cost", "expected_loss",
               "trials", "seed", "mode")


class ParseError(ValueError):
    """Scenario file line that cannot be interpreted; names the offender."""


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    values: tuple
    base: ScenarioConfig

    def __post_init__(self):
        if self.axis not in SWEEP_AXES:
            raise ValidationError(f"axis must be one of {SWEEP_AXES}, got {self.axis!r}")
        if not self.values:
            raise ValidationError("values must be a nonempty list")


@dataclass(frozen=True)
class SweepPoint:
    value: object
    p_outage: float
    stderr_outage: float
    p_sec_block: float
    unsecured_fraction: float
    per_consumer_cost: float
    expected_loss: float
    trials: int
    seed: int
    mode: str
    wall_time: float


@dataclass(frozen=True)
class SweepFailure:
    value: object
    mode: str
    error: str


@dataclass(frozen=True)
class SimulationReport:
    axis: str
    points: tuple
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def _field_types() -> dict:
    out = {}
    for f in fields(ScenarioConfig):
        out[f.name] = f.type if isinstance(f.type, str) else f.type.__name__
    return out


_FIELD_TYPES = _field_types()

_BOOL_WORDS = {"true": True, "1": True, "yes": True,
               "false": False, "0": False, "no": False}


def _convert(key: str, text: str):
    kind = _FIELD_TYPES[key]
    try:
        if kind == "int":
            return int(text)
        if kind == "float":
            return float(text)
        if kind == "bool":
            word = text.lower()
            if word not in _BOOL_WORDS:
                raise ValueError(text)
            return _BOOL_WORDS[word]
        return text
    except ValueError as err:
        raise ParseError(f"value for {key} is not a valid {kind}: {text!r}") from err


def parse_config(path) -> ScenarioConfig:
    """Load a scenario file: ``key = value`` lines, ``#`` comments.

    Keys must be ScenarioConfig field names; every field is optional and
    overlays the default scenario. Unknown keys and malformed lines raise
    ParseError; invariant violations raise ValidationError. Both name the
    offending key.
    """
    overrides = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno} is not a 'key = value' pair: {raw.strip()!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _FIELD_TYPES:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if not value:
            raise ParseError(f"line {lineno}: empty value for {key!r}")
        overrides[key] = _convert(key, value)
    return replace(default_scenario(), **overrides)


def _point(value, est: OutageEstimate, cfg: ScenarioConfig, mode: str, wall: float) -> SweepPoint:
    cost = expected_loss(CostModel.from_scenario(cfg), cfg.n_consumers, est.p_outage)
    return SweepPoint(
        value=value,
        p_outage=est.p_outage,
        stderr_outage=est.stderr_outage,
        p_sec_block=est.p_sec_block,
        unsecured_fraction=est.unsecured_fraction,
        per_consumer_cost=cost.per_consumer_cost,
        expected_loss=cost.expected_loss,
        trials=est.trials,
        seed=cfg.seed,
        mode=mode,
        wall_time=wall,
    )


def run_sweep(spec: SweepSpec, mode: str = "selection", n_jobs: int = 1) -> SimulationReport:
    """Run every sweep point, in order, continuing past per-point failures."""
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")
    estimators = {
        "selection": estimate_selection_mode,
        "analytic": estimate_analytic_mode,
    }
    wanted = ("selection", "analytic") if mode == "both" else (mode,)
    points, failures = [], []
    for value in spec.values:
        try:
            cfg = replace(spec.base, **{spec.axis: value})
        except (ValidationError, TypeError) as err:
            failures.append(SweepFailure(value=value, mode=mode, error=str(err)))
            continue
        for run_mode in wanted:
            start = time.perf_counter()
            try:
                est = estimators[run_mode](cfg, n_jobs=n_jobs)
            except Exception as err:  # keep sweeping past a broken point
                failures.append(SweepFailure(value=value, mode=run_mode, error=str(err)))
                continue
            points.append(_point(value, est, cfg, run_mode, time.perf_counter() - start))
    return SimulationReport(axis=spec.axis, points=tuple(points), failures=tuple(failures))


def emit_csv(report: SimulationReport, path) -> None:
    """Write the report rows; header plus one row per point, newline-terminated."""
    if not report.points:
        raise ValueError("refusing to emit an empty report")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for p in report.points:
            writer.writerow([p.value, p.p_outage, p.stderr_outage, p.p_sec_block,
                             p.unsecured_fraction, p.per_consumer_cost,
                             p.expected_loss, p.trials, p.seed, p.mode])
