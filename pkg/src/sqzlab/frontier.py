"""Parameter sweeps and optimal-squeezing frontier extraction.

A sweep evaluates one method over the Cartesian product of named
parameter axes, in row-major order over the axes as declared, recording
skipped points (domain errors, cutoffs, constraint violations) with a
machine-readable reason instead of dropping them. A frontier bins the
surviving points by alpha_sq on a log grid and keeps, per bin, the best
squeeze factor among points whose overall uncertainty stays below a
threshold.

Everything here is deterministic: identical inputs produce identical
outputs, including tie-breaking (smaller uncertainty first, then smaller
alpha_sq, then input order). Sweep evaluation may fan out over worker
threads (see SQZLAB_THREADS in the CLI) because the evaluators are pure;
results are collected back in grid order before any reduction.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import beamsplitter, opa, opo, optomech
from .core import (
    DomainError,
    MethodPoint,
    Regime,
    SqueezedAxis,
    squeeze_metrics,
    uncertainty,
)


class ConfigError(ValueError):
    """A sweep or frontier configuration is malformed."""


class Method(enum.Enum):
    BEAM_SPLITTER = "bs"
    OPO_PHASE = "opo_phase"
    OPO_AMPLITUDE = "opo_amplitude"
    OPA_PHASE = "opa_phase"
    OPA_AMPLITUDE = "opa_amplitude"
    OM_AMPLITUDE = "om_amplitude"
    OM_PHASE = "om_phase"


class Spacing(enum.Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    count: int
    spacing: Spacing = Spacing.LINEAR

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ConfigError(f"axis {self.name!r} needs count >= 2")
        if not self.lo < self.hi:
            raise ConfigError(f"axis {self.name!r} needs lo < hi")
        if self.spacing is Spacing.LOG and self.lo <= 0.0:
            raise ConfigError(f"log axis {self.name!r} needs lo > 0")

    def values(self) -> np.ndarray:
        if self.spacing is Spacing.LOG:
            return np.logspace(math.log10(self.lo), math.log10(self.hi), self.count)
        return np.linspace(self.lo, self.hi, self.count)


# parameter names each method accepts as sweep axes
AXIS_NAMES = {
    Method.BEAM_SPLITTER: ("b", "theta"),
    Method.OPO_PHASE: ("c0", "seed_ratio"),
    Method.OPO_AMPLITUDE: ("c0", "seed_ratio"),
    Method.OPA_PHASE: ("seed_ratio", "tau"),
    Method.OPA_AMPLITUDE: ("seed_ratio", "tau"),
    Method.OM_AMPLITUDE: ("cc", "dd", "n_bar"),
    Method.OM_PHASE: ("cc", "dd", "n_bar"),
}


@dataclass(frozen=True)
class SweepGrid:
    method: Method
    axes: tuple[Axis, ...]
    constraints: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        allowed = AXIS_NAMES[self.method]
        seen = set()
        for ax in self.axes:
            if ax.name not in allowed:
                raise ConfigError(
                    f"unknown parameter {ax.name!r} for method {self.method.value};"
                    f" expected one of {allowed}"
                )
            if ax.name in seen:
                raise ConfigError(f"duplicate axis {ax.name!r}")
            seen.add(ax.name)
        for key in self.constraints:
            if key != "seed_input_cap":
                raise ConfigError(f"unknown constraint {key!r}")


@dataclass(frozen=True)
class SweepRecord:
    """One grid point: axis values, the evaluated point or a skip reason."""

    values: dict[str, float]
    point: MethodPoint | None
    status: str  # "ok" or "skipped"
    skip_reason: str = ""


@dataclass(frozen=True)
class FrontierPoint:
    alpha_sq: float  # bin center
    squeeze_db: float
    uncertainty: float
    params: dict[str, object]


@dataclass(frozen=True)
class FrontierCurve:
    threshold: float
    points: tuple[FrontierPoint, ...]


@dataclass(frozen=True)
class LogBins:
    """Log-spaced alpha_sq bins over [lo, hi]."""

    lo: float = 1e-6
    hi: float = 1.0
    count: int = 200

    def __post_init__(self) -> None:
        if self.lo <= 0.0 or not self.lo < self.hi or self.count < 1:
            raise ConfigError("bins need 0 < lo < hi and count >= 1")

    def edges(self) -> np.ndarray:
        return np.logspace(math.log10(self.lo), math.log10(self.hi), self.count + 1)

    def centers(self) -> np.ndarray:
        e = self.edges()
        return np.sqrt(e[:-1] * e[1:])

    def index(self, alpha_sq: float) -> int | None:
        """Bin index for a value, or None when it falls outside [lo, hi]."""
        if not self.lo <= alpha_sq <= self.hi:
            return None
        t = (math.log10(alpha_sq) - math.log10(self.lo)) / (
            math.log10(self.hi) - math.log10(self.lo)
        )
        return min(int(t * self.count), self.count - 1)


def _grid_rows(axes: Sequence[Axis]) -> list[dict[str, float]]:
    rows: list[dict[str, float]] = [{}]
    for ax in axes:
        rows = [dict(r, **{ax.name: float(v)}) for r in rows for v in ax.values()]
    return rows


def _map_ordered(
    fn: Callable[[dict[str, float]], SweepRecord],
    rows: list[dict[str, float]],
    threads: int,
) -> list[SweepRecord]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, rows))
    return [fn(row) for row in rows]


def _eval_simple(method: Method, row: dict[str, float]) -> SweepRecord:
    try:
        if method is Method.BEAM_SPLITTER:
            point = beamsplitter.bs_evaluate(
                beamsplitter.BsParams(b=row.get("b", 0.0), theta=row.get("theta", 0.0))
            )
        elif method in (Method.OPO_PHASE, Method.OPO_AMPLITUDE):
            regime = (
                Regime.PHASE_SQUEEZING
                if method is Method.OPO_PHASE
                else Regime.AMPLITUDE_SQUEEZING
            )
            point = opo.opo_evaluate(
                opo.OpoParams(row["c0"], row.get("seed_ratio", 0.0), regime)
            )
        else:
            axis = (
                SqueezedAxis.AMPLITUDE
                if method is Method.OM_AMPLITUDE
                else SqueezedAxis.PHASE
            )
            point = optomech.om_evaluate(
                optomech.OmParams(row["cc"], row["dd"], row.get("n_bar", 0.0), axis)
            )
    except DomainError as exc:
        return SweepRecord(values=row, point=None, status="skipped", skip_reason=str(exc))
    return SweepRecord(values=row, point=point, status="ok")


def _sweep_opa(grid: SweepGrid, threads: int) -> list[SweepRecord]:
    axes = {ax.name: ax for ax in grid.axes}
    if "seed_ratio" not in axes or "tau" not in axes:
        raise ConfigError("opa sweeps need both a seed_ratio and a tau axis")
    regime = (
        Regime.PHASE_SQUEEZING
        if grid.method is Method.OPA_PHASE
        else Regime.AMPLITUDE_SQUEEZING
    )
    taus = axes["tau"].values()
    if taus[0] < 0.0:
        raise ConfigError("tau axis must be non-negative")
    t_max = float(taus[-1])
    cap = grid.constraints.get("seed_input_cap")

    seeds = axes["seed_ratio"].values()
    live = [float(s) for s in seeds if cap is None or s <= cap]
    trajectories: dict[float, opa.OpaTrajectory] = {}
    if live:
        for s, traj in zip(live, opa.propagate_batch(live, regime, t_max)):
            trajectories[s] = traj

    records: list[SweepRecord] = []
    ordered = _grid_rows(grid.axes)
    for row in ordered:
        seed = row["seed_ratio"]
        if cap is not None and seed > cap:
            records.append(
                SweepRecord(
                    values=row,
                    point=None,
                    status="skipped",
                    skip_reason=f"seed_ratio {seed:g} exceeds seed input cap {cap:g}",
                )
            )
            continue
        traj = trajectories[float(seed)]
        # snap the requested tau to the nearest integration grid time
        i = int(round(row["tau"] / t_max * (len(traj.times) - 1)))
        records.append(SweepRecord(values=row, point=traj.point(i), status="ok"))
    return records


def _apply_opo_amplitude_cutoff(
    grid: SweepGrid, records: list[SweepRecord]
) -> list[SweepRecord]:
    """Mark points past the alpha_sq turnaround of each seed scan."""
    seed_axis = next((ax for ax in grid.axes if ax.name == "seed_ratio"), None)
    if seed_axis is None:
        return records
    groups: dict[tuple, list[int]] = {}
    for i, rec in enumerate(records):
        key = tuple(
            (k, v) for k, v in sorted(rec.values.items()) if k != "seed_ratio"
        )
        groups.setdefault(key, []).append(i)
    out = list(records)
    for idxs in groups.values():
        idxs = sorted(idxs, key=lambda i: records[i].values["seed_ratio"])
        scan = [records[i] for i in idxs]
        if any(r.point is None for r in scan):
            continue
        cut = opo.amplitude_cutoff_index([r.point.alpha_sq for r in scan])
        if cut is None:
            continue
        for i in idxs[cut:]:
            out[i] = SweepRecord(
                values=records[i].values,
                point=None,
                status="skipped",
                skip_reason="nonmonotonic alpha_sq vs seed_ratio (past cutoff)",
            )
    return out


def sweep(grid: SweepGrid, threads: int = 1) -> list[SweepRecord]:
    """Evaluate a method over the full grid, in row-major axis order."""
    if grid.method in (Method.OPA_PHASE, Method.OPA_AMPLITUDE):
        return _sweep_opa(grid, threads)
    rows = _grid_rows(grid.axes)
    records = _map_ordered(lambda row: _eval_simple(grid.method, row), rows, threads)
    if grid.method is Method.OPO_AMPLITUDE:
        records = _apply_opo_amplitude_cutoff(grid, records)
    return records


def ok_points(records: Iterable[SweepRecord]) -> list[MethodPoint]:
    return [r.point for r in records if r.status == "ok" and r.point is not None]


def frontier(
    points: Iterable[MethodPoint],
    threshold: float,
    bins: LogBins = LogBins(),
) -> FrontierCurve:
    """Best squeeze factor per alpha_sq bin under an uncertainty ceiling."""
    if not threshold >= 1.0:
        raise ConfigError(f"threshold must be >= 1, got {threshold!r}")
    best: dict[int, tuple[float, float, int, MethodPoint]] = {}
    for order, pt in enumerate(points):
        u = uncertainty(pt.stats)
        if u > threshold + 1e-12:
            continue
        i = bins.index(pt.alpha_sq)
        if i is None:
            continue
        db = squeeze_metrics(pt.stats).squeeze_db
        # rank: higher squeeze first, then lower uncertainty, lower alpha_sq,
        # then first-seen
        cand = (db, u, order, pt)
        cur = best.get(i)
        if cur is None:
            best[i] = cand
            continue
        better = (-cand[0], cand[1], cand[3].alpha_sq, cand[2]) < (
            -cur[0],
            cur[1],
            cur[3].alpha_sq,
            cur[2],
        )
        if better:
            best[i] = cand
    centers = bins.centers()
    pts = tuple(
        FrontierPoint(
            alpha_sq=float(centers[i]),
            squeeze_db=best[i][0],
            uncertainty=best[i][1],
            params=dict(best[i][3].params),
        )
        for i in sorted(best)
    )
    return FrontierCurve(threshold=threshold, points=pts)


def frontier_suite(
    method: Method,
    thresholds: Sequence[float],
    grid: SweepGrid,
    bins: LogBins = LogBins(),
    threads: int = 1,
) -> list[FrontierCurve]:
    """One sweep shared across a list of uncertainty thresholds."""
    if grid.method is not method:
        raise ConfigError("grid method does not match the requested method")
    pts = ok_points(sweep(grid, threads=threads))
    return [frontier(pts, thr, bins) for thr in thresholds]


DEFAULT_THRESHOLDS = (1.001, 1.01, 1.1, 2.0, 10.0)


def default_grid(method: Method, seed_input_cap: float | None = None) -> SweepGrid:
    """Documented default sweep grids behind the stock frontier figures."""
    constraints = {} if seed_input_cap is None else {"seed_input_cap": seed_input_cap}
    if method is Method.BEAM_SPLITTER:
        axes = (
            Axis("b", 0.0, 12.0, 121),
            Axis("theta", 1e-4, math.pi / 2, 400, Spacing.LOG),
        )
    elif method in (Method.OPO_PHASE, Method.OPO_AMPLITUDE):
        axes = (
            Axis("c0", 0.05, 0.995, 190),
            Axis("seed_ratio", 1e-6, 10.0, 480, Spacing.LOG),
        )
    elif method in (Method.OPA_PHASE, Method.OPA_AMPLITUDE):
        axes = (
            Axis("seed_ratio", 1e-3, 30.0, 40, Spacing.LOG),
            Axis("tau", 0.0, 6.0, 240),
        )
    else:
        axes = (
            Axis("cc", 1e-3, 100.0, 160, Spacing.LOG),
            Axis("dd", 0.005, 1.0, 160),
        )
    return SweepGrid(method=method, axes=axes, constraints=constraints)
