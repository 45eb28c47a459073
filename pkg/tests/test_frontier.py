import math

import numpy as np
import pytest

from sqzlab.core import MethodPoint, QuadratureStats
from sqzlab.frontier import (
    Axis,
    ConfigError,
    LogBins,
    Method,
    Spacing,
    SweepGrid,
    default_grid,
    frontier,
    frontier_suite,
    ok_points,
    sweep,
)


def bs_grid(nb=10, nt=10, b_hi=3.0):
    return SweepGrid(
        method=Method.BEAM_SPLITTER,
        axes=(Axis("b", 0.0, b_hi, nb), Axis("theta", 0.0, math.pi / 2, nt)),
    )


def test_bs_sweep_cardinality_and_order():
    records = sweep(bs_grid())
    assert len(records) == 100
    assert all(r.status == "ok" for r in records)
    # row-major: b outer, theta inner
    assert records[0].values["b"] == 0.0
    assert records[9].values["b"] == 0.0
    assert records[10].values["b"] == pytest.approx(1.0 / 3.0)
    thetas = [r.values["theta"] for r in records[:10]]
    assert thetas == sorted(thetas)


def test_sweep_rejects_unknown_parameter():
    with pytest.raises(ConfigError):
        SweepGrid(method=Method.BEAM_SPLITTER, axes=(Axis("c0", 0.1, 0.9, 5),))


def test_axis_validation():
    with pytest.raises(ConfigError):
        Axis("b", 0.0, 1.0, 1)
    with pytest.raises(ConfigError):
        Axis("b", 1.0, 0.5, 5)
    with pytest.raises(ConfigError):
        Axis("b", 0.0, 1.0, 5, Spacing.LOG)


def test_om_sweep_records_domain_errors_as_skips():
    grid = SweepGrid(
        method=Method.OM_AMPLITUDE,
        axes=(Axis("cc", 0.5, 4.0, 8), Axis("dd", 0.1, 1.0, 8)),
    )
    records = sweep(grid)
    skipped = [r for r in records if r.status == "skipped"]
    assert skipped and all("cc*dd" in r.skip_reason for r in skipped)
    assert len(records) == 64  # nothing silently dropped


def test_opo_amplitude_cutoff_skips():
    grid = SweepGrid(
        method=Method.OPO_AMPLITUDE,
        axes=(Axis("c0", 0.3, 0.7, 3), Axis("seed_ratio", 1e-3, 10.0, 60, Spacing.LOG)),
    )
    records = sweep(grid)
    skipped = [r for r in records if r.status == "skipped"]
    assert skipped
    assert all("nonmonotonic alpha_sq" in r.skip_reason for r in skipped)
    # surviving alpha_sq values are monotone along each c0 scan
    for c0 in {r.values["c0"] for r in records}:
        scan = [
            r.point.alpha_sq
            for r in records
            if r.values["c0"] == c0 and r.status == "ok"
        ]
        assert all(x <= y for x, y in zip(scan, scan[1:]))


def test_opa_sweep_samples_trajectories():
    grid = SweepGrid(
        method=Method.OPA_PHASE,
        axes=(Axis("seed_ratio", 0.01, 0.1, 3, Spacing.LOG), Axis("tau", 0.0, 2.0, 9)),
    )
    records = sweep(grid)
    assert len(records) == 27
    first = records[:9]
    assert all(r.values["seed_ratio"] == 0.01 for r in first)
    assert [r.values["tau"] for r in first] == pytest.approx(list(np.linspace(0, 2, 9)))
    assert first[0].point.stats.var_x == 1.0  # tau = 0 is vacuum


def test_opa_seed_cap_constraint():
    grid = SweepGrid(
        method=Method.OPA_AMPLITUDE,
        axes=(Axis("seed_ratio", 0.1, 10.0, 5, Spacing.LOG), Axis("tau", 0.0, 1.0, 4)),
        constraints={"seed_input_cap": 1.0},
    )
    records = sweep(grid)
    capped = [r for r in records if r.values["seed_ratio"] > 1.0]
    assert capped and all(r.status == "skipped" for r in capped)
    assert all("seed input cap" in r.skip_reason for r in capped)
    live = [r for r in records if r.values["seed_ratio"] <= 1.0]
    assert all(r.status == "ok" for r in live)


def test_sweep_threads_match_sequential():
    grid = bs_grid(6, 6)
    assert sweep(grid, threads=4) == sweep(grid, threads=1)


def test_bins():
    bins = LogBins(1e-4, 1.0, 40)
    assert len(bins.edges()) == 41
    assert bins.index(1e-4) == 0
    assert bins.index(1.0) == 39
    assert bins.index(2.0) is None
    assert bins.index(5e-5) is None
    centers = bins.centers()
    assert all(bins.index(c) == i for i, c in enumerate(centers))


def test_frontier_threshold_validation():
    with pytest.raises(ConfigError):
        frontier([], 0.5)


def test_frontier_unit_threshold_keeps_only_pure_points():
    pts = ok_points(sweep(bs_grid(7, 9)))
    curve = frontier(pts, 1.0, LogBins(1e-6, 1.0, 50))
    # only b = 0 rows (and the theta = pi/2 bin) reach uncertainty 1,
    # so no surviving point is squeezed
    for p in curve.points:
        assert p.squeeze_db == pytest.approx(0.0, abs=1e-12)
        assert p.uncertainty <= 1.0 + 1e-12


def test_frontier_nested_thresholds_monotone():
    pts = ok_points(sweep(bs_grid(15, 30)))
    bins = LogBins(1e-4, 1.0, 50)
    lo = frontier(pts, 1.1, bins)
    hi = frontier(pts, 2.0, bins)
    lo_map = {p.alpha_sq: p.squeeze_db for p in lo.points}
    hi_map = {p.alpha_sq: p.squeeze_db for p in hi.points}
    shared = set(lo_map) & set(hi_map)
    assert shared
    for a2 in shared:
        assert lo_map[a2] <= hi_map[a2] + 1e-12


def test_frontier_matches_analytic_bs_envelope():
    grid = SweepGrid(
        method=Method.BEAM_SPLITTER,
        axes=(
            Axis("b", 0.0, 12.0, 61),
            Axis("theta", 1e-3, math.pi / 2, 300, Spacing.LOG),
        ),
    )
    bins = LogBins(1e-5, 1.0, 100)
    curve = frontier(ok_points(sweep(grid)), math.inf, bins)
    bin_db = 10.0 * math.log10(bins.edges()[1] / bins.edges()[0])
    assert len(curve.points) > 90
    for p in curve.points:
        if p.alpha_sq > 0.5:
            continue  # bound only meaningful where alpha_sq term dominates
        bound = -10.0 * math.log10(p.alpha_sq)
        assert abs(p.squeeze_db - bound) <= bin_db + 0.05


def test_frontier_grid_refinement_never_hurts():
    bins = LogBins(1e-4, 1.0, 30)
    coarse = frontier(ok_points(sweep(bs_grid(7, 13))), 2.0, bins)
    fine = frontier(ok_points(sweep(bs_grid(13, 25))), 2.0, bins)  # supersets
    c = {p.alpha_sq: p.squeeze_db for p in coarse.points}
    f = {p.alpha_sq: p.squeeze_db for p in fine.points}
    for a2, db in c.items():
        assert f[a2] >= db - 1e-12


def test_frontier_deterministic_tiebreak():
    def pt(alpha_sq, var_x, var_p, tag):
        return MethodPoint(alpha_sq, QuadratureStats(var_x, var_p), {"tag": tag})

    bins = LogBins(1e-2, 1.0, 1)
    # same squeeze_db, second has lower uncertainty
    pts = [pt(0.1, 0.5, 4.0, "a"), pt(0.1, 0.5, 3.0, "b"), pt(0.1, 0.5, 3.0, "c")]
    curve = frontier(pts, 10.0, bins)
    assert curve.points[0].params["tag"] == "b"
    # then lower alpha_sq
    pts = [pt(0.2, 0.5, 3.0, "hi"), pt(0.1, 0.5, 3.0, "lo")]
    assert frontier(pts, 10.0, bins).points[0].params["tag"] == "lo"
    # then input order
    pts = [pt(0.1, 0.5, 3.0, "first"), pt(0.1, 0.5, 3.0, "second")]
    assert frontier(pts, 10.0, bins).points[0].params["tag"] == "first"


def test_frontier_suite_shares_one_sweep():
    grid = bs_grid(8, 16)
    curves = frontier_suite(Method.BEAM_SPLITTER, (1.01, 1.1, 2.0), grid)
    assert [c.threshold for c in curves] == [1.01, 1.1, 2.0]
    maps = [{p.alpha_sq: p.squeeze_db for p in c.points} for c in curves]
    shared = set(maps[0]) & set(maps[1]) & set(maps[2])
    for a2 in shared:
        assert maps[0][a2] <= maps[1][a2] + 1e-12 <= maps[2][a2] + 2e-12


def test_frontier_suite_method_mismatch():
    with pytest.raises(ConfigError):
        frontier_suite(Method.OPO_PHASE, (2.0,), bs_grid())


def test_om_low_brightness_penalty_under_tight_threshold():
    # at the tightest uncertainty ceiling the dissipative squeezer does
    # worse at low finite alpha_sq than at high alpha_sq
    curves = frontier_suite(
        Method.OM_AMPLITUDE,
        (1.001,),
        default_grid(Method.OM_AMPLITUDE),
        LogBins(1e-6, 1.0, 60),
    )
    pts = curves[0].points
    assert len(pts) > 10
    low = [p.squeeze_db for p in pts if p.alpha_sq < 1e-4]
    high = [p.squeeze_db for p in pts if p.alpha_sq > 0.1]
    assert low and high
    assert max(low) < max(high)


def test_opo_phase_nested_threshold_curves():
    grid = SweepGrid(
        method=Method.OPO_PHASE,
        axes=(Axis("c0", 0.1, 0.95, 18), Axis("seed_ratio", 1e-5, 0.5, 60, Spacing.LOG)),
    )
    curves = frontier_suite(Method.OPO_PHASE, (1.01, 1.1, 2.0), grid, LogBins(1e-5, 1.0, 40))
    maps = [{p.alpha_sq: p.squeeze_db for p in c.points} for c in curves]
    shared = set(maps[0]) & set(maps[1]) & set(maps[2])
    assert len(shared) > 5
    for a2 in shared:
        assert maps[0][a2] <= maps[1][a2] + 1e-12
        assert maps[1][a2] <= maps[2][a2] + 1e-12


def test_opa_amplitude_seed_cap_truncates_bright_output():
    # deamplification means bright outputs need seed inputs brighter than
    # the pump; capping the seed at the pump power collapses the high
    # alpha_sq end of the frontier
    axes = (
        Axis("seed_ratio", 1e-2, 30.0, 24, Spacing.LOG),
        Axis("tau", 0.0, 5.0, 120),
    )
    bins = LogBins(1e-4, 1.0, 40)
    best = {}
    for cap in (None, 1.0):
        constraints = {} if cap is None else {"seed_input_cap": cap}
        grid = SweepGrid(
            method=Method.OPA_AMPLITUDE, axes=axes, constraints=constraints
        )
        curve = frontier(ok_points(sweep(grid)), 2.0, bins)
        best[cap] = max(
            (p.squeeze_db for p in curve.points if p.alpha_sq > 0.2), default=-1.0
        )
    assert best[None] > best[1.0] + 3.0


def test_determinism_repeated_runs():
    grid = bs_grid(9, 9)
    a = frontier_suite(Method.BEAM_SPLITTER, (1.5,), grid)
    b = frontier_suite(Method.BEAM_SPLITTER, (1.5,), grid)
    assert a == b
