"""Command-line front end: point evaluation, sweeps, frontiers, trajectories.

Subcommands
-----------
point           evaluate one operating point of a method
sweep           evaluate a parameter grid, emit CSV or JSON
frontier        sweep + optimal-squeezing envelopes, emit CSV/JSON/SVG
opa-trajectory  time series of one amplifier trajectory
oracle          (hidden) brute-force cross-checks for debugging

Exit codes: 0 success, 2 configuration or domain error, 3 numerical
non-convergence. All file output is deterministic: rerunning an identical
configuration produces byte-identical files. Flags override values read
from an optional key=value config file, and the effective configuration
is echoed into the output metadata.

Parameter defaults used when an axis or flag is omitted: b=0, theta=0,
seed_ratio=0, n_bar=0. c0, cc and dd have no defaults and must be given.

The environment variable SQZLAB_THREADS caps sweep fan-out (0 = auto,
1 = sequential); it never changes results, only scheduling.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Iterable, Sequence

from . import __version__
from .beamsplitter import BsParams, bs_evaluate, bs_uncertainty
from .core import DomainError, MethodPoint, QuadratureStats, Regime, SqueezedAxis, squeeze_metrics, uncertainty
from .frontier import (
    Axis,
    ConfigError,
    FrontierCurve,
    LogBins,
    Method,
    Spacing,
    SweepGrid,
    SweepRecord,
    DEFAULT_THRESHOLDS,
    default_grid,
    frontier,
    frontier_suite,
    ok_points,
    sweep,
)
from .opa import NonConvergenceError, OpaParams, opa_evaluate, opa_propagate
from .opo import OpoParams, opo_evaluate
from .optomech import OmParams, om_evaluate
from .oracle import (
    apply_beamsplitter,
    apply_displacement,
    apply_squeeze,
    mean_field_ode,
    mode_variances,
    vacuum,
)
from .svg import frontier_svg

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NONCONVERGED = 3


def _threads() -> int:
    raw = os.environ.get("SQZLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise ConfigError(f"SQZLAB_THREADS must be an integer, got {raw!r}") from exc
    if n == 0:
        return os.cpu_count() or 1
    return max(1, n)


def _fnum(x: float) -> str:
    """Shortest round-trip decimal form; deterministic across platforms."""
    return repr(float(x))


def _regime(name: str) -> Regime:
    try:
        return Regime(name)
    except ValueError:
        raise ConfigError(f"regime must be 'phase' or 'amplitude', got {name!r}")


# ---------------------------------------------------------------- config


def read_config_file(path: str) -> dict[str, str]:
    """Parse a key = value file; '#' starts a comment."""
    conf: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            conf[key.strip()] = value.strip()
    return conf


def parse_axis(spec: str) -> Axis:
    """Axis syntax: name=lo:hi:count[:linear|log]."""
    try:
        name, rest = spec.split("=", 1)
        fields = rest.split(":")
        lo, hi, count = float(fields[0]), float(fields[1]), int(fields[2])
        spacing = Spacing(fields[3]) if len(fields) > 3 else Spacing.LINEAR
    except (ValueError, IndexError) as exc:
        raise ConfigError(
            f"bad axis {spec!r}; expected name=lo:hi:count[:linear|log]"
        ) from exc
    return Axis(name.strip(), lo, hi, count, spacing)


def parse_bins(spec: str) -> LogBins:
    try:
        lo, hi, count = spec.split(":")
        return LogBins(float(lo), float(hi), int(count))
    except (ValueError, IndexError) as exc:
        raise ConfigError(f"bad bins {spec!r}; expected lo:hi:count") from exc


def parse_thresholds(spec: str) -> tuple[float, ...]:
    try:
        vals = tuple(
            math.inf if t.strip() in ("inf", "Infinity") else float(t)
            for t in spec.split(",")
            if t.strip()
        )
    except ValueError as exc:
        raise ConfigError(f"bad thresholds {spec!r}") from exc
    if not vals:
        raise ConfigError("thresholds list is empty")
    return vals


def parse_methods(spec: str) -> list[Method]:
    out = []
    for name in spec.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            out.append(Method(name))
        except ValueError:
            valid = ", ".join(m.value for m in Method)
            raise ConfigError(f"unknown method {name!r}; expected one of {valid}")
    if not out:
        raise ConfigError("methods list is empty")
    return out


# ---------------------------------------------------------------- output


def _point_lines(pt: MethodPoint) -> list[str]:
    m = squeeze_metrics(pt.stats)
    return [
        f"alpha_sq = {pt.alpha_sq:.12g}",
        f"var_x = {pt.stats.var_x:.12g}",
        f"var_p = {pt.stats.var_p:.12g}",
        f"squeeze_db = {m.squeeze_db:.12g}",
        f"uncertainty = {m.uncertainty:.12g}",
    ]


def _metadata_lines(config: dict[str, object]) -> list[str]:
    return [f"{k} = {config[k]}" for k in sorted(config)]


def sweep_csv(
    method: Method, axes: Sequence[Axis], records: Iterable[SweepRecord],
    config: dict[str, object],
) -> str:
    names = [ax.name for ax in axes]
    lines = [f"# {line}" for line in _metadata_lines(config)]
    lines.append(
        ",".join(
            ["method", *names, "alpha_sq", "var_x", "var_p", "squeeze_db",
             "uncertainty", "status", "skip_reason"]
        )
    )
    for rec in records:
        row = [method.value] + [_fnum(rec.values[n]) for n in names]
        if rec.point is None:
            row += ["", "", "", "", "", rec.status, rec.skip_reason]
        else:
            m = squeeze_metrics(rec.point.stats)
            row += [
                _fnum(rec.point.alpha_sq),
                _fnum(rec.point.stats.var_x),
                _fnum(rec.point.stats.var_p),
                _fnum(m.squeeze_db),
                _fnum(m.uncertainty),
                rec.status,
                rec.skip_reason,
            ]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def sweep_json(
    method: Method, records: Iterable[SweepRecord], config: dict[str, object]
) -> str:
    points = []
    for rec in records:
        entry: dict[str, object] = {
            "method": method.value,
            "values": rec.values,
            "status": rec.status,
            "skip_reason": rec.skip_reason,
        }
        if rec.point is not None:
            m = squeeze_metrics(rec.point.stats)
            entry.update(
                alpha_sq=rec.point.alpha_sq,
                var_x=rec.point.stats.var_x,
                var_p=rec.point.stats.var_p,
                squeeze_db=m.squeeze_db,
                uncertainty=m.uncertainty,
                params=dict(rec.point.params),
            )
        points.append(entry)
    doc = {"config": {k: str(v) for k, v in sorted(config.items())}, "points": points}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def points_from_json(text: str) -> list[MethodPoint]:
    """Re-ingest a sweep JSON document as a list of evaluated points."""
    doc = json.loads(text)
    out = []
    for entry in doc["points"]:
        if entry.get("status") != "ok":
            continue
        out.append(
            MethodPoint(
                alpha_sq=float(entry["alpha_sq"]),
                stats=QuadratureStats(float(entry["var_x"]), float(entry["var_p"])),
                params=entry.get("params", {}),
            )
        )
    return out


def frontier_csv(
    curves: Sequence[FrontierCurve], param_names: Sequence[str],
    config: dict[str, object],
) -> str:
    lines = [f"# {line}" for line in _metadata_lines(config)]
    lines.append(
        ",".join(["threshold", "alpha_sq_bin", "squeeze_db", "uncertainty",
                  *param_names])
    )
    for curve in curves:
        thr = "inf" if math.isinf(curve.threshold) else _fnum(curve.threshold)
        for p in curve.points:
            row = [thr, _fnum(p.alpha_sq), _fnum(p.squeeze_db), _fnum(p.uncertainty)]
            for name in param_names:
                v = p.params.get(name, "")
                row.append(_fnum(v) if isinstance(v, float) else str(v))
            lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def frontier_json(
    curves: Sequence[FrontierCurve], config: dict[str, object]
) -> str:
    doc = {
        "config": {k: str(v) for k, v in sorted(config.items())},
        "curves": [
            {
                "threshold": ("inf" if math.isinf(c.threshold) else c.threshold),
                "points": [
                    {
                        "alpha_sq": p.alpha_sq,
                        "squeeze_db": p.squeeze_db,
                        "uncertainty": p.uncertainty,
                        "params": p.params,
                    }
                    for p in c.points
                ],
            }
            for c in curves
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# ------------------------------------------------------------- commands


def cmd_point(args: argparse.Namespace) -> int:
    if args.method == "bs":
        pt = bs_evaluate(BsParams(b=args.b, theta=args.theta))
        extra = [f"bs_uncertainty = {bs_uncertainty(BsParams(args.b, args.theta)):.12g}"]
    elif args.method == "opo":
        if args.c0 is None:
            raise ConfigError("point opo requires --c0")
        pt = opo_evaluate(OpoParams(args.c0, args.seed_ratio, _regime(args.regime)))
        extra = []
    elif args.method == "opa":
        params = OpaParams(
            args.seed_ratio, max(args.tau, 1e-12), _regime(args.regime),
            args.n_steps,
        )
        pt = opa_evaluate(params, args.tau)
        extra = []
    else:
        if args.cc is None or args.dd is None:
            raise ConfigError("point om requires --cc and --dd")
        axis = SqueezedAxis(args.axis)
        pt = om_evaluate(OmParams(args.cc, args.dd, args.nbar, axis))
        extra = []
    for line in _point_lines(pt) + extra:
        print(line)
    return EXIT_OK


def _resolve_frontier_config(args: argparse.Namespace) -> dict[str, str]:
    conf: dict[str, str] = {}
    if args.config:
        conf.update(read_config_file(args.config))
    if args.method:
        conf["methods"] = args.method
    if args.thresholds:
        conf["thresholds"] = args.thresholds
    if args.bins:
        conf["bins"] = args.bins
    if args.format:
        conf["format"] = args.format
    if args.out:
        conf["out"] = args.out
    if args.seed_cap is not None:
        conf["seed_cap"] = str(args.seed_cap)
    if args.axis:
        conf["axes"] = ";".join(args.axis)
    conf.setdefault("format", "csv")
    conf.setdefault("thresholds", ",".join(str(t) for t in DEFAULT_THRESHOLDS))
    conf.setdefault("bins", "1e-6:1:200")
    return conf


def _grid_for(method: Method, conf: dict[str, str]) -> SweepGrid:
    cap = float(conf["seed_cap"]) if "seed_cap" in conf else None
    if "axes" in conf:
        axes = tuple(parse_axis(s) for s in conf["axes"].split(";") if s.strip())
        constraints = {} if cap is None else {"seed_input_cap": cap}
        return SweepGrid(method=method, axes=axes, constraints=constraints)
    return default_grid(method, seed_input_cap=cap)


def cmd_sweep(args: argparse.Namespace) -> int:
    conf = _resolve_frontier_config(args)
    if "methods" not in conf:
        raise ConfigError("sweep requires --method")
    methods = parse_methods(conf["methods"])
    if len(methods) != 1:
        raise ConfigError("sweep takes exactly one method")
    method = methods[0]
    grid = _grid_for(method, conf)
    records = sweep(grid, threads=_threads())
    echo: dict[str, object] = {
        "command": "sweep", "method": method.value, "format": conf["format"],
        "axes": ";".join(
            f"{a.name}={a.lo:g}:{a.hi:g}:{a.count}:{a.spacing.value}"
            for a in grid.axes
        ),
        "tool_version": __version__,
    }
    if grid.constraints:
        echo["seed_cap"] = grid.constraints["seed_input_cap"]
    if conf["format"] == "json":
        _write(args.out, sweep_json(method, records, echo))
    elif conf["format"] == "csv":
        _write(args.out, sweep_csv(method, grid.axes, records, echo))
    else:
        raise ConfigError(f"sweep cannot emit format {conf['format']!r}")
    return EXIT_OK


def cmd_frontier(args: argparse.Namespace) -> int:
    conf = _resolve_frontier_config(args)
    if "methods" not in conf:
        raise ConfigError("frontier requires --method or a config file with methods")
    methods = parse_methods(conf["methods"])
    thresholds = parse_thresholds(conf["thresholds"])
    bins = parse_bins(conf["bins"])
    fmt = conf["format"]
    if fmt not in ("csv", "json", "svg"):
        raise ConfigError(f"unknown format {fmt!r}")
    out_base = conf.get("out")
    if out_base is None and len(methods) > 1:
        raise ConfigError("multi-method frontier requires out to name output files")

    for method in methods:
        grid = _grid_for(method, conf)
        curves = frontier_suite(method, thresholds, grid, bins, threads=_threads())
        if all(len(c.points) == 0 for c in curves):
            print(
                f"warning: empty feasible set for {method.value} at all thresholds",
                file=sys.stderr,
            )
        echo: dict[str, object] = {
            "command": "frontier", "method": method.value,
            "thresholds": conf["thresholds"], "bins": conf["bins"], "format": fmt,
            "axes": ";".join(
                f"{a.name}={a.lo:g}:{a.hi:g}:{a.count}:{a.spacing.value}"
                for a in grid.axes
            ),
            "tool_version": __version__,
        }
        if grid.constraints:
            echo["seed_cap"] = grid.constraints["seed_input_cap"]
        if len(methods) == 1:
            path = out_base
        else:
            path = f"{out_base}_{method.value}.{fmt}"
        if fmt == "svg":
            text = frontier_svg(
                curves,
                title=f"optimal squeezing: {method.value}",
                metadata=_metadata_lines(echo),
            )
        elif fmt == "json":
            text = frontier_json(curves, echo)
        else:
            text = frontier_csv(curves, AXIS_NAMES_FOR_OUTPUT[method], echo)
        _write(path, text)
    return EXIT_OK


AXIS_NAMES_FOR_OUTPUT = {
    Method.BEAM_SPLITTER: ("b", "theta"),
    Method.OPO_PHASE: ("c0", "seed_ratio"),
    Method.OPO_AMPLITUDE: ("c0", "seed_ratio"),
    Method.OPA_PHASE: ("seed_ratio", "tau"),
    Method.OPA_AMPLITUDE: ("seed_ratio", "tau"),
    Method.OM_AMPLITUDE: ("cc", "dd", "n_bar"),
    Method.OM_PHASE: ("cc", "dd", "n_bar"),
}


def cmd_opa_trajectory(args: argparse.Namespace) -> int:
    params = OpaParams(args.seed_ratio, args.t_max, _regime(args.regime), args.n_steps)
    traj = opa_propagate(params, check_steps=args.check_steps)
    stride = max(1, (len(traj.times) - 1) // max(1, args.samples))
    lines = [
        f"# command = opa-trajectory",
        f"# regime = {args.regime}",
        f"# seed_ratio = {args.seed_ratio}",
        f"# t_max = {args.t_max}",
        f"# n_steps = {params.n_steps}",
        "t,a_s,a_p,var_x_s,var_p_s,uncertainty",
    ]
    idx = list(range(0, len(traj.times), stride))
    if idx[-1] != len(traj.times) - 1:
        idx.append(len(traj.times) - 1)
    for i in idx:
        stats = traj.seed_stats(i)
        lines.append(
            ",".join(
                [
                    _fnum(traj.times[i]),
                    _fnum(traj.a_s[i]),
                    _fnum(traj.a_p[i]),
                    _fnum(stats.var_x),
                    _fnum(stats.var_p),
                    _fnum(uncertainty(stats)),
                ]
            )
        )
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.target == "bs":
        state = vacuum(2)
        state = apply_squeeze(state, 0, args.b)
        state = apply_displacement(state, 1, args.amp)
        state = apply_beamsplitter(state, 0, 1, args.theta)
        vx, vp = mode_variances(state, 0)
        print(f"var_x = {vx:.12g}")
        print(f"var_p = {vp:.12g}")
        print(f"mean_x = {state.mean[0]:.12g}")
        print(f"mean_p = {state.mean[1]:.12g}")
    else:
        pump = 1.0 if args.regime == "phase" else -1.0
        _, a_s, a_p, err = mean_field_ode(
            args.seed_ratio, pump, args.t_max, args.n_steps or 4096
        )
        print(f"a_s_final = {a_s[-1]:.12g}")
        print(f"a_p_final = {a_p[-1]:.12g}")
        print(f"step_halving_error = {err:.3e}")
    return EXIT_OK


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqzlab",
        description="Brightness/squeezing/uncertainty trade-offs for "
        "squeezed-light sources.",
    )
    parser.add_argument("--version", action="version", version=f"sqzlab {__version__}")
    sub = parser.add_subparsers(
        dest="cmd", metavar="{point,sweep,frontier,opa-trajectory}"
    )

    p_point = sub.add_parser("point", help="evaluate one operating point")
    p_point.add_argument("method", choices=("bs", "opo", "opa", "om"))
    p_point.add_argument("--b", type=float, default=0.0)
    p_point.add_argument("--theta", type=float, default=0.0)
    p_point.add_argument("--c0", type=float, default=None)
    p_point.add_argument("--seed-ratio", dest="seed_ratio", type=float, default=0.0)
    p_point.add_argument("--regime", default="phase", choices=("phase", "amplitude"))
    p_point.add_argument("--tau", type=float, default=0.0)
    p_point.add_argument("--n-steps", dest="n_steps", type=int, default=0)
    p_point.add_argument("--cc", type=float, default=None)
    p_point.add_argument("--dd", type=float, default=None)
    p_point.add_argument("--nbar", type=float, default=0.0)
    p_point.add_argument("--axis", default="amplitude", choices=("amplitude", "phase"))
    p_point.set_defaults(fn=cmd_point)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--method", help="method name(s), comma separated")
    common.add_argument(
        "--axis", action="append",
        help="axis as name=lo:hi:count[:linear|log]; repeatable",
    )
    common.add_argument("--thresholds", help="comma-separated uncertainty ceilings")
    common.add_argument("--bins", help="alpha_sq bins as lo:hi:count (log spaced)")
    common.add_argument("--format", choices=("csv", "json", "svg"))
    common.add_argument("--out", help="output path ('-' = stdout)")
    common.add_argument("--seed-cap", dest="seed_cap", type=float, default=None)

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="evaluate a parameter grid"
    )
    p_sweep.set_defaults(fn=cmd_sweep)

    p_front = sub.add_parser(
        "frontier", parents=[common], help="optimal squeezing vs alpha_sq"
    )
    p_front.set_defaults(fn=cmd_frontier)

    p_traj = sub.add_parser(
        "opa-trajectory", parents=[], help="amplifier time series"
    )
    p_traj.add_argument("--seed-ratio", dest="seed_ratio", type=float, required=True)
    p_traj.add_argument("--regime", default="phase", choices=("phase", "amplitude"))
    p_traj.add_argument("--t-max", dest="t_max", type=float, default=6.0)
    p_traj.add_argument("--n-steps", dest="n_steps", type=int, default=0)
    p_traj.add_argument("--samples", type=int, default=200)
    p_traj.add_argument("--check-steps", dest="check_steps", action="store_true")
    p_traj.add_argument("--out", default="-")
    p_traj.set_defaults(fn=cmd_opa_trajectory)

    # undocumented debugging hook; omitted from the subcommand metavar above
    p_oracle = sub.add_parser("oracle")
    p_oracle.add_argument("target", choices=("bs", "opa"))
    p_oracle.add_argument("--b", type=float, default=0.0)
    p_oracle.add_argument("--theta", type=float, default=0.0)
    p_oracle.add_argument("--amp", type=float, default=1.0)
    p_oracle.add_argument("--seed-ratio", dest="seed_ratio", type=float, default=0.0)
    p_oracle.add_argument("--regime", default="phase", choices=("phase", "amplitude"))
    p_oracle.add_argument("--t-max", dest="t_max", type=float, default=2.0)
    p_oracle.add_argument("--n-steps", dest="n_steps", type=int, default=0)
    p_oracle.set_defaults(fn=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "fn"):
        parser.print_help()
        return EXIT_CONFIG
    try:
        return args.fn(args)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGED


if __name__ == "__main__":
    sys.exit(main())
