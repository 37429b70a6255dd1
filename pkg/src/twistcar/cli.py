"""Command-line interface.

Subcommands: ``simulate``, ``compare``, ``sweep``, ``fit``, ``reversal``,
``extract-input``.  Config files are JSON with angles in degrees; every CSV
the CLI writes is radians and SI.  Exit codes: 0 success, 2 validation
error, 3 numerical failure.  A manifest JSON is written next to the outputs
even when a command fails, so long runs are diagnosable and resumable.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__, analysis, asymptotics, dynamics, fitting
from .errors import (
    BoundaryError,
    DataFormatError,
    FitError,
    IntegrationError,
    ParameterError,
    SteeringSingularityError,
)
from .params import InputSignal, PhysicalParams, merge_point_mass, nondimensionalize
from .simulate import simulate

TRAJECTORY_COLUMNS = ("t,x,y,theta,phi,xdot,ydot,thetadot,phidot,v_par,v_perp,"
                      "tau,lambda1,lambda2,T,R_power,theta_centered")
VALIDATION_EXIT = 2
NUMERICAL_EXIT = 3

_PHYSICAL_FIELDS = {
    "m1": "m1", "m2": "m2", "l1": "l1", "l2": "l2", "b1": "b1", "b2": "b2",
    "J1": "J1", "J2": "J2", "d": "d", "c": "c", "m0": "m0", "b0": "b0",
    "c_perp": "c_perp", "g": "g",
}


class ConfigError(ValueError):
    """Config validation failure carrying the offending field path."""


@dataclass(frozen=True)
class SimSettings:
    t_end: float
    dt_out: Optional[float]
    rtol: float
    atol: float


@dataclass(frozen=True)
class RunConfig:
    physical: PhysicalParams
    input: InputSignal
    sim: SimSettings
    model: str
    raw: dict


def _require(mapping: dict, key: str, path: str) -> object:
    if key not in mapping:
        raise ConfigError(f"{path}.{key}: required field missing")
    return mapping[key]


def _number(mapping: dict, key: str, path: str, default=None) -> float:
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{path}.{key}: required field missing")
        return default
    value = mapping[key]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"{path}.{key}: expected a number, got {value!r}")
    return float(value)


def parse_config(raw: dict) -> RunConfig:
    """Validate a config dict and build the parameter objects.

    Raises ``ConfigError`` naming the offending field path.
    """
    if not isinstance(raw, dict):
        raise ConfigError("config: expected a JSON object")
    phys_raw = _require(raw, "physical", "config")
    input_raw = _require(raw, "input", "config")
    sim_raw = _require(raw, "sim", "config")
    model = raw.get("model", "constrained")
    if model not in ("constrained", "skid", "slope"):
        raise ConfigError(f"config.model: must be constrained|skid|slope, got {model!r}")

    kwargs = {}
    for key, field in _PHYSICAL_FIELDS.items():
        if key in ("m0", "b0", "c_perp", "g"):
            if key in phys_raw:
                kwargs[field] = _number(phys_raw, key, "physical")
        else:
            kwargs[field] = _number(phys_raw, key, "physical")
    slope_deg = _number(phys_raw, "slope_deg", "physical", default=0.0)
    kwargs["slope"] = math.radians(slope_deg)
    unknown = set(phys_raw) - set(_PHYSICAL_FIELDS) - {"slope_deg"}
    if unknown:
        raise ConfigError(f"physical.{sorted(unknown)[0]}: unknown field")
    try:
        physical = PhysicalParams(**kwargs)
    except ParameterError as exc:
        raise ConfigError(f"physical: {exc}") from None

    try:
        signal = InputSignal(
            phi0=math.radians(_number(input_raw, "phi0_deg", "input")),
            eps=math.radians(_number(input_raw, "eps_deg", "input")),
            omega=_number(input_raw, "omega_rad_s", "input"),
        )
    except ParameterError as exc:
        raise ConfigError(f"input: {exc}") from None

    sim = SimSettings(
        t_end=_number(sim_raw, "t_end_s", "sim"),
        dt_out=(_number(sim_raw, "dt_out_s", "sim")
                if "dt_out_s" in sim_raw else None),
        rtol=_number(sim_raw, "rtol", "sim", default=1e-9),
        atol=_number(sim_raw, "atol", "sim", default=1e-11),
    )
    if sim.t_end <= 0:
        raise ConfigError(f"sim.t_end_s: must be > 0, got {sim.t_end}")
    if model == "skid" and physical.c_perp is None:
        raise ConfigError("physical.c_perp: required for the skid model")
    return RunConfig(physical=physical, input=signal, sim=sim, model=model, raw=raw)


def load_config(path) -> RunConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"config: file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: invalid JSON ({exc})") from None
    return parse_config(raw)


# ---------------------------------------------------------------------------
# manifest helpers

def _write_manifest(out_dir: Path, command: str, config_raw: Optional[dict],
                    outputs: list, started: float, extra: Optional[dict] = None,
                    error: Optional[str] = None) -> None:
    manifest = {
        "command": command,
        "config": config_raw,
        "outputs": [str(p) for p in outputs],
        "versions": {
            "twistcar": __version__,
            "numpy": np.__version__,
            "python": platform.python_version(),
        },
        "wall_clock_s": time.monotonic() - started,
    }
    if extra:
        manifest.update(extra)
    if error is not None:
        manifest["error"] = error
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


def _stats_dict(stats) -> dict:
    return {"n_accepted": stats.n_accepted, "n_rejected": stats.n_rejected,
            "n_rhs": stats.n_rhs}


# ---------------------------------------------------------------------------
# simulate

def _theta_bar(traj, cfg: RunConfig) -> float:
    if cfg.physical.c > 0:
        nd, _ = nondimensionalize(merge_point_mass(cfg.physical), cfg.input)
        try:
            t_start = analysis.steady_state_window(traj, nd)
            return analysis.mean_orientation(traj, t_start, cfg.input.period)
        except ParameterError:
            pass
    return float(np.mean(traj.q[:, 2]))


def write_trajectory_csv(traj, path: Path, theta_bar: float,
                         energy_report) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRAJECTORY_COLUMNS.split(","))
        lam = traj.lam
        for i in range(len(traj.t)):
            row = [traj.t[i], traj.q[i, 0], traj.q[i, 1], traj.q[i, 2],
                   traj.q[i, 3], traj.qdot[i, 0], traj.qdot[i, 1],
                   traj.qdot[i, 2], traj.qdot[i, 3], traj.v_par[i],
                   traj.v_perp[i], traj.tau[i]]
            row += ([lam[i, 0], lam[i, 1]] if lam is not None else ["", ""])
            row += [energy_report.kinetic[i], energy_report.dissipation_power[i],
                    traj.q[i, 2] - theta_bar]
            writer.writerow([f"{v:.12g}" if v != "" else "" for v in row])


def _envelope_growing(traj) -> bool:
    """True when the per-cycle speed envelope keeps growing to the end."""
    spp = max(1, round(traj.input.period / traj.dt_out))
    n_cycles = (len(traj.t) - 1) // spp
    if n_cycles < 4:
        return False
    maxima = [float(np.max(np.abs(traj.qdot[i * spp:(i + 1) * spp, 0])))
              for i in range(n_cycles)]
    third = max(1, n_cycles // 3)
    early = max(maxima[third:2 * third])
    late = max(maxima[-third:])
    return late > 1.1 * early


def cmd_simulate(args) -> int:
    out_dir = Path(args.out)
    started = time.monotonic()
    cfg = None
    try:
        cfg = load_config(args.config)
        cfg = _apply_overrides(cfg, args)
        traj = simulate(cfg.physical, cfg.input, t_end=cfg.sim.t_end,
                        model=cfg.model, dt_out=cfg.sim.dt_out,
                        rtol=cfg.sim.rtol, atol=cfg.sim.atol)
        theta_bar = _theta_bar(traj, cfg)
        report = dynamics.energy_report(traj, cfg.physical)
        csv_path = out_dir / "trajectory.csv"
        out_dir.mkdir(parents=True, exist_ok=True)
        write_trajectory_csv(traj, csv_path, theta_bar, report)
        extra = {
            "theta_bar_rad": theta_bar,
            "params_hash": traj.params_hash,
            "integrator_stats": _stats_dict(traj.stats),
            "unbounded_envelope": _envelope_growing(traj),
        }
        _write_manifest(out_dir, "simulate", cfg.raw, [csv_path], started, extra)
        return 0
    except Exception as exc:
        _write_manifest(out_dir, "simulate", cfg.raw if cfg else None, [],
                        started, error=str(exc))
        raise


# ---------------------------------------------------------------------------
# compare

def cmd_compare(args) -> int:
    out_dir = Path(args.out)
    started = time.monotonic()
    cfg = None
    try:
        cfg = load_config(args.config)
        cfg = _apply_overrides(cfg, args)
        if cfg.model == "skid":
            raise ConfigError("config.model: compare requires the constrained model")
        if cfg.physical.slope != 0.0:
            raise ConfigError("physical.slope_deg: compare requires a level plane")
        merged = merge_point_mass(cfg.physical)
        nd, u_nd = nondimensionalize(merged, cfg.input)
        cf = asymptotics.coefficients(nd, nd.omega_nd)

        traj = simulate(merged, cfg.input, t_end=cfg.sim.t_end,
                        dt_out=cfg.sim.dt_out, rtol=cfg.sim.rtol,
                        atol=cfg.sim.atol)
        t_nd = traj.t / nd.t_c
        v_num = traj.v_par * nd.t_c / merged.l1
        v_asy = asymptotics.v_asymptotic(t_nd, cfg.input.eps, cfg.input.phi0,
                                         cf, nd.kappa)
        th_num = traj.q[:, 2]
        th_asy = asymptotics.theta_asymptotic(t_nd, cfg.input.eps, nd, nd.omega_nd)

        err_v = np.abs(v_num - v_asy)
        err_th = np.abs(th_num - th_asy)
        t_ss_nd = analysis.steady_state_start(nd, dimensional=False)
        ss = t_nd >= t_ss_nd
        eps4 = cfg.input.eps ** 4
        summary = {
            "eps_rad": cfg.input.eps,
            "phi0_rad": cfg.input.phi0,
            "omega_nd": nd.omega_nd,
            "max_abs_error_v": float(np.max(err_v)),
            "mean_abs_error_v": float(np.mean(err_v)),
            "error_over_eps4": float(np.max(err_v) / eps4) if eps4 > 0 else 0.0,
            "steady_state_max_abs_error_v": float(np.max(err_v[ss])) if ss.any() else None,
            "max_abs_error_theta": float(np.max(err_th)),
        }
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = out_dir / "compare.csv"
        with csv_path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t_nd", "v_num", "v_asym", "theta_num", "theta_asym"])
            for i in range(len(t_nd)):
                writer.writerow([f"{v:.12g}" for v in
                                 (t_nd[i], v_num[i], v_asy[i], th_num[i], th_asy[i])])
        summary_path = out_dir / "compare_summary.json"
        summary_path.write_text(json.dumps(summary, indent=2) + "\n")
        _write_manifest(out_dir, "compare", cfg.raw, [csv_path, summary_path],
                        started, {"integrator_stats": _stats_dict(traj.stats)})
        return 0
    except Exception as exc:
        _write_manifest(out_dir, "compare", cfg.raw if cfg else None, [],
                        started, error=str(exc))
        raise


# ---------------------------------------------------------------------------
# sweep

def _set_config_path(raw: dict, dotted: str, value: float) -> dict:
    parts = dotted.split(".")
    node = raw
    for part in parts[:-1]:
        if part not in node or not isinstance(node[part], dict):
            raise ConfigError(f"{dotted}: no such config section {part!r}")
        node = node[part]
    if parts[-1] not in node and parts[-1] not in ("m0", "b0", "c_perp",
                                                   "slope_deg", "dt_out_s",
                                                   "rtol", "atol", "g"):
        raise ConfigError(f"{dotted}: no such config field")
    node[parts[-1]] = value
    return raw


def _param_column(dotted: str) -> tuple[str, bool]:
    """Output column name and whether the value needs degree->radian conversion."""
    leaf = dotted.split(".")[-1]
    if leaf.endswith("_deg"):
        return dotted[: -len("_deg")], True
    return dotted, False


def sweep_point(raw_config: dict, updates: list) -> dict:
    """Simulate one sweep grid point; returns the row dict (or error text)."""
    raw = json.loads(json.dumps(raw_config))
    for dotted, value in updates:
        _set_config_path(raw, dotted, value)
    cfg = parse_config(raw)
    merged = merge_point_mass(cfg.physical)
    nd, u_nd = nondimensionalize(merged, cfg.input)
    cf = asymptotics.coefficients(nd, nd.omega_nd)
    period = cfg.input.period
    t_start = analysis.steady_state_start(nd)
    t_end = math.ceil(t_start / period) * period + 8.0 * period
    traj = simulate(merged, cfg.input, t_end=t_end, model=cfg.model,
                    dt_out=period / 200, rtol=cfg.sim.rtol, atol=cfg.sim.atol)
    mean_speed, disp = analysis.cycle_average(traj, t_start, period)
    try:
        curv = analysis.path_curvature(traj, t_start, period)
    except BoundaryError:
        curv = math.nan
    try:
        xi = asymptotics.reversal_indicator(nd)
    except ParameterError:
        xi = math.nan
    curv_asym = math.nan
    if abs(cf.b1) > asymptotics.BOUNDARY_TOL:
        curv_asym = (cf.d1 / cf.b1) * cfg.input.phi0 / merged.l1
    return {
        "mean_speed": mean_speed,
        "displacement_per_cycle": disp,
        "direction_sign": int(np.sign(mean_speed)),
        "xi": xi,
        "b1": cf.b1,
        "curvature": curv,
        "curvature_asym": curv_asym,
        "t_end_s": t_end,
        "error": "",
    }


def _sweep_worker(payload):
    raw_config, updates = payload
    try:
        return sweep_point(raw_config, updates)
    except Exception as exc:  # failed points are recorded, the sweep continues
        return {"error": f"{type(exc).__name__}: {exc}"}


def cmd_sweep(args) -> int:
    out_dir = Path(args.out)
    started = time.monotonic()
    cfg = None
    try:
        cfg = load_config(args.config)
        cfg = _apply_overrides(cfg, args)
        params = [(args.param, [float(v) for v in args.values])]
        if args.param2:
            if not args.values2:
                raise ConfigError("sweep: --param2 given without --values2")
            params.append((args.param2, [float(v) for v in args.values2]))

        grid: list[list] = [[]]
        for dotted, values in params:
            grid = [g + [(dotted, v)] for g in grid for v in values]

        payloads = [(cfg.raw, updates) for updates in grid]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                rows = list(pool.map(_sweep_worker, payloads))
        else:
            rows = [_sweep_worker(p) for p in payloads]

        columns = []
        for dotted, _ in params:
            name, _is_deg = _param_column(dotted)
            columns.append(name)
        metric_cols = ["mean_speed", "displacement_per_cycle", "direction_sign",
                       "xi", "b1", "curvature", "curvature_asym", "error"]
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = out_dir / "sweep.csv"
        n_failed = 0
        with csv_path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(columns + metric_cols)
            for updates, row in zip(grid, rows):
                cells = []
                for (dotted, value) in updates:
                    _, is_deg = _param_column(dotted)
                    cells.append(f"{math.radians(value) if is_deg else value:.12g}")
                if row.get("error"):
                    n_failed += 1
                    cells += [""] * (len(metric_cols) - 1) + [row["error"]]
                else:
                    for col in metric_cols[:-1]:
                        value = row[col]
                        cells.append("" if isinstance(value, float) and math.isnan(value)
                                     else f"{value:.12g}")
                    cells.append("")
                writer.writerow(cells)
        _write_manifest(out_dir, "sweep", cfg.raw, [csv_path], started,
                        {"n_points": len(grid), "n_failed": n_failed})
        return 0
    except Exception as exc:
        _write_manifest(out_dir, "sweep", cfg.raw if cfg else None, [],
                        started, error=str(exc))
        raise


# ---------------------------------------------------------------------------
# fit

def cmd_fit(args) -> int:
    out_dir = Path(args.out)
    started = time.monotonic()
    cfg = None
    try:
        cfg = load_config(args.config)
        window = tuple(args.window) if args.window else None
        experiments = [fitting.ingest_csv(path, window=window)
                       for path in args.experiments]
        if args.mode == "constrained":
            result = fitting.fit_dissipation(
                experiments, cfg.physical, bounds=tuple(args.c_bounds),
                objective=args.objective)
        else:
            if not args.cperp_bounds:
                raise ConfigError("fit: --cperp-bounds is required for skid mode")
            result = fitting.fit_skid(
                experiments, cfg.physical, bounds_c=tuple(args.c_bounds),
                bounds_cperp=tuple(args.cperp_bounds))
        out_dir.mkdir(parents=True, exist_ok=True)
        fit_path = out_dir / "fit.json"
        fit_path.write_text(json.dumps(result.to_dict(), indent=2) + "\n")
        _write_manifest(out_dir, "fit", cfg.raw, [fit_path], started,
                        {"mode": args.mode, "n_experiments": len(experiments)})
        return 0
    except Exception as exc:
        _write_manifest(out_dir, "fit", cfg.raw if cfg else None, [],
                        started, error=str(exc))
        raise


# ---------------------------------------------------------------------------
# reversal

def cmd_reversal(args) -> int:
    out_dir = Path(args.out)
    started = time.monotonic()
    cfg = None
    try:
        cfg = load_config(args.config)
        cfg = _apply_overrides(cfg, args)
        merged = merge_point_mass(cfg.physical)
        nd, _ = nondimensionalize(merged, cfg.input)
        cf = asymptotics.coefficients(nd, nd.omega_nd)
        try:
            xi = asymptotics.reversal_indicator(nd)
        except ParameterError:
            xi = None

        period = cfg.input.period
        t_start = analysis.steady_state_start(nd)
        t_end = math.ceil(t_start / period) * period + 6.0 * period
        traj = simulate(merged, cfg.input, t_end=t_end, dt_out=period / 200,
                        rtol=cfg.sim.rtol, atol=cfg.sim.atol)
        mean_speed, _ = analysis.cycle_average(traj, t_start, period)

        predicted = int(np.sign(cf.b1))
        simulated = int(np.sign(mean_speed))
        payload = {
            "xi": xi,
            "b1": cf.b1,
            "mean_speed_m_s": mean_speed,
            "predicted_direction": predicted,
            "simulated_direction": simulated,
            "agreement": bool(predicted == simulated),
        }
        out_dir.mkdir(parents=True, exist_ok=True)
        json_path = out_dir / "reversal.json"
        json_path.write_text(json.dumps(payload, indent=2) + "\n")
        _write_manifest(out_dir, "reversal", cfg.raw, [json_path], started)
        return 0
    except Exception as exc:
        _write_manifest(out_dir, "reversal", cfg.raw if cfg else None, [],
                        started, error=str(exc))
        raise


# ---------------------------------------------------------------------------
# extract-input

def cmd_extract_input(args) -> int:
    record = fitting.ingest_csv(args.csv)
    tracked = fitting.extract_input(record.t, record.phi)
    payload = {
        "Phi_Mean_rad": tracked.Phi_Mean,
        "Phi_Amp_rad": tracked.Phi_Amp,
        "Omega_rad_s": tracked.Omega,
        "Phi_Mean_deg": math.degrees(tracked.Phi_Mean),
        "Phi_Amp_deg": math.degrees(tracked.Phi_Amp),
    }
    text = json.dumps(payload, indent=2)
    print(text)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "tracked_input.json").write_text(text + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing

def _apply_overrides(cfg: RunConfig, args) -> RunConfig:
    model = getattr(args, "model", None) or cfg.model
    if model == "skid" and cfg.physical.c_perp is None:
        raise ConfigError("physical.c_perp: required for the skid model")
    sim = cfg.sim
    if getattr(args, "rtol", None) is not None:
        sim = replace(sim, rtol=args.rtol)
    if getattr(args, "atol", None) is not None:
        sim = replace(sim, atol=args.atol)
    return RunConfig(physical=cfg.physical, input=cfg.input, sim=sim,
                     model=model, raw=cfg.raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistcar",
        description="Two-link vehicle with rolling dissipation: simulation, "
                    "closed-form approximations, and coefficient fitting.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_out=True):
        p.add_argument("--config", required=True, help="JSON config path")
        if needs_out:
            p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--model", choices=["constrained", "skid", "slope"],
                       help="override the config's model")
        p.add_argument("--rtol", type=float, help="integrator relative tolerance")
        p.add_argument("--atol", type=float, help="integrator absolute tolerance")

    p_sim = sub.add_parser("simulate", help="integrate one trajectory to CSV")
    common(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_cmp = sub.add_parser("compare",
                           help="numeric vs closed-form speed and orientation")
    common(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_swp = sub.add_parser("sweep", help="table of metrics over a parameter grid")
    common(p_swp)
    p_swp.add_argument("--param", required=True,
                       help="dotted config path, e.g. input.eps_deg")
    p_swp.add_argument("--values", required=True, nargs="+",
                       help="grid values for --param")
    p_swp.add_argument("--param2", help="optional second swept parameter")
    p_swp.add_argument("--values2", nargs="+", help="grid values for --param2")
    p_swp.add_argument("--jobs", type=int, default=1,
                       help="parallel workers over grid points")
    p_swp.set_defaults(func=cmd_sweep)

    p_fit = sub.add_parser("fit", help="estimate dissipation coefficients")
    common(p_fit)
    p_fit.add_argument("--experiments", required=True, nargs="+",
                       help="experiment CSV files")
    p_fit.add_argument("--mode", choices=["constrained", "skid"],
                       default="constrained")
    p_fit.add_argument("--objective", choices=["displacement", "v_par"],
                       default="displacement")
    p_fit.add_argument("--c-bounds", type=float, nargs=2, required=True,
                       metavar=("LO", "HI"))
    p_fit.add_argument("--cperp-bounds", type=float, nargs=2,
                       metavar=("LO", "HI"))
    p_fit.add_argument("--window", type=float, nargs=2, metavar=("T_LO", "T_HI"),
                       help="steady-state window applied to every experiment")
    p_fit.set_defaults(func=cmd_fit)

    p_rev = sub.add_parser("reversal",
                           help="closed-form direction prediction vs simulation")
    common(p_rev)
    p_rev.set_defaults(func=cmd_reversal)

    p_ext = sub.add_parser("extract-input",
                           help="tracked steering parameters from an experiment CSV")
    p_ext.add_argument("--csv", required=True, help="experiment CSV path")
    p_ext.add_argument("--out", help="optional output directory")
    p_ext.set_defaults(func=cmd_extract_input)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParameterError, DataFormatError, FitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except (IntegrationError, SteeringSingularityError, BoundaryError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_EXIT


if __name__ == "__main__":
    sys.exit(main())
