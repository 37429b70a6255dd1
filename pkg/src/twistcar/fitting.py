"""Dissipation-coefficient estimation against experiment-style trajectory data.

Experiments arrive as CSV pose time series (``t,x,y,theta,phi`` plus optional
body-frame velocities).  The steering signal actually tracked by the hardware
differs from the command, so its mean, amplitude, and frequency are extracted
from the signal's extrema and used as the simulation input.  A scalar search
(golden section after a bracketing pre-scan) or a coarse grid plus coordinate
descent then minimizes the model-data discrepancy.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from . import analysis
from .errors import DataFormatError, FitError
from .params import InputSignal, PhysicalParams, merge_point_mass, nondimensionalize
from .simulate import Trajectory, simulate, simulate_reduced

GOLDEN_TOL_FACTOR = 1e-3
PRESCAN_POINTS = 16
FIT_RTOL = 1e-7
FIT_ATOL = 1e-9
SKID_TRANSIENT_FOLDS = 6  # e^-6 residual transient suffices for trace fits
REQUIRED_COLUMNS = ("t", "x", "y", "theta", "phi")
OPTIONAL_COLUMNS = ("v_par", "v_perp")


@dataclass(frozen=True)
class TrackedInput:
    """Parameters of the steering signal as actually tracked."""

    Phi_Mean: float
    Phi_Amp: float
    Omega: float

    def __post_init__(self):
        if not self.Phi_Amp > 0:
            raise FitError(f"tracked amplitude must be > 0, got {self.Phi_Amp}")
        if not self.Omega > 0:
            raise FitError(f"tracked frequency must be > 0, got {self.Omega}")

    def to_signal(self) -> InputSignal:
        return InputSignal(phi0=self.Phi_Mean, eps=self.Phi_Amp, omega=self.Omega)

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.Omega


@dataclass(frozen=True)
class ExperimentRecord:
    """One ingested experiment: pose series plus derived body-frame velocities.

    ``window`` optionally bounds the steady-state portion (t_lo, t_hi); when
    absent the fits fall back to the second half of the record.
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    v_par: np.ndarray
    v_perp: np.ndarray
    label: str = ""
    window: Optional[tuple[float, float]] = None

    @property
    def sample_rate(self) -> float:
        return 1.0 / float(np.median(np.diff(self.t)))

    def effective_window(self) -> tuple[float, float]:
        if self.window is not None:
            return self.window
        return 0.5 * (float(self.t[0]) + float(self.t[-1])), float(self.t[-1])


@dataclass
class FitResult:
    """Outcome of a coefficient search."""

    coefficients: dict
    objective: float
    objective_type: str
    per_experiment: list
    search_trace: list
    boundary: bool = False
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "coefficients": self.coefficients,
            "objective": self.objective,
            "objective_type": self.objective_type,
            "per_experiment": self.per_experiment,
            "search_trace": self.search_trace,
            "boundary": self.boundary,
            "warnings": self.warnings,
        }


# ---------------------------------------------------------------------------
# experiment I/O

def ingest_csv(path, label: str = "",
               window: Optional[tuple[float, float]] = None) -> ExperimentRecord:
    """Read an experiment CSV (header ``t,x,y,theta,phi[,v_par,v_perp]``).

    Velocities, when absent, are derived by central differences of the
    positions rotated into the body frame.  Rejects non-monotone time (names
    the offending row), sampling gaps over three median intervals, and
    steering angles outside [-pi, pi].
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise DataFormatError(f"{path}: empty file") from None
        rows = [row for row in reader if row]

    if tuple(header[:5]) != REQUIRED_COLUMNS or tuple(header[5:]) not in ((), OPTIONAL_COLUMNS):
        raise DataFormatError(
            f"{path}: header must be {','.join(REQUIRED_COLUMNS)}"
            f"[,{','.join(OPTIONAL_COLUMNS)}], got {','.join(header)}"
        )
    if len(rows) < 5:
        raise DataFormatError(f"{path}: need at least 5 data rows, got {len(rows)}")

    try:
        data = np.array([[float(v) for v in row] for row in rows])
    except ValueError as exc:
        raise DataFormatError(f"{path}: non-numeric entry ({exc})") from None
    if data.shape[1] != len(header):
        raise DataFormatError(f"{path}: ragged rows")

    t = data[:, 0]
    dt = np.diff(t)
    bad = np.nonzero(dt <= 0)[0]
    if bad.size:
        raise DataFormatError(
            f"{path}: time not strictly increasing at data row {bad[0] + 2}"
        )
    median_dt = float(np.median(dt))
    gaps = np.nonzero(dt > 3.0 * median_dt)[0]
    if gaps.size:
        raise DataFormatError(
            f"{path}: sampling gap of {dt[gaps[0]]:.4g}s at data row {gaps[0] + 2} "
            f"(median interval {median_dt:.4g}s)"
        )
    phi = data[:, 4]
    if np.max(np.abs(phi)) > math.pi:
        raise DataFormatError(f"{path}: |phi| exceeds pi; expected radians")

    x, y, theta = data[:, 1], data[:, 2], data[:, 3]
    if len(header) == 7:
        v_par, v_perp = data[:, 5], data[:, 6]
    else:
        xdot = np.gradient(x, t)
        ydot = np.gradient(y, t)
        v_par = np.cos(theta) * xdot + np.sin(theta) * ydot
        v_perp = -np.sin(theta) * xdot + np.cos(theta) * ydot
    return ExperimentRecord(t=t, x=x, y=y, theta=theta, phi=phi,
                            v_par=v_par, v_perp=v_perp,
                            label=label or path.stem, window=window)


def write_experiment_csv(traj: Trajectory, path,
                         include_velocities: bool = False) -> None:
    """Export a simulated trajectory in the experiment CSV schema."""
    path = Path(path)
    header = list(REQUIRED_COLUMNS) + (list(OPTIONAL_COLUMNS) if include_velocities else [])
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i in range(len(traj.t)):
            row = [traj.t[i], traj.q[i, 0], traj.q[i, 1], traj.q[i, 2], traj.q[i, 3]]
            if include_velocities:
                row += [traj.v_par[i], traj.v_perp[i]]
            writer.writerow([f"{v:.12g}" for v in row])


# ---------------------------------------------------------------------------
# steering-signal extraction

def _moving_average(y: np.ndarray, half_window: int) -> np.ndarray:
    if half_window <= 0:
        return y.copy()
    kernel = np.ones(2 * half_window + 1)
    counts = np.convolve(np.ones_like(y), kernel, mode="same")
    return np.convolve(y, kernel, mode="same") / counts


def _refine_extremum(t: np.ndarray, y: np.ndarray, i: int) -> tuple[float, float]:
    """Parabolic refinement of an interior extremum on the raw samples."""
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0.0:
        return float(t[i]), float(y1)
    delta = float(np.clip(0.5 * (y0 - y2) / denom, -1.0, 1.0))
    dt = 0.5 * (t[i + 1] - t[i - 1])
    return float(t[i] + delta * dt), float(y1 - 0.25 * (y0 - y2) * delta)


def find_extrema(t: np.ndarray, y: np.ndarray,
                 smooth_half_window: int = 5) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Alternating extremum times, values, and kinds (+1 peak, -1 trough).

    Candidates come from the smoothed signal; times and values are then
    refined by a parabola on the raw samples, so the smoothing cannot bias
    the measured amplitude.
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    smooth = _moving_average(y, smooth_half_window)
    ds = np.diff(smooth)
    times: list[float] = []
    values: list[float] = []
    kinds: list[int] = []
    # skip the edge regions where the truncated smoothing kernel distorts ds
    margin = max(1, smooth_half_window + 1)
    for i in range(margin, len(y) - margin):
        peak = ds[i - 1] > 0 >= ds[i]
        trough = ds[i - 1] < 0 <= ds[i]
        if not (peak or trough):
            continue
        tt, vv = _refine_extremum(t, y, i)
        kind = 1 if peak else -1
        if kinds and kinds[-1] == kind:
            # repeated kind after smoothing noise: keep the more extreme one
            if kind * vv > kind * values[-1]:
                times[-1], values[-1] = tt, vv
            continue
        times.append(tt)
        values.append(vv)
        kinds.append(kind)
    return np.array(times), np.array(values), np.array(kinds, dtype=int)


def extract_input(t: np.ndarray, phi: np.ndarray,
                  smooth_half_window: int = 5) -> TrackedInput:
    """Recover the tracked steering parameters from the signal's extrema.

    Amplitude is half the mean peak-to-trough distance, the mean angle the
    mean of adjacent peak/trough midpoints, and the frequency follows from
    the mean spacing between same-kind extrema.
    """
    times, values, _ = find_extrema(t, phi, smooth_half_window)
    if len(times) < 4:
        raise FitError(
            f"steering signal is not oscillatory enough: {len(times)} extrema found, need 4"
        )
    spans = np.abs(np.diff(values))
    midpoints = 0.5 * (values[1:] + values[:-1])
    same_kind_spacing = times[2:] - times[:-2]
    return TrackedInput(
        Phi_Mean=float(np.mean(midpoints)),
        Phi_Amp=0.5 * float(np.mean(spans)),
        Omega=2.0 * math.pi / float(np.mean(same_kind_spacing)),
    )


def first_peak_time(record: ExperimentRecord, after: float,
                    smooth_half_window: int = 5) -> float:
    """Refined time of the first steering-angle peak at or after ``after``."""
    times, _, kinds = find_extrema(record.t, record.phi, smooth_half_window)
    for tt, kk in zip(times, kinds):
        if kk == 1 and tt >= after:
            return float(tt)
    raise FitError(f"no steering peak found after t = {after:.4g}")


# ---------------------------------------------------------------------------
# scalar search machinery

def golden_section(f: Callable[[float], float], lo: float, hi: float,
                   tol: float) -> tuple[float, float, list]:
    """Minimize a unimodal scalar function on [lo, hi]; returns (x, f(x), trace)."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    trace: list[tuple[float, float]] = []

    def probe(x: float) -> float:
        val = f(x)
        trace.append((x, val))
        return val

    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = probe(c), probe(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = probe(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = probe(d)
    if fc < fd:
        return c, fc, trace
    return d, fd, trace


def _scalar_search(f: Callable[[float], float], lo: float, hi: float,
                   tol_factor: float, n_prescan: int,
                   warnings: list) -> tuple[float, float, list, bool]:
    """Bracketing pre-scan followed by golden section; flags edge cases."""
    xs = np.linspace(lo, hi, n_prescan)
    vals = np.array([f(x) for x in xs])
    trace = [(float(x), float(v)) for x, v in zip(xs, vals)]
    if not np.all(np.isfinite(vals)):
        bad = xs[~np.isfinite(vals)][0]
        raise FitError(f"objective non-finite at candidate {bad:.6g}")

    spread = float(np.max(vals) - np.min(vals))
    if spread <= 1e-9 * (1.0 + abs(float(np.max(vals)))):
        warnings.append("flat objective over the search range: coefficient unidentifiable")
        mid = 0.5 * (lo + hi)
        return mid, float(f(mid)), trace, False

    n_minima = sum(1 for i in range(1, len(vals) - 1)
                   if vals[i] < vals[i - 1] and vals[i] < vals[i + 1])
    if n_minima > 1:
        warnings.append(
            f"objective shows {n_minima} local minima in the pre-scan; "
            "golden section may return a local optimum"
        )

    i_best = int(np.argmin(vals))
    boundary = i_best in (0, len(xs) - 1)
    a = float(xs[max(i_best - 1, 0)])
    b = float(xs[min(i_best + 1, len(xs) - 1)])
    x, fx, gtrace = golden_section(f, a, b, tol_factor * (hi - lo))
    trace.extend(gtrace)
    if boundary:
        side = "upper" if i_best == len(xs) - 1 else "lower"
        bound = hi if i_best == len(xs) - 1 else lo
        warnings.append(f"fit pinned at the {side} search bound {bound:.6g}")
    return x, fx, trace, boundary


# ---------------------------------------------------------------------------
# objectives

def _window_cycles(record: ExperimentRecord, omega: float) -> tuple[float, int]:
    """Window start aligned to a steering peak, and whole cycles that fit."""
    t_lo, t_hi = record.effective_window()
    start = first_peak_time(record, t_lo)
    period = 2.0 * math.pi / omega
    n_cycles = int((t_hi - start) / period)
    if n_cycles < 2:
        raise FitError(
            f"{record.label}: steady-state window holds {n_cycles} whole cycles, need >= 2"
        )
    return start, n_cycles


def _data_displacement_per_cycle(record: ExperimentRecord,
                                 tracked: TrackedInput) -> tuple[float, int]:
    start, n_cycles = _window_cycles(record, tracked.Omega)
    t_end = start + n_cycles * tracked.period
    x0 = np.interp(start, record.t, record.x)
    y0 = np.interp(start, record.t, record.y)
    x1 = np.interp(t_end, record.t, record.x)
    y1 = np.interp(t_end, record.t, record.y)
    return math.hypot(x1 - x0, y1 - y0) / n_cycles, n_cycles


def _reduced_steady_run(p: PhysicalParams, tracked: TrackedInput,
                        extra_periods: float, rtol: float,
                        samples_per_period: int = 64):
    """Reduced simulation reaching steady state.

    Returns the trajectory, the dimensionless groups, and the first
    steering-peak time past the transient (dimensionless).
    """
    nd, u_nd = nondimensionalize(p, tracked.to_signal())
    period_nd = u_nd.period
    t_ss = analysis.steady_state_start(nd, dimensional=False)
    base = math.ceil(t_ss / period_nd) * period_nd  # a steering peak past the transient
    red = simulate_reduced(nd, u_nd, t_end=base + extra_periods * period_nd,
                           dt_out=period_nd / samples_per_period,
                           rtol=rtol, atol=FIT_ATOL)
    return red, nd, base


@lru_cache(maxsize=8192)
def _model_displacement_per_cycle(p: PhysicalParams, tracked: TrackedInput,
                                  n_cycles: int, rtol: float) -> float:
    # cached: repeated candidates across searches (e.g. pre-scan grids) are
    # common, and all arguments are immutable values
    red, nd, base = _reduced_steady_run(p, tracked, n_cycles, rtol)
    x0 = np.interp(base, red.t, red.x)
    y0 = np.interp(base, red.t, red.y)
    return math.hypot(red.x[-1] - x0, red.y[-1] - y0) * p.l1 / n_cycles


def _model_vpar_at(p: PhysicalParams, tracked: TrackedInput, rel_times: np.ndarray,
                   rtol: float) -> np.ndarray:
    """Model forward speed at times measured from a steering peak (seconds)."""
    red, nd, base = _reduced_steady_run(
        p, tracked, float(np.max(rel_times)) / (tracked.period) + 0.5, rtol,
        samples_per_period=128)
    eval_nd = base + rel_times / nd.t_c
    return np.interp(eval_nd, red.t, red.v) * p.l1 / nd.t_c


def _prepare(p_template: PhysicalParams) -> PhysicalParams:
    return merge_point_mass(p_template) if p_template.m0 != 0.0 else p_template


def fit_dissipation(experiments: Sequence[ExperimentRecord],
                    p_template: PhysicalParams,
                    bounds: tuple[float, float],
                    objective: str = "displacement",
                    tol_factor: float = GOLDEN_TOL_FACTOR,
                    n_prescan: int = PRESCAN_POINTS,
                    sim_rtol: float = FIT_RTOL) -> FitResult:
    """Estimate the rolling-dissipation coefficient from experiments.

    For each candidate the constrained model (in its reduced formulation) is
    simulated under every experiment's tracked steering signal.  The
    objective sums squared differences of displacement per cycle
    ("displacement") or of the forward-speed traces resampled at the data's
    steady-state sample times ("v_par").
    """
    if not experiments:
        raise FitError("no experiments given")
    lo, hi = bounds
    if not 0.0 < lo < hi:
        raise FitError(f"bounds must satisfy 0 < lo < hi, got ({lo}, {hi})")
    if objective not in ("displacement", "v_par"):
        raise FitError(f"unknown objective {objective!r}")

    base = _prepare(p_template)
    tracked = [extract_input(e.t, e.phi) for e in experiments]

    if objective == "displacement":
        data_vals = []
        cycles = []
        for e, tr in zip(experiments, tracked):
            disp, n_cycles = _data_displacement_per_cycle(e, tr)
            data_vals.append(disp)
            cycles.append(n_cycles)

        def residuals(c: float) -> list[float]:
            p = replace(base, c=c)
            return [
                _model_displacement_per_cycle(p, tr, k, sim_rtol) - dv
                for tr, k, dv in zip(tracked, cycles, data_vals)
            ]

        def objective_fn(c: float) -> float:
            return float(sum(r * r for r in residuals(c)))
    else:
        windows = []
        for e, tr in zip(experiments, tracked):
            start, n_cycles = _window_cycles(e, tr.Omega)
            mask = (e.t >= start) & (e.t <= start + n_cycles * tr.period)
            windows.append((e.t[mask] - start, e.v_par[mask]))

        def residuals(c: float) -> list[float]:
            p = replace(base, c=c)
            out = []
            for tr, (rel_t, v_data) in zip(tracked, windows):
                v_model = _model_vpar_at(p, tr, rel_t, sim_rtol)
                out.append(float(np.sum((v_model - v_data) ** 2)))
            return out

        def objective_fn(c: float) -> float:
            return float(sum(residuals(c)))

    warnings: list = []
    c_best, f_best, trace, boundary = _scalar_search(
        objective_fn, lo, hi, tol_factor, n_prescan, warnings)

    per_experiment = [
        {"label": e.label or f"experiment_{i}",
         "tracked_input": {"Phi_Mean": tr.Phi_Mean, "Phi_Amp": tr.Phi_Amp,
                           "Omega": tr.Omega},
         "residual": float(r)}
        for i, (e, tr, r) in enumerate(zip(experiments, tracked, residuals(c_best)))
    ]
    return FitResult(coefficients={"c": float(c_best)}, objective=float(f_best),
                     objective_type=objective, per_experiment=per_experiment,
                     search_trace=trace, boundary=boundary, warnings=warnings)


def fit_skid(experiments: Sequence[ExperimentRecord],
             p_template: PhysicalParams,
             bounds_c: tuple[float, float],
             bounds_cperp: tuple[float, float],
             weights: tuple[float, float] = (1.0, 10.0),
             grid_points: int = 5,
             rounds: int = 4,
             tol_factor: float = 1e-2,
             sim_rtol: float = 1e-6) -> FitResult:
    """Estimate (c, c_perp) for the skid model from velocity traces.

    A coarse log-spaced grid locates the basin; a log-space simplex descent
    refines it (the two coefficients form a narrow diagonal valley on which
    axis-aligned moves stall).  The objective is the weighted sum of squared
    differences of the forward and lateral speed traces (lateral weighted
    higher by default, being an order of magnitude smaller).
    """
    if not experiments:
        raise FitError("no experiments given")
    for (lo, hi), name in ((bounds_c, "c"), (bounds_cperp, "c_perp")):
        if not 0.0 < lo < hi:
            raise FitError(f"{name} bounds must satisfy 0 < lo < hi, got ({lo}, {hi})")

    base = _prepare(p_template)
    tracked = [extract_input(e.t, e.phi) for e in experiments]
    w_par, w_perp = weights

    windows = []
    for e, tr in zip(experiments, tracked):
        start, n_cycles = _window_cycles(e, tr.Omega)
        mask = (e.t >= start) & (e.t <= start + n_cycles * tr.period)
        windows.append((e.t[mask] - start, e.v_par[mask], e.v_perp[mask]))

    def objective_fn(c: float, c_perp: float) -> float:
        p = replace(base, c=c, c_perp=c_perp)
        total = 0.0
        for tr, (rel_t, vpar_d, vperp_d) in zip(tracked, windows):
            period = tr.period
            nd, _ = nondimensionalize(p, tr.to_signal())
            t_ss = analysis.steady_state_start(nd, n_constants=SKID_TRANSIENT_FOLDS)
            model_base = math.ceil(t_ss / period) * period  # a steering peak
            t_end = model_base + float(np.max(rel_t)) + period / 16
            traj = simulate(p, tr.to_signal(), t_end=t_end, model="skid",
                            dt_out=period / 64, rtol=sim_rtol, atol=FIT_ATOL)
            vpar_m = np.interp(model_base + rel_t, traj.t, traj.v_par)
            vperp_m = np.interp(model_base + rel_t, traj.t, traj.v_perp)
            total += w_par * float(np.sum((vpar_m - vpar_d) ** 2))
            total += w_perp * float(np.sum((vperp_m - vperp_d) ** 2))
        if not math.isfinite(total):
            raise FitError(f"objective non-finite at candidates ({c:.6g}, {c_perp:.6g})")
        return total

    warnings: list = []
    trace: list = []

    def probe(c: float, cp: float) -> float:
        val = objective_fn(c, cp)
        trace.append((c, cp, val))
        return val

    cs = np.geomspace(bounds_c[0], bounds_c[1], grid_points)
    cps = np.geomspace(bounds_cperp[0], bounds_cperp[1], grid_points)
    grid_vals = np.empty((grid_points, grid_points))
    for i, c in enumerate(cs):
        for j, cp in enumerate(cps):
            grid_vals[i, j] = probe(float(c), float(cp))
    i0, j0 = np.unravel_index(int(np.argmin(grid_vals)), grid_vals.shape)
    c_best, cp_best = float(cs[i0]), float(cps[j0])
    f_best = float(grid_vals[i0, j0])

    lateral_row = grid_vals[i0, :]
    lateral_variation = float(np.max(lateral_row) - np.min(lateral_row)) / max(
        float(np.max(lateral_row)), 1e-300)
    cperp_identifiable = w_perp > 0.0 and lateral_variation > 1e-3
    if not cperp_identifiable:
        warnings.append(
            "objective is (near-)flat along c_perp: lateral coefficient "
            "unidentifiable (zero lateral weight or missing lateral data)"
        )

    if cperp_identifiable:
        # The two coefficients shape the traces in a strongly correlated way
        # (a narrow diagonal valley in log space); axis-aligned coordinate
        # descent stalls there, so the refinement is a log-space simplex
        # descent seeded at the best grid cell.
        log_bounds = (np.log([bounds_c[0], bounds_cperp[0]]),
                      np.log([bounds_c[1], bounds_cperp[1]]))

        def eval_log(z):
            z = np.minimum(np.maximum(z, log_bounds[0]), log_bounds[1])
            return probe(float(np.exp(z[0])), float(np.exp(z[1]))), z

        step_c = math.log(cs[1] / cs[0])
        step_p = math.log(cps[1] / cps[0])
        z0 = np.log([c_best, cp_best])
        simplex = [z0, z0 + [step_c, 0.0], z0 + [0.0, step_p]]
        values = []
        points = []
        for z in simplex:
            val, zc = eval_log(z)
            values.append(val)
            points.append(zc)
        max_iter = 30 * max(1, rounds // 2)
        for _ in range(max_iter):
            order = np.argsort(values)
            points = [points[i] for i in order]
            values = [values[i] for i in order]
            spread = max(np.max(np.abs(points[2] - points[0])),
                         np.max(np.abs(points[1] - points[0])))
            if spread < 0.01:  # within ~1% on both coefficients
                break
            centroid = 0.5 * (points[0] + points[1])
            reflected = centroid + (centroid - points[2])
            f_r, z_r = eval_log(reflected)
            if f_r < values[0]:
                f_e, z_e = eval_log(centroid + 2.0 * (centroid - points[2]))
                points[2], values[2] = (z_e, f_e) if f_e < f_r else (z_r, f_r)
            elif f_r < values[1]:
                points[2], values[2] = z_r, f_r
            else:
                f_k, z_k = eval_log(centroid + 0.5 * (points[2] - centroid))
                if f_k < values[2]:
                    points[2], values[2] = z_k, f_k
                else:  # shrink toward the best vertex
                    for k in (1, 2):
                        f_s, z_s = eval_log(points[0] + 0.5 * (points[k] - points[0]))
                        points[k], values[k] = z_s, f_s
        best = int(np.argmin(values))
        c_best, cp_best = (float(v) for v in np.exp(points[best]))
        f_best = values[best]
    else:
        # lateral axis held fixed; refine the roll coefficient alone
        c_best, f_best, tr1 = golden_section(
            lambda c: probe(c, cp_best), bounds_c[0], bounds_c[1],
            tol_factor * (bounds_c[1] - bounds_c[0]))

    rel = 1e-6
    boundary = (c_best <= bounds_c[0] * (1 + rel) or c_best >= bounds_c[1] * (1 - rel)
                or cp_best <= bounds_cperp[0] * (1 + rel)
                or cp_best >= bounds_cperp[1] * (1 - rel))
    if boundary:
        warnings.append("fit pinned at a search bound")

    per_experiment = [
        {"label": e.label or f"experiment_{i}",
         "tracked_input": {"Phi_Mean": tr.Phi_Mean, "Phi_Amp": tr.Phi_Amp,
                           "Omega": tr.Omega},
         "residual": None}
        for i, (e, tr) in enumerate(zip(experiments, tracked))
    ]
    return FitResult(coefficients={"c": c_best, "c_perp": cp_best},
                     objective=f_best, objective_type="weighted_velocity_traces",
                     per_experiment=per_experiment, search_trace=trace,
                     boundary=boundary, warnings=warnings)
