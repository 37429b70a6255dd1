"""Post-processing of trajectories: steady-state windows, cycle averages,
path curvature, amplitude-scaling fits, and spectra.

Averages are taken over whole input periods starting after the transient has
decayed, which removes phase bias; on the uniform output grid (an integer
number of samples per period) the trapezoidal mean of a periodic signal is
spectrally accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BoundaryError, ParameterError
from .params import NondimParams

TRANSIENT_FOLDS = 10  # default number of decay constants to wait out


@dataclass(frozen=True)
class SteadyStateMetrics:
    """Cycle-averaged description of the steady-state motion."""

    t_start: float
    mean_speed: float
    displacement_per_cycle: float
    theta_bar: float
    curvature: float
    dominant_frequency: float


@dataclass(frozen=True)
class SpectrumPeak:
    """Dominant nonzero-frequency component of a sampled window."""

    frequency: float   # rad/s (or rad per unit dimensionless time)
    amplitude: float
    frequencies: np.ndarray
    amplitudes: np.ndarray


def steady_state_start(nd: NondimParams, n_constants: float = TRANSIENT_FOLDS,
                       dimensional: bool = True) -> float:
    """Time after which the e^(-3t/(1+kappa)) transient has decayed n-fold.

    With ``dimensional`` the result is in seconds (scaled by t_c), otherwise
    in dimensionless time.
    """
    t_nd = n_constants * (1.0 + nd.kappa) / 3.0
    return t_nd * nd.t_c if dimensional else t_nd


def steady_state_window(traj, nd: NondimParams,
                        n_constants: float = TRANSIENT_FOLDS) -> float:
    """Start of the steady-state window for a trajectory, validated against its span.

    Works for both dimensional and reduced (dimensionless) trajectories: the
    trajectory's own time axis decides the scaling via its input period.
    """
    dimensional = getattr(traj, "model", None) is not None
    t_start = steady_state_start(nd, n_constants, dimensional=dimensional)
    period = traj.input.period
    if traj.t[-1] < t_start + 2.0 * period:
        raise ParameterError(
            f"trajectory too short: spans {traj.t[-1]:.4g}, needs {t_start + 2 * period:.4g}"
        )
    return t_start


def _whole_period_slice(t: np.ndarray, t_start: float, period: float,
                        min_periods: int) -> tuple[slice, int]:
    """Index slice covering the most whole periods at or after t_start."""
    dt = t[1] - t[0]
    spp = period / dt
    spp_int = round(spp)
    if abs(spp - spp_int) > 1e-6 * spp or spp_int < 4:
        raise ParameterError(
            f"output grid does not tile the period (period/dt = {spp:.6g})"
        )
    i0 = int(np.searchsorted(t, t_start - 1e-12))
    n_cycles = (len(t) - 1 - i0) // spp_int
    if n_cycles < min_periods:
        raise ParameterError(
            f"window holds {n_cycles} whole periods, needs >= {min_periods}"
        )
    return slice(i0, i0 + n_cycles * spp_int + 1), n_cycles


def _window_mean(t: np.ndarray, y: np.ndarray, sl: slice) -> float:
    seg_t = t[sl]
    return float(np.trapezoid(y[sl], seg_t) / (seg_t[-1] - seg_t[0]))


def cycle_average(traj, t_start: float, period: float,
                  min_periods: int = 3) -> tuple[float, float]:
    """Mean forward speed and displacement per cycle over whole periods."""
    speed = traj.v_par if hasattr(traj, "v_par") else traj.v
    sl, _ = _whole_period_slice(traj.t, t_start, period, min_periods)
    mean_speed = _window_mean(traj.t, speed, sl)
    return mean_speed, mean_speed * period


def mean_orientation(traj, t_start: float, period: float,
                     min_periods: int = 3) -> float:
    """Cycle-averaged orientation angle over the steady-state window."""
    theta = traj.q[:, 2] if hasattr(traj, "q") else traj.theta
    sl, _ = _whole_period_slice(traj.t, t_start, period, min_periods)
    return _window_mean(traj.t, theta, sl)


def path_curvature(traj, t_start: float, period: float,
                   min_periods: int = 3) -> float:
    """Signed curvature of the mean path: mean turn rate over mean speed.

    Positive means the path bends counterclockwise.  Raises BoundaryError
    when the mean speed is negligible against the speed oscillation, where
    curvature is undefined.
    """
    speed = traj.v_par if hasattr(traj, "v_par") else traj.v
    thetadot = traj.qdot[:, 2] if hasattr(traj, "qdot") else traj.thetadot
    sl, _ = _whole_period_slice(traj.t, t_start, period, min_periods)
    mean_speed = _window_mean(traj.t, speed, sl)
    scale = float(np.max(np.abs(speed[sl])))
    if abs(mean_speed) < 1e-9 * max(scale, 1e-30):
        raise BoundaryError("near-zero mean speed: path curvature undefined")
    mean_rate = _window_mean(traj.t, thetadot, sl)
    return mean_rate / mean_speed


def loglog_slope(points: Sequence[tuple[float, float]]) -> tuple[float, float]:
    """Least-squares slope and intercept of log|mean_speed| against log(eps).

    All mean speeds must share one sign; a reversal inside the sweep makes a
    power-law fit meaningless and raises with the offending amplitudes.
    """
    if len(points) < 4:
        raise ParameterError(f"need >= 4 points for a slope fit, got {len(points)}")
    eps = np.array([p[0] for p in points], dtype=float)
    speed = np.array([p[1] for p in points], dtype=float)
    if np.any(eps <= 0):
        raise ParameterError("all eps values must be > 0")
    signs = np.sign(speed)
    if np.any(signs == 0) or len(set(signs)) > 1:
        bad = eps[signs != signs[0]]
        raise ParameterError(
            f"mean speed changes sign inside the sweep at eps = {bad.tolist()}"
        )
    x = np.log(eps)
    y = np.log(np.abs(speed))
    slope, intercept = np.polyfit(x, y, 1)
    return float(slope), float(intercept)


def spectrum(t: np.ndarray, series: np.ndarray, t_start: float, period: float,
             min_periods: int = 8) -> SpectrumPeak:
    """Discrete spectrum of the steady-state window; returns the non-DC peak.

    The window covers whole periods, so input harmonics land on exact bins;
    the peak location is refined by parabolic interpolation across its
    neighbors.
    """
    sl, n_cycles = _whole_period_slice(t, t_start, period, min_periods)
    seg = series[sl][:-1]  # drop duplicate endpoint for an exact DFT window
    n = len(seg)
    coeffs = np.fft.rfft(seg)
    amps = np.abs(coeffs) * 2.0 / n
    amps[0] = np.abs(coeffs[0]) / n
    duration = n_cycles * period
    freqs = 2.0 * math.pi * np.arange(len(coeffs)) / duration

    k = 1 + int(np.argmax(amps[1:]))
    if 1 <= k < len(amps) - 1:
        a_prev, a_mid, a_next = amps[k - 1], amps[k], amps[k + 1]
        denom = a_prev - 2.0 * a_mid + a_next
        delta = 0.0 if denom == 0.0 else 0.5 * (a_prev - a_next) / denom
        delta = float(np.clip(delta, -0.5, 0.5))
    else:
        delta = 0.0
    freq = 2.0 * math.pi * (k + delta) / duration
    return SpectrumPeak(frequency=freq, amplitude=float(amps[k]),
                        frequencies=freqs, amplitudes=amps)


def component_amplitude(t: np.ndarray, series: np.ndarray, t_start: float,
                        period: float, frequency: float,
                        min_periods: int = 8) -> float:
    """Amplitude of the component nearest ``frequency`` in the window's DFT."""
    peak = spectrum(t, series, t_start, period, min_periods)
    k = int(np.argmin(np.abs(peak.frequencies - frequency)))
    return float(peak.amplitudes[k])


def steady_state_metrics(traj, nd: NondimParams,
                         n_constants: float = TRANSIENT_FOLDS) -> SteadyStateMetrics:
    """Bundle of the standard steady-state quantities for one trajectory."""
    t_start = steady_state_window(traj, nd, n_constants)
    period = traj.input.period
    mean_speed, disp = cycle_average(traj, t_start, period)
    theta_bar = mean_orientation(traj, t_start, period)
    try:
        curv = path_curvature(traj, t_start, period)
    except BoundaryError:
        curv = math.nan
    speed = traj.v_par if hasattr(traj, "v_par") else traj.v
    try:
        dom = spectrum(traj.t, speed, t_start, period).frequency
    except ParameterError:
        dom = math.nan
    return SteadyStateMetrics(t_start=t_start, mean_speed=mean_speed,
                              displacement_per_cycle=disp, theta_bar=theta_bar,
                              curvature=curv, dominant_frequency=dom)
