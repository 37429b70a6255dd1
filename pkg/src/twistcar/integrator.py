"""Adaptive explicit Runge-Kutta integration with dense output.

An embedded Dormand-Prince 5(4) pair propagates the 5th-order solution and
controls the step from the embedded 4th-order error estimate.  Output is
sampled on a uniform grid through the pair's quartic interpolant, so spectra
and cycle averages downstream see evenly spaced data regardless of the
adaptive steps.  An optional hook runs after every accepted step; the
constrained vehicle model uses it to project velocity-level constraint drift
away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import IntegrationError
from .kinematics import constraint_matrix
from .params import PhysicalParams

# Dormand-Prince 5(4) tableau.
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
_B = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
# Difference between the 5th- and 4th-order weights.
_E = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920,
               -17253 / 339200, 22 / 525, -1 / 40])
# Quartic dense-output coefficients (Shampine's interpolant for this pair).
_P = np.array([
    [1.0, -8048581381 / 2820520608, 8663915743 / 2820520608, -12715105075 / 11282082432],
    [0.0, 0.0, 0.0, 0.0],
    [0.0, 131558114200 / 32700410799, -68118460800 / 10900136933, 87487479700 / 32700410799],
    [0.0, -1754552775 / 470086768, 14199869525 / 1410260304, -10690763975 / 1880347072],
    [0.0, 127303824393 / 49829197408, -318862633887 / 49829197408, 701980252875 / 199316789632],
    [0.0, -282668133 / 205662961, 2019193451 / 616988883, -1453857185 / 822651844],
    [0.0, 40617522 / 29380423, -110615467 / 29380423, 69997945 / 29380423],
])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 10.0


@dataclass
class StepStats:
    """Counters accumulated over one integration."""

    n_accepted: int = 0
    n_rejected: int = 0
    n_rhs: int = 0


@dataclass(frozen=True)
class IntegrationResult:
    t: np.ndarray       # uniform output grid
    y: np.ndarray       # (len(t), dim) samples
    stats: StepStats


def _error_norm(err: np.ndarray, y0: np.ndarray, y1: np.ndarray,
                rtol: float, atol: float) -> float:
    scale = atol + rtol * np.maximum(np.abs(y0), np.abs(y1))
    return float(np.sqrt(np.mean((err / scale) ** 2)))


def _initial_step(rhs, t0, y0, f0, direction, rtol, atol, max_step):
    """Standard two-trial heuristic for the first step size."""
    scale = atol + rtol * np.abs(y0)
    d0 = float(np.sqrt(np.mean((y0 / scale) ** 2)))
    d1 = float(np.sqrt(np.mean((f0 / scale) ** 2)))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = y0 + h0 * direction * f0
    f1 = rhs(t0 + h0 * direction, y1)
    d2 = float(np.sqrt(np.mean(((f1 - f0) / scale) ** 2))) / h0
    if d1 <= 1e-15 and d2 <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.2
    return min(100 * h0, h1, max_step)


def integrate(rhs: Callable[[float, np.ndarray], np.ndarray],
              t_span: tuple[float, float],
              y0: np.ndarray,
              rtol: float = 1e-9,
              atol: float = 1e-11,
              dt_out: Optional[float] = None,
              post_accept: Optional[Callable[[float, np.ndarray], np.ndarray]] = None,
              max_step: float = math.inf) -> IntegrationResult:
    """Integrate y' = rhs(t, y) and sample on a uniform grid of spacing dt_out.

    The local error per step is kept at or below rtol*|y| + atol.  The last
    grid point is the largest t0 + k*dt_out not exceeding t_span[1] (within
    rounding).  ``post_accept(t, y) -> y`` runs after each accepted step and
    may return a corrected state; dense output within the step interpolates
    the uncorrected polynomial.

    Raises ``IntegrationError`` on step-size underflow or a non-finite
    derivative, reporting the time of failure.
    """
    t0, t_end = float(t_span[0]), float(t_span[1])
    if not (math.isfinite(t0) and math.isfinite(t_end)) or t_end <= t0:
        raise IntegrationError(f"invalid time span ({t0}, {t_end})")
    if not 1e-12 <= rtol <= 1e-2:
        raise IntegrationError(f"rtol must lie in [1e-12, 1e-2], got {rtol}")
    if not atol > 0:
        raise IntegrationError(f"atol must be > 0, got {atol}")
    if dt_out is None or dt_out <= 0:
        raise IntegrationError(f"dt_out must be > 0, got {dt_out}")

    y0 = np.asarray(y0, dtype=float)
    n_out = int(math.floor((t_end - t0) / dt_out + 1e-9)) + 1
    t_grid = t0 + dt_out * np.arange(n_out)
    t_final = t_grid[-1]

    out = np.empty((n_out, y0.size))
    out[0] = y0
    next_out = 1

    stats = StepStats()
    t = t0
    y = y0.copy()
    f = rhs(t, y)
    stats.n_rhs += 1
    if not np.all(np.isfinite(f)):
        raise IntegrationError(f"non-finite derivative at t={t:.6g}")
    h = _initial_step(rhs, t, y, f, 1.0, rtol, atol, max_step)
    stats.n_rhs += 1

    k = np.empty((7, y0.size))
    while t < t_final:
        h = min(h, max_step, t_final - t)
        if h <= 16.0 * np.finfo(float).eps * max(abs(t), 1.0):
            raise IntegrationError(f"step size underflow at t={t:.6g}")

        k[0] = f
        for i in range(1, 7):
            yi = y + h * (k[:i].T @ _A[i])
            k[i] = rhs(t + _C[i] * h, yi)
        stats.n_rhs += 6
        y_new = y + h * (k.T @ _B)
        if not np.all(np.isfinite(y_new)):
            raise IntegrationError(f"non-finite state after step at t={t:.6g}")

        err = _error_norm(h * (k.T @ _E), y, y_new, rtol, atol)
        if err <= 1.0:
            t_new = t + h
            # Dense output over (t, t_new] using the quartic interpolant.
            q = k.T @ _P
            while next_out < n_out and t_grid[next_out] <= t_new + 1e-12 * max(abs(t_new), 1.0):
                theta = (t_grid[next_out] - t) / h
                powers = np.array([theta, theta**2, theta**3, theta**4])
                out[next_out] = y + h * (q @ powers)
                next_out += 1
            y = y_new
            t = t_new
            if post_accept is not None:
                y = post_accept(t, y)
                f = rhs(t, y)
                stats.n_rhs += 1
            else:
                f = k[6].copy()  # first-same-as-last; row 6 is rewritten next step
            stats.n_accepted += 1
            factor = _MAX_FACTOR if err == 0.0 else min(
                _MAX_FACTOR, max(_MIN_FACTOR, _SAFETY * err ** -0.2))
            h *= factor
        else:
            stats.n_rejected += 1
            h *= max(_MIN_FACTOR, _SAFETY * err ** -0.2)

    if next_out < n_out:  # end landed exactly on the last grid point
        out[next_out:] = y
    return IntegrationResult(t=t_grid, y=out, stats=stats)


def project_constraints(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Minimal-norm correction of qdot onto the no-skid constraint surface.

    Returns qdot - W^T (W W^T)^-1 W qdot, so the result satisfies
    W qdot = 0 to machine precision and feasible inputs pass through
    unchanged.
    """
    w = constraint_matrix(q, p)
    gram = w @ w.T
    try:
        mult = np.linalg.solve(gram, w @ qdot)
    except np.linalg.LinAlgError as exc:
        raise IntegrationError("degenerate constraint configuration (W W^T singular)") from exc
    return qdot - w.T @ mult


def project_passive_velocities(q: np.ndarray, qdot: np.ndarray,
                               p: PhysicalParams) -> np.ndarray:
    """Project drift out of the passive velocities only, keeping phidot fixed.

    Used inside the constrained integration, where the steering rate is
    prescribed and must not be altered by drift control.
    """
    w = constraint_matrix(q, p)
    w_p = w[:, :3]
    residual = w @ qdot
    try:
        mult = np.linalg.solve(w_p @ w_p.T, residual)
    except np.linalg.LinAlgError as exc:
        raise IntegrationError("degenerate constraint configuration (W_p W_p^T singular)") from exc
    corrected = qdot.copy()
    corrected[:3] -= w_p.T @ mult
    return corrected
