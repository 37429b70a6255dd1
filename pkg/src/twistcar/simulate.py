"""High-level trajectory simulation for the three model variants.

``simulate`` integrates the constrained (optionally tilted) or skid dynamics
in dimensional form; ``simulate_reduced`` integrates the dimensionless
reduced dynamics.  Both sample on a uniform grid and return immutable
trajectory records carrying everything downstream analysis needs.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import dynamics, kinematics
from .errors import ParameterError
from .integrator import IntegrationResult, StepStats, integrate, project_passive_velocities
from .params import InputSignal, NondimParams, PhysicalParams

DRIFT_TRIGGER = 1e-10


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled solution of the dimensional dynamics.

    ``lam`` is None for the skid model, where no constraint forces exist.
    ``v_par``/``v_perp`` are the body-frame velocity components of the rear
    axle midpoint; under the no-skid constraints v_perp stays at drift level.
    """

    t: np.ndarray        # (n,)
    q: np.ndarray        # (n, 4): x, y, theta, phi
    qdot: np.ndarray     # (n, 4)
    tau: np.ndarray      # (n,)
    lam: Optional[np.ndarray]  # (n, 2) or None
    v_par: np.ndarray    # (n,)
    v_perp: np.ndarray   # (n,)
    model: str
    params: PhysicalParams
    input: InputSignal
    dt_out: float
    stats: StepStats
    # net injected energy integral(tau*phidot - 2R), co-integrated with the
    # state when requested; None otherwise
    energy_in: Optional[np.ndarray] = None

    @property
    def params_hash(self) -> str:
        text = repr((self.params, self.input, self.model))
        return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class ReducedTrajectory:
    """Uniformly sampled solution of the dimensionless reduced dynamics."""

    t: np.ndarray        # (n,) dimensionless time
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    v: np.ndarray        # forward speed, dimensionless
    thetadot: np.ndarray
    phi: np.ndarray
    phidot: np.ndarray
    nd: NondimParams
    input: InputSignal   # dimensionless frequency
    dt_out: float
    stats: StepStats


def default_dt_out(u: InputSignal, samples_per_period: int = 200) -> float:
    return u.period / samples_per_period


def simulate(p: PhysicalParams, u: InputSignal, t_end: float,
             model: str = "constrained",
             dt_out: Optional[float] = None,
             rtol: float = 1e-9, atol: float = 1e-11,
             q0: Optional[np.ndarray] = None,
             qdot0: Optional[np.ndarray] = None,
             project: bool = True,
             track_energy: bool = False) -> Trajectory:
    """Integrate the dimensional dynamics from rest (by default) to t_end.

    ``model`` is "constrained", "slope" (an alias for constrained with the
    gravity term, which p.slope already controls), or "skid".  For the
    constrained variants, velocity drift off the constraint surface is
    projected away after each accepted step once it exceeds 1e-10.  With
    ``track_energy`` the net injected power tau*phidot - 2R is co-integrated
    as an extra state, giving an energy balance at solver accuracy.
    """
    if model not in ("constrained", "slope", "skid"):
        raise ParameterError(f"unknown model {model!r}")
    constrained = model != "skid"
    if not constrained and p.c_perp is None:
        raise ParameterError("skid model requires c_perp")
    if dt_out is None:
        dt_out = default_dt_out(u)
    diss_model = "constrained" if constrained else "skid"

    q_p0 = np.zeros(3) if q0 is None else np.asarray(q0, dtype=float)
    qd_p0 = np.zeros(3) if qdot0 is None else np.asarray(qdot0, dtype=float)
    y0 = np.concatenate([q_p0, qd_p0])
    if track_energy:
        y0 = np.append(y0, 0.0)

    def full_state(t: float, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        q = np.array([y[0], y[1], y[2], u.phi(t)])
        qdot = np.array([y[3], y[4], y[5], u.phidot(t)])
        return q, qdot

    def net_power(t: float, y: np.ndarray, tau: float) -> float:
        q, qdot = full_state(t, y)
        return tau * qdot[3] - dynamics.rayleigh_power(q, qdot, p, diss_model)

    if constrained:
        q_init, qdot_init = full_state(0.0, y0)
        qdot_init = project_passive_velocities(q_init, qdot_init, p)
        y0[3:6] = qdot_init[:3]

        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            sol = dynamics.dae_rhs(t, y[:3], y[3:6], u, p)
            parts = [y[3:6], sol.qpp_passive]
            if track_energy:
                parts.append([net_power(t, y, sol.tau)])
            return np.concatenate(parts)

        def post_accept(t: float, y: np.ndarray) -> np.ndarray:
            q, qdot = full_state(t, y)
            w = kinematics.constraint_matrix(q, p)
            if np.max(np.abs(w @ qdot)) > DRIFT_TRIGGER:
                qdot = project_passive_velocities(q, qdot, p)
                y = y.copy()
                y[3:6] = qdot[:3]
            return y

        result = integrate(rhs, (0.0, t_end), y0, rtol=rtol, atol=atol,
                           dt_out=dt_out,
                           post_accept=post_accept if project else None)
    else:

        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            qpp, tau = dynamics.skid_rhs(t, y[:3], y[3:6], u, p)
            parts = [y[3:6], qpp]
            if track_energy:
                parts.append([net_power(t, y, tau)])
            return np.concatenate(parts)

        result = integrate(rhs, (0.0, t_end), y0, rtol=rtol, atol=atol,
                           dt_out=dt_out)

    return _assemble_trajectory(result, u, p, model, dt_out, constrained,
                                track_energy)


def _assemble_trajectory(result: IntegrationResult, u: InputSignal,
                         p: PhysicalParams, model: str, dt_out: float,
                         constrained: bool, track_energy: bool = False) -> Trajectory:
    t = result.t
    n = len(t)
    q = np.empty((n, 4))
    qdot = np.empty((n, 4))
    tau = np.empty(n)
    lam = np.empty((n, 2)) if constrained else None
    for i in range(n):
        ti = t[i]
        q[i] = [result.y[i, 0], result.y[i, 1], result.y[i, 2], u.phi(ti)]
        qdot[i] = [result.y[i, 3], result.y[i, 4], result.y[i, 5], u.phidot(ti)]
        if constrained:
            sol = dynamics.dae_rhs(ti, q[i, :3], qdot[i, :3], u, p)
            tau[i] = sol.tau
            lam[i] = sol.lam
        else:
            _, tau[i] = dynamics.skid_rhs(ti, q[i, :3], qdot[i, :3], u, p)
    theta = q[:, 2]
    v_par = np.cos(theta) * qdot[:, 0] + np.sin(theta) * qdot[:, 1]
    v_perp = -np.sin(theta) * qdot[:, 0] + np.cos(theta) * qdot[:, 1]
    energy_in = result.y[:, 6].copy() if track_energy else None
    return Trajectory(t=t, q=q, qdot=qdot, tau=tau, lam=lam,
                      v_par=v_par, v_perp=v_perp, model=model, params=p,
                      input=u, dt_out=dt_out, stats=result.stats,
                      energy_in=energy_in)


def simulate_reduced(nd: NondimParams, u: InputSignal, t_end: float,
                     dt_out: Optional[float] = None,
                     rtol: float = 1e-9, atol: float = 1e-11,
                     v0: float = 0.0) -> ReducedTrajectory:
    """Integrate the dimensionless reduced dynamics from rest.

    ``u`` must carry the dimensionless frequency; positions (x, y, theta)
    are reconstructed kinematically alongside the forward speed.
    """
    if dt_out is None:
        dt_out = default_dt_out(u)

    alpha = nd.alpha

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        theta, v = y[2], y[3]
        phi = u.phi(t)
        phidot = u.phidot(t)
        thetadot = kinematics.recover_thetadot(v, phi, phidot, nd)
        vdot = dynamics.reduced_rhs(t, v, u, nd)
        return np.array([v * math.cos(theta), v * math.sin(theta), thetadot, vdot])

    result = integrate(rhs, (0.0, t_end), np.array([0.0, 0.0, 0.0, v0]),
                       rtol=rtol, atol=atol, dt_out=dt_out)
    t = result.t
    phi = u.phi0 + u.eps * np.cos(u.omega * t)
    phidot = -u.eps * u.omega * np.sin(u.omega * t)
    v = result.y[:, 3]
    denom = alpha + np.cos(phi)
    thetadot = np.sin(phi) / denom * v - alpha / denom * phidot
    return ReducedTrajectory(t=t, x=result.y[:, 0], y=result.y[:, 1],
                             theta=result.y[:, 2], v=v, thetadot=thetadot,
                             phi=phi, phidot=phidot, nd=nd, input=u,
                             dt_out=dt_out, stats=result.stats)
