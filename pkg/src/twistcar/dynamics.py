"""Equations of motion for the two-link vehicle.

Three right-hand sides are provided:

* ``dae_rhs`` — the constrained formulation: a 6x6 linear solve per call
  yielding the passive accelerations (x, y, theta), the steering torque, and
  the two lateral constraint forces.  Gravity from a tilted plane enters when
  ``p.slope`` is nonzero.
* ``reduced_rhs`` — the single decoupled equation for the forward speed in
  the constraint-compatible velocity basis, in dimensionless form.
* ``skid_rhs`` — the unconstrained variant where lateral wheel motion is
  damped by ``c_perp`` instead of forbidden.

The mass matrix and its angle partials are closed-form, so the bias vector
is assembled analytically rather than by numerical differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import IntegrationError, ParameterError
from .kinematics import (
    constraint_matrix,
    constraint_matrix_dot,
    roll_jacobians,
    skid_jacobians,
    steering_reduction,
)
from .params import InputSignal, NondimParams, PhysicalParams


@dataclass(frozen=True)
class EomTerms:
    """Assembled terms of M qddot + B + D + G = F_q + W^T lambda."""

    M: np.ndarray    # (4, 4)
    B: np.ndarray    # (4,)
    D: np.ndarray    # (4,)
    G: np.ndarray    # (4,)
    F_q: np.ndarray  # (4,)


@dataclass(frozen=True)
class DaeOutput:
    """Result of one constrained-dynamics solve."""

    qpp_passive: np.ndarray  # (3,) accelerations of x, y, theta
    tau: float               # steering torque
    lam: np.ndarray          # (2,) lateral constraint forces


def _moments(p: PhysicalParams) -> tuple[float, float, float, float, float, float]:
    """Total mass, first moments, and inertia aggregates used by M, B, G."""
    mt = p.m0 + p.m1 + p.m2
    u1 = p.m1 * p.b1 + p.m0 * p.b0 + p.m2 * p.l1
    u2 = p.m2 * p.b2
    i1 = p.J1 + p.m1 * p.b1**2 + p.m0 * p.b0**2 + p.m2 * p.l1**2
    i2 = p.J2 + p.m2 * p.b2**2
    coupling = p.m2 * p.l1 * p.b2
    return mt, u1, u2, i1, i2, coupling


def mass_matrix(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Symmetric positive-definite generalized mass matrix (4x4)."""
    theta, phi = q[2], q[3]
    mt, u1, u2, i1, i2, k = _moments(p)
    s1, c1 = math.sin(theta), math.cos(theta)
    s2, c2 = math.sin(theta + phi), math.cos(theta + phi)
    cphi = math.cos(phi)
    m02 = -u1 * s1 - u2 * s2
    m03 = -u2 * s2
    m12 = u1 * c1 + u2 * c2
    m13 = u2 * c2
    return np.array([
        [mt, 0.0, m02, m03],
        [0.0, mt, m12, m13],
        [m02, m12, i1 + i2 + 2.0 * k * cphi, i2 + k * cphi],
        [m03, m13, i2 + k * cphi, i2],
    ])


def mass_matrix_partials(q: np.ndarray, p: PhysicalParams) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form dM/dtheta and dM/dphi."""
    theta, phi = q[2], q[3]
    _, u1, u2, _, _, k = _moments(p)
    s1, c1 = math.sin(theta), math.cos(theta)
    s2, c2 = math.sin(theta + phi), math.cos(theta + phi)
    sphi = math.sin(phi)

    d_theta = np.zeros((4, 4))
    d_theta[0, 2] = -u1 * c1 - u2 * c2
    d_theta[0, 3] = -u2 * c2
    d_theta[1, 2] = -u1 * s1 - u2 * s2
    d_theta[1, 3] = -u2 * s2
    d_theta[2, 0] = d_theta[0, 2]
    d_theta[3, 0] = d_theta[0, 3]
    d_theta[2, 1] = d_theta[1, 2]
    d_theta[3, 1] = d_theta[1, 3]

    d_phi = np.zeros((4, 4))
    d_phi[0, 2] = d_phi[0, 3] = -u2 * c2
    d_phi[1, 2] = d_phi[1, 3] = -u2 * s2
    d_phi[2, 0] = d_phi[3, 0] = -u2 * c2
    d_phi[2, 1] = d_phi[3, 1] = -u2 * s2
    d_phi[2, 2] = -2.0 * k * sphi
    d_phi[2, 3] = d_phi[3, 2] = -k * sphi
    return d_theta, d_phi


def bias_vector(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Coriolis/centrifugal vector B = Mdot qdot - 1/2 d(qdot^T M qdot)/dq."""
    d_theta, d_phi = mass_matrix_partials(q, p)
    mdot = d_theta * qdot[2] + d_phi * qdot[3]
    out = mdot @ qdot
    out[2] -= 0.5 * qdot @ (d_theta @ qdot)
    out[3] -= 0.5 * qdot @ (d_phi @ qdot)
    return out


def roll_dissipation_matrix(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Sum of J_i^T J_i over the three wheels' roll directions (4x4)."""
    jac = roll_jacobians(q, p)
    return jac.T @ jac


def skid_dissipation_matrix(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Sum of J_perp_i^T J_perp_i over the three wheels (4x4)."""
    jac = skid_jacobians(q, p)
    return jac.T @ jac


def dissipation_vector(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams,
                       model: str = "constrained") -> np.ndarray:
    """Generalized friction force, linear in qdot with a PSD coefficient matrix."""
    total = p.c * roll_dissipation_matrix(q, p)
    if model == "skid":
        if p.c_perp is None:
            raise ParameterError("skid model requires c_perp")
        total = total + p.c_perp * skid_dissipation_matrix(q, p)
    elif model != "constrained":
        raise ParameterError(f"unknown dissipation model {model!r}")
    return total @ qdot


def gravity_vector(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Gradient of the slope potential; zero on level ground.

    For m0 = 0 this is exactly the tilted-plane gravity term; a nonzero
    point mass contributes through the same moments.
    """
    if p.slope == 0.0:
        return np.zeros(4)
    theta, phi = q[2], q[3]
    mt, u1, u2, _, _, _ = _moments(p)
    gs = p.g * math.sin(p.slope)
    s1 = math.sin(theta)
    s2 = math.sin(theta + phi)
    return np.array([
        -gs * mt,
        0.0,
        gs * (u1 * s1 + u2 * s2),
        gs * u2 * s2,
    ])


def eom_terms(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams,
              model: str = "constrained", tau: float = 0.0) -> EomTerms:
    """Assemble all equation-of-motion terms at one state."""
    return EomTerms(
        M=mass_matrix(q, p),
        B=bias_vector(q, qdot, p),
        D=dissipation_vector(q, qdot, p, model),
        G=gravity_vector(q, p),
        F_q=np.array([0.0, 0.0, 0.0, tau]),
    )


def kinetic_energy(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams) -> float:
    return 0.5 * float(qdot @ mass_matrix(q, p) @ qdot)


def potential_energy(q: np.ndarray, p: PhysicalParams) -> float:
    """Slope potential; increases opposite the world x axis projection."""
    if p.slope == 0.0:
        return 0.0
    mt, u1, u2, _, _, _ = _moments(p)
    theta, phi = q[2], q[3]
    gs = p.g * math.sin(p.slope)
    return -gs * (mt * q[0] + u1 * math.cos(theta) + u2 * math.cos(theta + phi))


def rayleigh_power(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams,
                   model: str = "constrained") -> float:
    """Instantaneous dissipated power, twice the Rayleigh function."""
    return float(qdot @ dissipation_vector(q, qdot, p, model))


def dae_rhs(t: float, q_passive: np.ndarray, qdot_passive: np.ndarray,
            u: InputSignal, p: PhysicalParams) -> DaeOutput:
    """Constrained dynamics solve for passive accelerations, torque, and forces.

    The steering coordinate follows the prescribed input exactly, with its
    acceleration supplied analytically.
    """
    phi = u.phi(t)
    phidot = u.phidot(t)
    phiddot = u.phiddot(t)
    q = np.array([q_passive[0], q_passive[1], q_passive[2], phi])
    qdot = np.array([qdot_passive[0], qdot_passive[1], qdot_passive[2], phidot])

    terms = eom_terms(q, qdot, p, model="constrained")
    w = constraint_matrix(q, p)
    wdot = constraint_matrix_dot(q, qdot, p)

    lhs = np.zeros((6, 6))
    lhs[:3, :3] = terms.M[:3, :3]
    lhs[:3, 4:] = -w[:, :3].T
    lhs[3, :3] = terms.M[3, :3]
    lhs[3, 3] = -1.0
    lhs[3, 4:] = -w[:, 3]
    lhs[4:, :3] = w[:, :3]

    forcing = terms.B + terms.D + terms.G
    rhs = np.empty(6)
    rhs[:3] = -(terms.M[:3, 3] * phiddot + forcing[:3])
    rhs[3] = -(terms.M[3, 3] * phiddot + forcing[3])
    rhs[4:] = -(w[:, 3] * phiddot + wdot @ qdot)

    try:
        sol = np.linalg.solve(lhs, rhs)
    except np.linalg.LinAlgError as exc:
        cond = np.linalg.cond(lhs)
        raise IntegrationError(
            f"singular constrained system at t={t:.6g} (cond ~ {cond:.3e})"
        ) from exc
    return DaeOutput(qpp_passive=sol[:3], tau=float(sol[3]), lam=sol[4:])


def skid_rhs(t: float, q_passive: np.ndarray, qdot_passive: np.ndarray,
             u: InputSignal, p: PhysicalParams) -> tuple[np.ndarray, float]:
    """Unconstrained dynamics with lateral damping; returns (qddot_passive, tau)."""
    if p.c_perp is None:
        raise ParameterError("skid model requires c_perp")
    phi = u.phi(t)
    phidot = u.phidot(t)
    phiddot = u.phiddot(t)
    q = np.array([q_passive[0], q_passive[1], q_passive[2], phi])
    qdot = np.array([qdot_passive[0], qdot_passive[1], qdot_passive[2], phidot])

    terms = eom_terms(q, qdot, p, model="skid")
    forcing = terms.B + terms.D + terms.G
    try:
        qpp = np.linalg.solve(terms.M[:3, :3],
                              -(terms.M[:3, 3] * phiddot + forcing[:3]))
    except np.linalg.LinAlgError as exc:
        cond = np.linalg.cond(terms.M[:3, :3])
        raise IntegrationError(
            f"singular mass block at t={t:.6g} (cond ~ {cond:.3e})"
        ) from exc
    tau = float(terms.M[3, :3] @ qpp + terms.M[3, 3] * phiddot + forcing[3])
    return qpp, tau


@lru_cache(maxsize=128)
def unit_params(nd: NondimParams) -> PhysicalParams:
    """Dimensional parameter set with l1 = m1 = c = 1 realizing the groups.

    Evaluating the dimensional equations on this set yields the
    dimensionless equations directly, since all scales equal one.
    """
    return PhysicalParams(
        m1=1.0,
        m2=nd.kappa,
        l1=1.0,
        l2=nd.alpha,
        b1=nd.beta1,
        b2=nd.beta2 * nd.alpha,
        J1=nd.eta1,
        J2=nd.eta2 * nd.kappa * nd.alpha**2,
        d=nd.sigma,
        c=1.0,
    )


def reduced_rhs(t: float, v: float, u: InputSignal, nd: NondimParams) -> float:
    """Dimensionless forward-speed rate from the reduced (constraint-compatible) dynamics.

    ``u`` must already be dimensionless (omega measured in units of 1/t_c).
    The equation for v decouples from the torque row, so a single scalar
    comes back.
    """
    p = unit_params(nd)
    phi = u.phi(t)
    phidot = u.phidot(t)
    phiddot = u.phiddot(t)

    s_r = steering_reduction(phi, p)  # body transform is identity at theta = 0
    v_r = np.array([v, phidot])
    qdot = s_r @ v_r
    thetadot = qdot[2]

    denom = nd.alpha + math.cos(phi)
    sdot = np.zeros((4, 2))
    sdot[1, 0] = thetadot
    sdot[2, 0] = (nd.alpha * math.cos(phi) + 1.0) / denom**2 * phidot
    sdot[2, 1] = -nd.alpha * math.sin(phi) / denom**2 * phidot

    q = np.array([0.0, 0.0, 0.0, phi])
    m = mass_matrix(q, p)
    b = bias_vector(q, qdot, p)
    d = roll_dissipation_matrix(q, p) @ qdot  # c = 1 for the unit set

    m_r = s_r.T @ m @ s_r
    coupled = s_r.T @ (m @ (sdot @ v_r) + b + d)
    return float(-(m_r[0, 1] * phiddot + coupled[0]) / m_r[0, 0])


@dataclass(frozen=True)
class EnergyReport:
    """Per-sample energy bookkeeping along a trajectory."""

    t: np.ndarray
    kinetic: np.ndarray
    potential: np.ndarray
    dissipation_power: np.ndarray  # 2R, always >= 0
    actuation_power: np.ndarray    # tau * phidot


def energy_report(traj, p: PhysicalParams) -> EnergyReport:
    """Evaluate T, V, dissipated power, and actuation power along a trajectory."""
    n = len(traj.t)
    kin = np.empty(n)
    pot = np.empty(n)
    diss = np.empty(n)
    act = np.empty(n)
    model = "skid" if traj.model == "skid" else "constrained"
    for i in range(n):
        q = traj.q[i]
        qdot = traj.qdot[i]
        kin[i] = kinetic_energy(q, qdot, p)
        pot[i] = potential_energy(q, p)
        diss[i] = rayleigh_power(q, qdot, p, model)
        act[i] = traj.tau[i] * qdot[3]
    return EnergyReport(t=traj.t, kinetic=kin, potential=pot,
                        dissipation_power=diss, actuation_power=act)
