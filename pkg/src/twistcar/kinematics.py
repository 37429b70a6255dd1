"""Planar geometry of the two-link vehicle.

Conventions: the rear axle midpoint is the reference point of link 1; theta
orients link 1 in the world frame and phi is the relative (steering) angle of
link 2.  With e(a) = (cos a, sin a) and n(a) = (-sin a, cos a):

* rear wheels sit at r +/- d*n(theta), rolling along e(theta),
* the steering joint sits at r + l1*e(theta),
* the front wheel sits at the joint + l2*e(theta + phi), rolling along
  e(theta + phi),
* link CoMs sit at r + b1*e(theta) and joint + b2*e(theta + phi), the point
  mass at r + b0*e(theta).

Generalized coordinates are q = (x, y, theta, phi).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SteeringSingularityError
from .params import NondimParams, PhysicalParams

SINGULARITY_TOL = 1e-6


@dataclass(frozen=True)
class WheelGeometry:
    """Wheel contact positions and unit roll/lateral directions.

    Rows are ordered rear-left (at +d*n), rear-right (at -d*n), front.
    """

    positions: np.ndarray   # (3, 2)
    roll_dirs: np.ndarray   # (3, 2)
    lateral_dirs: np.ndarray  # (3, 2)
    joint: np.ndarray       # (2,)


def wheel_geometry(q: np.ndarray, p: PhysicalParams) -> WheelGeometry:
    """Locate the three wheels and their roll/lateral unit directions."""
    x, y, theta, phi = q
    e1 = np.array([np.cos(theta), np.sin(theta)])
    n1 = np.array([-np.sin(theta), np.cos(theta)])
    e2 = np.array([np.cos(theta + phi), np.sin(theta + phi)])
    n2 = np.array([-np.sin(theta + phi), np.cos(theta + phi)])
    r = np.array([x, y])
    joint = r + p.l1 * e1
    positions = np.stack([r + p.d * n1, r - p.d * n1, joint + p.l2 * e2])
    roll_dirs = np.stack([e1, e1, e2])
    lateral_dirs = np.stack([n1, n1, n2])
    return WheelGeometry(positions, roll_dirs, lateral_dirs, joint)


def com_positions(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """World positions of link-1 CoM, link-2 CoM, and the point mass (3x2)."""
    x, y, theta, phi = q
    e1 = np.array([np.cos(theta), np.sin(theta)])
    e2 = np.array([np.cos(theta + phi), np.sin(theta + phi)])
    r = np.array([x, y])
    return np.stack([r + p.b1 * e1, r + p.l1 * e1 + p.b2 * e2, r + p.b0 * e1])


def constraint_matrix(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """No-skid constraint matrix W with W(q) qdot = 0 (2x4).

    Row 1 forbids lateral motion of the rear axle, row 2 lateral motion of
    the front wheel contact.
    """
    theta, phi = q[2], q[3]
    return np.array([
        [-np.sin(theta), np.cos(theta), 0.0, 0.0],
        [-np.sin(theta + phi), np.cos(theta + phi),
         p.l2 + p.l1 * np.cos(phi), p.l2],
    ])


def constraint_matrix_dot(q: np.ndarray, qdot: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Entrywise time derivative of the constraint matrix (2x4)."""
    theta, phi = q[2], q[3]
    thetadot, phidot = qdot[2], qdot[3]
    s1, c1 = np.sin(theta), np.cos(theta)
    s2, c2 = np.sin(theta + phi), np.cos(theta + phi)
    rate2 = thetadot + phidot
    return np.array([
        [-c1 * thetadot, -s1 * thetadot, 0.0, 0.0],
        [-c2 * rate2, -s2 * rate2, -p.l1 * np.sin(phi) * phidot, 0.0],
    ])


def roll_jacobians(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Rows mapping qdot to each wheel's speed along its roll direction (3x4)."""
    theta, phi = q[2], q[3]
    s1, c1 = np.sin(theta), np.cos(theta)
    s2, c2 = np.sin(theta + phi), np.cos(theta + phi)
    return np.array([
        [c1, s1, -p.d, 0.0],
        [c1, s1, p.d, 0.0],
        [c2, s2, p.l1 * np.sin(phi), 0.0],
    ])


def skid_jacobians(q: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """Rows mapping qdot to each wheel's lateral (skid) speed (3x4).

    The two rear wheels share one lateral direction, so their rows coincide;
    the front row equals the second constraint row.
    """
    theta, phi = q[2], q[3]
    rear = np.array([-np.sin(theta), np.cos(theta), 0.0, 0.0])
    front = np.array([-np.sin(theta + phi), np.cos(theta + phi),
                      p.l2 + p.l1 * np.cos(phi), p.l2])
    return np.stack([rear, rear, front])


def body_transform(theta: float, paper_rb_sign: bool = False) -> np.ndarray:
    """Map body-frame velocities (v_par, v_perp, thetadot, phidot) to qdot.

    The default is the proper planar rotation.  ``paper_rb_sign`` flips the
    (1, 1) entry to -cos(theta); under the no-skid constraints v_perp = 0 so
    the reduced dynamics cannot tell the difference, but only the rotation is
    consistent with v_perp = -sin(theta)*xdot + cos(theta)*ydot.
    """
    s, c = np.sin(theta), np.cos(theta)
    c_perp_col = -c if paper_rb_sign else c
    return np.array([
        [c, -s, 0.0, 0.0],
        [s, c_perp_col, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])


def steering_reduction(phi: float, p: PhysicalParams, tol_sing: float | None = None) -> np.ndarray:
    """Matrix S_r mapping (v_par, phidot) to body-frame velocities (4x2).

    Raises ``SteeringSingularityError`` when l2 + l1*cos(phi) falls to or
    below the tolerance (default 1e-6*l1): there the front-wheel constraint
    can no longer determine thetadot and the reduction breaks down.
    """
    if tol_sing is None:
        tol_sing = SINGULARITY_TOL * p.l1
    denom = p.l2 + p.l1 * np.cos(phi)
    if denom <= tol_sing:
        raise SteeringSingularityError(
            f"steering geometry degenerate: l2 + l1*cos(phi) = {denom:.3e} <= {tol_sing:.3e}"
        )
    return np.array([
        [1.0, 0.0],
        [0.0, 0.0],
        [np.sin(phi) / denom, -p.l2 / denom],
        [0.0, 1.0],
    ])


def reduction_matrix(phi: float, p: PhysicalParams, theta: float = 0.0,
                     tol_sing: float | None = None) -> np.ndarray:
    """Full reduction S = R_b S_r mapping (v_par, phidot) to qdot (4x2)."""
    return body_transform(theta) @ steering_reduction(phi, p, tol_sing)


def recover_thetadot(v: float, phi: float, phidot: float, nd: NondimParams) -> float:
    """Orientation rate implied by the constraints, in dimensionless form."""
    denom = nd.alpha + np.cos(phi)
    if denom <= SINGULARITY_TOL:
        raise SteeringSingularityError(
            f"steering geometry degenerate: alpha + cos(phi) = {denom:.3e}"
        )
    return np.sin(phi) / denom * v - nd.alpha / denom * phidot
