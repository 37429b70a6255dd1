"""Vehicle parameters: dimensional values, dimensionless groups, steering input.

All angles are radians and all quantities SI.  The parameter containers are
frozen dataclasses, so every operation here is pure and safe to share across
threads or processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from .errors import ParameterError

GRAVITY = 9.81


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensional description of the two-link vehicle.

    Link 1 carries the rear axle (wheels at lateral distance ``d`` from the
    axle midpoint) and link 2 carries the front wheel at its tip.  ``b1`` and
    ``b2`` locate each link's center of mass measured from the link's rear
    joint; an optional point mass ``m0`` rides on link 1 at distance ``b0``
    from the rear axle.  ``c`` is the viscous coefficient damping every wheel
    along its rolling direction; ``c_perp``, used only by the skid model,
    damps the lateral (skid) direction instead of constraining it.  ``slope``
    tilts the plane so gravity enters the dynamics.
    """

    m1: float
    m2: float
    l1: float
    l2: float
    b1: float
    b2: float
    J1: float
    J2: float
    d: float
    c: float
    m0: float = 0.0
    b0: float = 0.0
    c_perp: Optional[float] = None
    slope: float = 0.0
    g: float = GRAVITY

    def __post_init__(self) -> None:
        if not self.m1 > 0:
            raise ParameterError(f"m1 must be > 0, got {self.m1}")
        for name in ("m2", "m0", "J1", "J2"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be >= 0, got {getattr(self, name)}")
        for name in ("l1", "l2", "d"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be > 0, got {getattr(self, name)}")
        for off, length in (("b1", "l1"), ("b2", "l2")):
            value = getattr(self, off)
            if not 0.0 <= value <= getattr(self, length):
                raise ParameterError(f"{off} must lie in [0, {length}], got {value}")
        if self.c < 0:
            raise ParameterError(f"c must be >= 0, got {self.c}")
        if self.c_perp is not None and self.c_perp < 0:
            raise ParameterError(f"c_perp must be >= 0, got {self.c_perp}")
        if not abs(self.slope) < math.pi / 2:
            raise ParameterError(f"|slope| must be < pi/2, got {self.slope}")
        if self.b0 < 0:
            raise ParameterError(f"b0 must be >= 0, got {self.b0}")


@dataclass(frozen=True)
class NondimParams:
    """The seven dimensionless groups plus the characteristic time scale.

    alpha = l2/l1, sigma = d/l1, kappa = m2/m1, beta_i = b_i/l_i,
    eta_i = J_i/(m_i l_i^2).  ``t_c = m1/c`` is the dissipation time scale and
    ``omega_nd = omega * t_c`` the steering frequency measured in it.
    """

    alpha: float
    sigma: float
    kappa: float
    beta1: float
    beta2: float
    eta1: float
    eta2: float
    t_c: float
    omega_nd: float

    def __post_init__(self) -> None:
        for name in ("alpha", "sigma", "t_c"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be > 0, got {getattr(self, name)}")
        for name in ("kappa", "eta1", "eta2"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be >= 0, got {getattr(self, name)}")
        for name in ("beta1", "beta2"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ParameterError(f"{name} must lie in [0, 1], got {getattr(self, name)}")


@dataclass(frozen=True)
class InputSignal:
    """Harmonic steering command phi(t) = phi0 + eps*cos(omega*t)."""

    phi0: float
    eps: float
    omega: float

    def __post_init__(self) -> None:
        if self.eps < 0:
            raise ParameterError(f"eps must be >= 0, got {self.eps}")
        if not self.omega > 0:
            raise ParameterError(f"omega must be > 0, got {self.omega}")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    def phi(self, t: float) -> float:
        return self.phi0 + self.eps * math.cos(self.omega * t)

    def phidot(self, t: float) -> float:
        return -self.eps * self.omega * math.sin(self.omega * t)

    def phiddot(self, t: float) -> float:
        return -self.eps * self.omega**2 * math.cos(self.omega * t)


def merge_point_mass(p: PhysicalParams, mode: str = "exact_composite") -> PhysicalParams:
    """Fold the point mass ``m0`` into link 1 and return parameters with m0 = 0.

    ``exact_composite`` (default) forms the true composite body: the link-1
    center of mass shifts to the mass-weighted position and the inertia picks
    up both parallel-axis terms, preserving total mass, first mass moment
    about the rear axle, and inertia about any point.  ``paper_faithful``
    keeps b1 fixed and only adds m0*(b0 - b1)^2 to J1, which is the common
    small-offset shortcut; it is kept for regression against that convention.
    """
    if mode not in ("paper_faithful", "exact_composite"):
        raise ParameterError(f"unknown merge mode {mode!r}")
    if p.m0 == 0.0:
        return p
    if mode == "paper_faithful":
        return replace(
            p,
            m1=p.m1 + p.m0,
            J1=p.J1 + p.m0 * (p.b0 - p.b1) ** 2,
            m0=0.0,
            b0=0.0,
        )
    m_new = p.m1 + p.m0
    b_new = (p.m1 * p.b1 + p.m0 * p.b0) / m_new
    j_new = p.J1 + p.m1 * (p.b1 - b_new) ** 2 + p.m0 * (p.b0 - b_new) ** 2
    if not 0.0 <= b_new <= p.l1:
        raise ParameterError(
            f"composite center of mass {b_new:.4g} falls outside link 1 (length {p.l1})"
        )
    return replace(p, m1=m_new, b1=b_new, J1=j_new, m0=0.0, b0=0.0)


def nondimensionalize(p: PhysicalParams, u: InputSignal) -> tuple[NondimParams, InputSignal]:
    """Map dimensional parameters and input to the dimensionless groups.

    Requires the point mass to have been merged first (m0 = 0) and c > 0;
    with c = 0 the characteristic time t_c = m1/c diverges and the scaling
    is undefined.
    """
    if p.m0 != 0.0:
        raise ParameterError("merge the point mass before nondimensionalizing (m0 != 0)")
    if p.c <= 0.0:
        raise ParameterError("nondimensionalization undefined for c = 0 (t_c = m1/c diverges)")
    t_c = p.m1 / p.c
    nd = NondimParams(
        alpha=p.l2 / p.l1,
        sigma=p.d / p.l1,
        kappa=p.m2 / p.m1,
        beta1=p.b1 / p.l1,
        beta2=p.b2 / p.l2,
        eta1=p.J1 / (p.m1 * p.l1**2),
        eta2=p.J2 / (p.m2 * p.l2**2) if p.m2 > 0 else 0.0,
        t_c=t_c,
        omega_nd=u.omega * t_c,
    )
    return nd, InputSignal(phi0=u.phi0, eps=u.eps, omega=nd.omega_nd)


def dimensionalize_velocity(v_nd: float, nd: NondimParams, l1: float) -> float:
    """Convert a dimensionless speed back to m/s (inverse of v*t_c/l1)."""
    return v_nd * l1 / nd.t_c


def nondimensionalize_velocity(v: float, nd: NondimParams, l1: float) -> float:
    """Convert a speed in m/s to its dimensionless counterpart v*t_c/l1."""
    return v * nd.t_c / l1
