"""Twistcar: planar two-link vehicle with rolling dissipation.

Simulation of the constrained, skid, and tilted-plane dynamics, closed-form
small-amplitude approximations with direction-reversal prediction, trajectory
post-processing, and dissipation-coefficient fitting against experiment-style
data.
"""

from .params import (
    InputSignal,
    NondimParams,
    PhysicalParams,
    dimensionalize_velocity,
    merge_point_mass,
    nondimensionalize,
    nondimensionalize_velocity,
)
from .simulate import ReducedTrajectory, Trajectory, simulate, simulate_reduced

__all__ = [
    "InputSignal",
    "NondimParams",
    "PhysicalParams",
    "ReducedTrajectory",
    "Trajectory",
    "dimensionalize_velocity",
    "merge_point_mass",
    "nondimensionalize",
    "nondimensionalize_velocity",
    "simulate",
    "simulate_reduced",
]

__version__ = "0.1.0"
