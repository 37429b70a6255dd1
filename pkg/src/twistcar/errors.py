"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter set violates its physical or dimensional constraints."""


class SteeringSingularityError(RuntimeError):
    """The steering geometry is degenerate (l2 + l1*cos(phi) at or below tolerance)."""


class IntegrationError(RuntimeError):
    """Adaptive integration failed (step-size underflow or non-finite derivative)."""


class BoundaryError(RuntimeError):
    """A quantity sits on the zero-net-propulsion boundary where the result is undefined."""


class DataFormatError(ValueError):
    """An experiment file violates the expected CSV schema or sanity checks."""


class FitError(RuntimeError):
    """Coefficient estimation could not be carried out on the given inputs."""
