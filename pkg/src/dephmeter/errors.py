"""Exception types raised by the simulator."""


class DephmeterError(Exception):
    """Base class for all package-specific errors."""


class TrajectoryLimitError(DephmeterError):
    """Requested step count exceeds the configured trajectory maximum."""


class InternalConsistencyError(DephmeterError):
    """A numerical invariant was violated beyond the rounding tolerance."""


class TruncationLeakageError(DephmeterError):
    """Probability leaked into the top Fock level of a truncated mode."""


class DimensionLimitError(DephmeterError):
    """Brute-force state would exceed the configured dimension budget."""


class DegenerateDynamicsError(DephmeterError):
    """State-volume series gained volume without ever losing any."""
