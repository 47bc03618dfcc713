"""Physical parameters of the qubit + meter + environment collision model."""

import math
from dataclasses import dataclass, field

_NORM_TOL = 1e-12
_BALANCED = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class ModelParams:
    """Knobs of the model.

    omega_coupling   qubit-meter coupling strength, in units of 1/tau
    omega_meter      meter frequency, in units of 1/tau
    theta            meter-ancilla beam-splitter mixing angle, radians
    tau              collision duration (sets the time unit; default 1)
    alpha0, beta0    initial qubit amplitudes on the lower/upper pointer
                     state; |alpha0|^2 + |beta0|^2 must equal 1

    All dynamics depends only on the products omega_coupling*tau and
    omega_meter*tau and on theta, so tau = 1 is the natural choice.
    """

    omega_coupling: float
    omega_meter: float
    theta: float
    tau: float = 1.0
    alpha0: complex = field(default=_BALANCED)
    beta0: complex = field(default=_BALANCED)

    def __post_init__(self):
        if self.omega_coupling < 0.0:
            raise ValueError("omega_coupling must be >= 0")
        if self.tau <= 0.0:
            raise ValueError("tau must be > 0")
        if not 0.0 <= self.theta < 2.0 * math.pi:
            raise ValueError("theta must lie in [0, 2*pi)")
        norm = abs(self.alpha0) ** 2 + abs(self.beta0) ** 2
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(
                f"initial qubit state not normalized: |a|^2+|b|^2 = {norm!r}"
            )

    @classmethod
    def from_damping(cls, omega_coupling, omega_meter, damping_rate, tau=1.0,
                     alpha0=_BALANCED, beta0=_BALANCED):
        """Build parameters from a meter damping rate instead of an angle.

        The beam-splitter angle is theta = 2*sqrt(damping_rate*tau); only
        cos(theta/2) and sin(theta/2)^2 enter any observable, so the angle
        is taken positive.
        """
        if damping_rate < 0.0:
            raise ValueError("damping_rate must be >= 0")
        theta = 2.0 * math.sqrt(damping_rate * tau)
        return cls(omega_coupling, omega_meter, theta, tau, alpha0, beta0)

    @classmethod
    def balanced(cls, omega_coupling, omega_meter, theta, tau=1.0):
        """Parameters with the maximally coherent initial qubit state."""
        return cls(omega_coupling, omega_meter, theta, tau)

    @property
    def pop_down(self):
        """Population |alpha0|^2 of the lower pointer state."""
        return abs(self.alpha0) ** 2

    @property
    def pop_up(self):
        """Population |beta0|^2 of the upper pointer state."""
        return abs(self.beta0) ** 2
