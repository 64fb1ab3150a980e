class QuantumWassersteinError(Exception):
    pass


class DimensionMismatchError(QuantumWassersteinError):
    pass


class NotHermitianError(QuantumWassersteinError):
    pass


class NotPsdError(QuantumWassersteinError):
    pass


class InvalidStateError(QuantumWassersteinError):
    pass


class WrongDimensionError(QuantumWassersteinError):
    pass


class OutsideBlochBallError(QuantumWassersteinError):
    pass


class NeitherPureError(QuantumWassersteinError):
    pass


class ObservableNotPsdError(QuantumWassersteinError):
    pass


class NotTracePreservingError(QuantumWassersteinError):
    pass


class SolverFailureError(QuantumWassersteinError):
    """The SDP backend stopped without a certified (or acceptably stalled)
    solution."""

    def __init__(self, message: str, status: str = None, iterations: int = None):
        super().__init__(message)
        self.status = status
        self.iterations = iterations

    def __reduce__(self):
        return type(self), (str(self), self.status, self.iterations)


class ConcavityViolationError(QuantumWassersteinError):
    """D²(ρ,ω) − ½(D²(ρ,ρ) + D²(ω,ω)) came out below tolerance.

    Analytically impossible, so this always signals solver inaccuracy.
    """

    def __init__(self, raw_squared: float):
        super().__init__(
            f"Divergence radicand {raw_squared:.3e} is below the clamp window; "
            "the SDP values are inconsistent"
        )
        self.raw_squared = raw_squared

    def __reduce__(self):
        return type(self), (self.raw_squared,)


class ExperimentPointError(QuantumWassersteinError):
    """Wraps a failure inside an experiment with the work item it happened at."""

    def __init__(self, point, cause: Exception):
        super().__init__(f"Evaluation failed at {point}: {cause}")
        self.point = point
        self.cause = cause

    def __reduce__(self):
        return type(self), (self.point, self.cause)
