"""Exception types shared across the package."""


class RadialSolveError(Exception):
    """Base class for all package-specific errors."""


class DomainError(RadialSolveError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoClassicalRegionError(RadialSolveError):
    """E = U(r) has no pair of distinct roots (energy at or below the minimum)."""


class AmbiguousRootsError(RadialSolveError):
    """More than two turning points bracket the chosen minimum."""

    def __init__(self, roots):
        self.roots = list(roots)
        super().__init__(f"ambiguous turning points, found roots {self.roots}")


class NoMinimumError(RadialSolveError):
    """The effective potential is monotone or flat: no interior minimum."""


class BelowBarrierError(RadialSolveError):
    """Discriminant of the closed-form turning-point equation is negative."""


class ComplexPhaseError(RadialSolveError):
    """U(r) < 0 somewhere on the integration path of the phase integral."""

    def __init__(self, lo, hi):
        self.interval = (lo, hi)
        super().__init__(
            f"effective potential negative on [{lo:.6g}, {hi:.6g}]; phase would be complex"
        )


class IntegrationError(RadialSolveError):
    """Adaptive quadrature failed to converge; carries the partial estimate."""

    def __init__(self, message, partial=None, error_estimate=None):
        self.partial = partial
        self.error_estimate = error_estimate
        super().__init__(message)


class ConvergenceError(RadialSolveError):
    """An iterative solver exhausted its iteration budget."""

    def __init__(self, message, last_iterate=None, iterations=0):
        self.last_iterate = last_iterate
        self.iterations = iterations
        super().__init__(message)


class NotNormalizableError(RadialSolveError):
    """The wavefunction has no finite L2 norm (free-particle continuum)."""
