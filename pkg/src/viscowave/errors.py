"""Exception hierarchy shared by all viscowave modules."""


class ViscowaveError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ViscowaveError, ValueError):
    """An argument lies outside the domain of the operation."""


class BranchError(DomainError):
    """A complex argument lies on a branch cut (the closed negative real axis)."""


class InvalidKernelError(DomainError):
    """A creep kernel violates non-negativity or monotonicity."""


class QuadratureError(ViscowaveError, ArithmeticError):
    """Quadrature failed to reach the requested tolerance.

    The last estimate and its error bound are kept on the exception so callers
    can decide whether a looser answer is still usable.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")
        self.estimate = estimate
        self.error = error


class DivergenceError(QuadratureError):
    """An integral over an unbounded range grows without bound."""


class PrecisionError(ViscowaveError, ArithmeticError):
    """Rounding noise dominates finite differences; no verdict is possible."""


class InconsistencyError(ViscowaveError, ArithmeticError):
    """A numerical sequence contradicts a property that must hold exactly."""


class SingularModulusError(ViscowaveError, ZeroDivisionError):
    """The Laplace-domain symbol vanishes, so the complex modulus is undefined."""


class DegenerateMaterialError(ViscowaveError, ValueError):
    """The material has identically zero creep compliance."""


class ResolutionError(ViscowaveError, ValueError):
    """A sampling grid is too coarse for the requested synthesis."""


class FitError(ViscowaveError, ValueError):
    """A power law cannot be fitted to the supplied data."""
