"""Wave attenuation in viscoelastic media with CrF creep compliances.

Subpackages and modules:

``measures``
    positive Radon measures on ]0, inf[ and their integrals.
``matfun``
    CM, Bernstein, CrF and complete Bernstein representations and tests.
``duality``
    creep compliance <-> Bernstein function and imaginary-axis evaluation.
``acoustics``
    wave numbers, attenuation bounds, Green's functions, power-law fits.
"""

from . import acoustics, duality, matfun, measures
from .errors import (
    BranchError,
    DegenerateMaterialError,
    DivergenceError,
    DomainError,
    FitError,
    InconsistencyError,
    InvalidKernelError,
    PrecisionError,
    QuadratureError,
    ResolutionError,
    SingularModulusError,
    ViscowaveError,
)

__version__ = "0.1.0"

__all__ = [
    "acoustics",
    "duality",
    "matfun",
    "measures",
    "BranchError",
    "DegenerateMaterialError",
    "DivergenceError",
    "DomainError",
    "FitError",
    "InconsistencyError",
    "InvalidKernelError",
    "PrecisionError",
    "QuadratureError",
    "ResolutionError",
    "SingularModulusError",
    "ViscowaveError",
    "__version__",
]
