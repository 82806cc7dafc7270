"""Wave propagation in CrF materials: wave numbers, bounds, pulses, fits."""

from .bound import BoundConstants, BoundReport, bound_constants, verify_bound
from .fit import PowerLawFit, fit_powerlaw
from .green import GaussianWindow, GreenSignal, greens_function
from .waves import (
    CSV_COLUMNS,
    ROUTES,
    AttenuationCurve,
    CurveRow,
    Material,
    curve,
    wavefront_speed,
    wavenumber,
    wavenumbers,
)

__all__ = [
    "CSV_COLUMNS",
    "ROUTES",
    "AttenuationCurve",
    "BoundConstants",
    "BoundReport",
    "CurveRow",
    "GaussianWindow",
    "GreenSignal",
    "Material",
    "PowerLawFit",
    "bound_constants",
    "curve",
    "fit_powerlaw",
    "greens_function",
    "verify_bound",
    "wavefront_speed",
    "wavenumber",
    "wavenumbers",
]
