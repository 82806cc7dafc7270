"""Power-law fits ``atten = A omega**alpha`` in log-log coordinates."""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from ..errors import FitError
from .waves import AttenuationCurve

__all__ = ["PowerLawFit", "fit_powerlaw", "MIN_ROWS"]

MIN_ROWS = 8


class PowerLawFit(NamedTuple):
    A: float
    alpha: float
    r2: float
    n: int

    def to_dict(self) -> dict:
        return {"A": self.A, "alpha": self.alpha, "r2": self.r2, "n": self.n}


def fit_powerlaw(curve: AttenuationCurve, band: Sequence[float] | None = None) -> PowerLawFit:
    """Least-squares line through ``(log omega, log atten)`` on ``band``.

    Raises
    ------
    FitError
        If fewer than 8 rows fall in the band or any attenuation there is
        not positive (a lossless material has no exponent).
    """
    om, at = curve.omega, curve.atten
    if band is not None:
        lo, hi = map(float, band)
        if not 0.0 < lo < hi:
            raise FitError(f"band must satisfy 0 < lo < hi, got {band}")
        sel = (om >= lo) & (om <= hi)
        om, at = om[sel], at[sel]
    if om.size < MIN_ROWS:
        raise FitError(f"need at least {MIN_ROWS} rows in the band, got {om.size}")
    if not np.all(at > 0.0) or not np.all(np.isfinite(at)):
        raise FitError("attenuation must be positive and finite throughout the band")
    lx, ly = np.log(om), np.log(at)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / ss_tot if ss_tot > 0.0 else 1.0
    return PowerLawFit(math.exp(intercept), float(slope), r2, int(om.size))
