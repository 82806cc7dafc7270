"""Band-limited Green's function by discrete Fourier synthesis.

The signal at distance ``x`` is

    u(x, t) = 1/(2 pi) int W(omega) exp(-i omega t - kappa(-i omega) x) d omega,

with a Gaussian source spectrum ``W``.  Because ``kappa(-i(-omega))`` is the
conjugate of ``kappa(-i omega)`` the integrand is Hermitian and ``u`` is
real, so only ``omega >= 0`` is evaluated and the sum goes through
``numpy.fft.irfft``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import DomainError, ResolutionError
from ..measures import DEFAULT_RTOL
from .waves import Material, wavefront_speed, wavenumbers

__all__ = ["GaussianWindow", "GreenSignal", "greens_function"]

# Spectrum level at the Nyquist frequency that still counts as band-limited.
_ALIAS_LEVEL = 1e-8
# Fraction of the peak used to detect the front.
_THRESHOLD = 0.5


@dataclass(frozen=True)
class GaussianWindow:
    """``W(omega) = amplitude * exp(-omega**2 / (2 width**2))``.

    In time this is a Gaussian pulse centred at ``t = 0`` with standard
    deviation ``1 / width``.
    """

    width: float = 20.0
    amplitude: float = 1.0

    def __post_init__(self):
        if not (self.width > 0.0 and math.isfinite(self.width)):
            raise DomainError(f"window width must be positive, got {self.width}")
        if not math.isfinite(self.amplitude):
            raise DomainError("window amplitude must be finite")

    @property
    def sigma(self) -> float:
        return 1.0 / self.width

    def __call__(self, omega):
        return self.amplitude * np.exp(-0.5 * (np.asarray(omega, float) / self.width) ** 2)

    def rise_time(self, leak_tol: float) -> float:
        """Time for the pulse to climb to its peak from a tenth of ``leak_tol``.

        The factor ten keeps a sampled pure delay clear of ``leak_tol``.
        """
        return self.sigma * math.sqrt(2.0 * math.log(10.0 / leak_tol))


@dataclass(frozen=True)
class GreenSignal:
    """Synthesised signal plus front diagnostics.

    ``expected_arrival`` is ``x / wavefront_speed`` (``None`` for an
    infinite speed).  ``front_arrival`` is the first crossing of half the
    peak, shifted by the Gaussian's own half-rise so a pure delay reports
    the delay.  ``leakage`` is the largest ``|u|`` before
    ``expected_arrival - rise_time`` relative to the peak;
    ``pre_front_energy`` is the energy fraction before
    ``expected_arrival - 3 rise_time``.
    """

    t: np.ndarray
    u: np.ndarray
    x: float
    speed: float
    expected_arrival: Optional[float]
    front_arrival: Optional[float]
    peak_time: Optional[float]
    rise_time: float
    leakage: Optional[float]
    pre_front_energy: Optional[float]
    wrap_error: float

    def report(self) -> dict:
        return {
            "x": self.x,
            "wavefront_speed": None if math.isinf(self.speed) else self.speed,
            "expected_arrival": self.expected_arrival,
            "front_arrival": self.front_arrival,
            "peak_time": self.peak_time,
            "rise_time": self.rise_time,
            "leakage": self.leakage,
            "pre_front_energy": self.pre_front_energy,
            "wrap_error": self.wrap_error,
            "samples": int(self.t.size),
            "dt": float(self.t[1] - self.t[0]),
        }


def _uniform(t_grid):
    t = np.asarray(t_grid, dtype=float).ravel()
    if t.size < 8:
        raise DomainError("time grid needs at least 8 samples")
    d = np.diff(t)
    dt = float(d.mean())
    if dt <= 0.0 or np.max(np.abs(d - dt)) > 1e-9 * max(dt, abs(t).max()):
        raise DomainError("time grid must be uniform and increasing")
    return t, dt


def _synthesise(mat, x, t0, dt, n, window, route, rtol):
    omega = 2.0 * np.pi * np.fft.rfftfreq(n, dt)
    W = window(omega)
    live = W != 0.0
    H = np.zeros(omega.shape, dtype=complex)
    if np.any(live):
        kap = wavenumbers(mat, omega[live], route, rtol)
        H[live] = W[live] * np.exp(-kap * x - 1j * omega[live] * t0)
    return np.fft.irfft(np.conj(H), n) / dt


def greens_function(mat: Material, x: float, t_grid, window: GaussianWindow | None = None,
                    leak_tol: float = 1e-3, route: str = "laplace",
                    rtol: float = DEFAULT_RTOL) -> GreenSignal:
    """Band-limited response at distance ``x`` on a uniform time grid.

    The record is periodic with length ``n dt``; the synthesis is repeated
    on a record twice as long and the difference on the common samples is
    the wrap-around error.

    Raises
    ------
    ResolutionError
        If the window is not negligible at the Nyquist frequency, or the
        wrap-around error exceeds ``leak_tol`` of the peak.
    """
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"distance must be positive, got {x}")
    if not 0.0 < leak_tol < 1.0:
        raise DomainError("leak_tol must lie in ]0, 1[")
    window = GaussianWindow() if window is None else window
    t, dt = _uniform(t_grid)
    n = t.size
    nyquist = math.pi / dt
    if window.amplitude != 0.0 and math.exp(-0.5 * (nyquist / window.width) ** 2) > _ALIAS_LEVEL:
        raise ResolutionError(
            f"time step {dt:g} aliases the window (Nyquist {nyquist:g} rad/s, "
            f"width {window.width:g}); use dt <= {math.pi / (window.width * 6.1):.3g}")

    u = _synthesise(mat, x, t[0], dt, n, window, route, rtol)
    u2 = _synthesise(mat, x, t[0], dt, 2 * n, window, route, rtol)[:n]
    peak = float(np.max(np.abs(u))) if n else 0.0
    wrap = float(np.max(np.abs(u - u2)))
    if peak > 0.0 and wrap > leak_tol * peak:
        raise ResolutionError(
            f"record of length {n * dt:g} is too short: wrap-around error "
            f"{wrap / peak:.3g} of the peak")

    speed = wavefront_speed(mat)
    rise = window.rise_time(leak_tol)
    expected = None if math.isinf(speed) else x / speed
    front = peak_time = leakage = energy = None
    if peak > 0.0:
        i_peak = int(np.argmax(np.abs(u)))
        peak_time = float(t[i_peak])
        if expected is not None:
            front = _front(t, u, peak) + window.sigma * math.sqrt(2.0 * math.log(1.0 / _THRESHOLD))
            before = t < expected - rise
            leakage = float(np.max(np.abs(u[before])) / peak) if np.any(before) else 0.0
            e = u**2
            energy = float(np.sum(e[t < expected - 3.0 * rise]) / np.sum(e))
    return GreenSignal(t, u, x, speed, expected, front, peak_time, rise, leakage, energy,
                       wrap)


def _front(t, u, peak):
    level = _THRESHOLD * peak
    above = np.nonzero(np.abs(u) >= level)[0]
    i = int(above[0])
    if i == 0:
        return float(t[0])
    y0, y1 = abs(u[i - 1]), abs(u[i])
    return float(t[i - 1] + (level - y0) / (y1 - y0) * (t[i] - t[i - 1]))
