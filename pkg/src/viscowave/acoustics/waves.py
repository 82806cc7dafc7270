"""Materials, the complex wave number and attenuation curves.

Plane waves are ``exp(p t - kappa(p) |x|)`` with ``kappa(p) = rho**0.5 *
p**0.5 * g(p)**0.5`` and ``g(p) = p**2 J~(p)``.  On the imaginary axis
``p = -i omega`` the attenuation is ``Re kappa`` and the phase velocity is
``omega / (-Im kappa)``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .._parallel import pmap
from ..duality import crf_to_bf, eval_bf_imag_axis, laplace_symbol
from ..errors import DegenerateMaterialError, DomainError
from ..matfun import CrfRepr, Verdict, classify_crf
from ..measures import DEFAULT_RTOL

__all__ = [
    "Material",
    "AttenuationCurve",
    "CurveRow",
    "CSV_COLUMNS",
    "ROUTES",
    "wavenumber",
    "wavenumbers",
    "curve",
    "wavefront_speed",
]

CSV_COLUMNS = ("omega", "kappa_R", "kappa_I", "atten", "phase_velocity")
ROUTES = ("spectral", "laplace")


@dataclass(frozen=True)
class Material:
    """A CrF creep compliance ``J`` (1/Pa) with mass density ``rho`` (kg/m^3)."""

    J: CrfRepr
    rho: float = 1.0

    def __post_init__(self):
        rho = float(self.rho)
        if not (rho > 0.0 and math.isfinite(rho)):
            raise DomainError(f"density must be positive and finite, got {self.rho}")
        object.__setattr__(self, "rho", rho)
        if not isinstance(self.J, CrfRepr):
            raise TypeError("J must be a CrfRepr")

    def check(self, times: Sequence[float] | None = None) -> Verdict:
        """Sample ``J`` and run :func:`classify_crf` on it."""
        t = np.geomspace(1e-3, 1e3, 61) if times is None else np.asarray(times, float)
        return classify_crf(np.column_stack([t, [self.J(x) for x in t]]))


def _symbol(mat: Material, omega: float, route: str, rtol: float) -> complex:
    if route == "spectral":
        return eval_bf_imag_axis(crf_to_bf(mat.J), omega, rtol).value
    if route == "laplace":
        return complex(laplace_symbol(mat.J, complex(0.0, -omega)))
    raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")


def _kappa(rho: float, omega: float, F: complex) -> complex:
    if F == 0:
        raise DegenerateMaterialError(f"p**2 J~(p) vanishes at omega={omega}")
    k = math.sqrt(rho) * np.sqrt(complex(0.0, -omega)) * np.sqrt(F)
    k = complex(k)
    return -k if k.real < 0.0 else k


def wavenumber(mat: Material, omega: float, route: str = "spectral",
               rtol: float = DEFAULT_RTOL) -> complex:
    """Complex wave number ``kappa(-i omega)`` with ``Re kappa >= 0``.

    ``route="spectral"`` continues ``g`` from its Levy measure;
    ``route="laplace"`` uses the kernel's closed-form transform.  Negative
    frequencies give the complex conjugate.

    Examples
    --------
    >>> from viscowave.matfun import CrfRepr
    >>> wavenumber(Material(CrfRepr(0.0, 1.0)), 2.0)
    (1-1j)
    """
    omega = float(omega)
    if omega == 0.0 or not math.isfinite(omega):
        raise DomainError(f"frequency must be finite and nonzero, got {omega}")
    w = abs(omega)
    k = _kappa(mat.rho, w, _symbol(mat, w, route, rtol))
    return k if omega > 0.0 else k.conjugate()


def wavenumbers(mat: Material, omegas, route: str = "spectral",
                rtol: float = DEFAULT_RTOL) -> np.ndarray:
    """Vectorised :func:`wavenumber`; ``omega == 0`` maps to ``kappa = 0``."""
    om = np.asarray(omegas, dtype=float).ravel()
    if route not in ROUTES:
        raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")
    if route == "laplace":
        w = np.abs(om)
        F = np.asarray(laplace_symbol(mat.J, -1j * w), dtype=complex).reshape(w.shape)
        out = np.zeros(om.shape, dtype=complex)
        for i, (x, f) in enumerate(zip(w, F)):
            if x != 0.0:
                out[i] = _kappa(mat.rho, x, complex(f))
    else:
        out = np.array(pmap(lambda x: 0j if x == 0.0 else wavenumber(mat, abs(x), route, rtol),
                            om), dtype=complex)
    neg = om < 0.0
    out[neg] = out[neg].conj()
    return out


class CurveRow(NamedTuple):
    omega: float
    kappa_R: float
    kappa_I: float
    atten: float
    phase_velocity: float


@dataclass(frozen=True)
class AttenuationCurve:
    """Sampled wave-number data on a strictly increasing frequency grid."""

    omega: np.ndarray
    kappa_R: np.ndarray
    kappa_I: np.ndarray
    atten: np.ndarray
    phase_velocity: np.ndarray

    def __post_init__(self):
        cols = [np.asarray(getattr(self, c), dtype=float).ravel() for c in CSV_COLUMNS]
        n = cols[0].size
        if any(c.size != n for c in cols):
            raise DomainError("curve columns must have equal length")
        if n > 1 and np.any(np.diff(cols[0]) <= 0.0):
            raise DomainError("curve frequencies must be strictly increasing")
        for name, c in zip(CSV_COLUMNS, cols):
            c.flags.writeable = False
            object.__setattr__(self, name, c)

    def __len__(self) -> int:
        return self.omega.size

    def rows(self) -> Iterator[CurveRow]:
        for vals in zip(*(getattr(self, c) for c in CSV_COLUMNS)):
            yield CurveRow(*map(float, vals))

    @classmethod
    def from_kappa(cls, omega, kappa) -> "AttenuationCurve":
        omega = np.asarray(omega, dtype=float)
        kappa = np.asarray(kappa, dtype=complex)
        kr, ki = kappa.real, kappa.imag
        with np.errstate(divide="ignore", invalid="ignore"):
            c = np.where(ki < 0.0, omega / -ki, np.inf)
        return cls(omega, kr, ki, kr.copy(), c)

    def to_csv(self, dest=None) -> str:
        """Write ``omega,kappa_R,kappa_I,atten,phase_velocity``; returns the text."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows():
            w.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
        if dest is not None:
            Path(dest).write_text(text)
        return text

    @classmethod
    def from_csv(cls, source) -> "AttenuationCurve":
        """Read a curve file.  Only ``omega`` and ``atten`` are required."""
        text = Path(source).read_text() if not hasattr(source, "read") else source.read()
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames is None or not {"omega", "atten"} <= set(reader.fieldnames):
            raise DomainError("curve file needs at least the columns omega and atten")
        data = {c: [] for c in CSV_COLUMNS}
        for rec in reader:
            for c in CSV_COLUMNS:
                data[c].append(float(rec[c]) if rec.get(c) not in (None, "") else math.nan)
        return cls(**{c: np.array(v, dtype=float) for c, v in data.items()})


def _fmt(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return repr(float(v))


def curve(mat: Material, grid, route: str = "spectral",
          rtol: float = DEFAULT_RTOL) -> AttenuationCurve:
    """Sweep :func:`wavenumber` over a positive, increasing frequency grid."""
    om = np.asarray(grid, dtype=float).ravel()
    if om.size and (np.any(om <= 0.0) or np.any(np.diff(om) <= 0.0)):
        raise DomainError("curve grid must be positive and strictly increasing")
    if om.size == 0:
        return AttenuationCurve.from_kappa(om, np.zeros(0, complex))
    return AttenuationCurve.from_kappa(om, wavenumbers(mat, om, route, rtol))


def wavefront_speed(mat: Material) -> float:
    """``(rho * J(0))**-0.5``; infinite when there is no instantaneous compliance."""
    if mat.J.a == 0.0:
        return math.inf
    return 1.0 / math.sqrt(mat.rho * mat.J.a)
