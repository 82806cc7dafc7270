"""Explicit frequency bounds on the wave number.

With ``A1 = int_{]0,1]} r lambda(dr)`` and ``T = lambda(]1, inf[)`` the
continuation ``F = f_R + i f_I`` of ``g`` obeys

    |f_R| <= a + 2T + A1 |omega|,    |f_I| <= (b + A1) |omega| + T,

hence ``|F| <= 2**0.5 (m + M |omega|)`` with ``m = a + 2T``, ``M = b + A1``.
Since ``|kappa|**2 = rho |omega| |F|`` and ``sqrt(m w + M w**2) <= sqrt(M) w
+ m / (2 sqrt(M))``, both parts of ``kappa`` are bounded by ``K + L |omega|``.
When ``M = 0`` only the square-root bound ``(rho m |omega|)**0.5 2**0.25``
is available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from ..duality import crf_to_bf
from ..errors import DomainError
from ..measures import DEFAULT_RTOL, check_twoineq
from .waves import Material, wavenumbers

__all__ = ["BoundConstants", "BoundReport", "bound_constants", "verify_bound"]

_2Q = 2.0**0.25


@dataclass(frozen=True)
class BoundConstants:
    """``|kappa_R|, |kappa_I| <= K + L |omega|`` (``kind="linear"``).

    For ``kind="sqrt"`` (``M == 0``) the certified bound is
    ``S * |omega|**0.5`` with ``S = rho**0.5 2**0.25 m**0.5``; ``K`` and ``L``
    are then ``nan``.
    """

    K: float
    L: float
    m: float
    M: float
    A1: float
    T: float
    a: float
    b: float
    rho: float
    kind: str = "linear"

    @property
    def S(self) -> float:
        return math.sqrt(self.rho) * _2Q * math.sqrt(self.m)

    def bound(self, omega):
        w = np.abs(np.asarray(omega, dtype=float))
        if self.kind == "sqrt":
            return self.S * np.sqrt(w)
        return self.K + self.L * w

    def scaled(self, factor: float) -> "BoundConstants":
        """Copy with ``K`` and ``L`` multiplied by ``factor`` (for negative controls).

        A square-root record scales through ``m``, since ``S`` goes like
        ``m**0.5``.
        """
        if self.kind == "sqrt":
            return replace(self, m=self.m * factor**2)
        return replace(self, K=self.K * factor, L=self.L * factor)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "K": self.K, "L": self.L, "m": self.m, "M": self.M,
               "A1": self.A1, "T": self.T, "a": self.a, "b": self.b, "rho": self.rho}
        if self.kind == "sqrt":
            out["K"] = out["L"] = None
            out["S"] = self.S
        return out


def bound_constants(mat: Material, rtol: float = DEFAULT_RTOL) -> BoundConstants:
    """Bound constants of ``mat`` from the Levy measure of ``g = p**2 J~``.

    Raises
    ------
    DomainError
        If the measure fails the two-sided integrability condition.
    """
    g = crf_to_bf(mat.J)
    chk = check_twoineq(g.measure, rtol)
    if not chk.holds:
        raise DomainError("Levy measure is not valid: "
                          f"head={chk.head}, tail={chk.tail}")
    A1, T = float(chk.head), float(chk.tail)
    m = g.a + 2.0 * T
    M = g.b + A1
    rho = mat.rho
    if M == 0.0:
        return BoundConstants(math.nan, math.nan, m, M, A1, T, g.a, g.b, rho, "sqrt")
    K = math.sqrt(rho) * _2Q * m / (2.0 * math.sqrt(M))
    L = math.sqrt(rho) * _2Q * math.sqrt(M)
    return BoundConstants(K, L, m, M, A1, T, g.a, g.b, rho)


class BoundReport(NamedTuple):
    max_violation: float
    holds: bool
    omega_at_max: float
    tolerance: float
    constants: BoundConstants

    def to_dict(self) -> dict:
        out = self.constants.to_dict()
        out.update(max_violation=self.max_violation, holds=self.holds,
                   omega_at_max=self.omega_at_max, tolerance=self.tolerance)
        return out


def verify_bound(mat: Material, grid, constants: BoundConstants | None = None,
                 tol: float | None = None, route: str = "spectral",
                 rtol: float = DEFAULT_RTOL) -> BoundReport:
    """Maximise ``max(|kappa_R|, |kappa_I|) - bound(omega)`` over ``grid``.

    ``tol`` defaults to ``1e-9`` times the bound at the largest grid
    frequency.  The bound holds when the maximum violation is ``<= tol``.
    """
    om = np.asarray(grid, dtype=float).ravel()
    if om.size == 0 or np.any(om == 0.0):
        raise DomainError("bound grid must be non-empty and exclude omega = 0")
    c = bound_constants(mat, rtol) if constants is None else constants
    kap = wavenumbers(mat, om, route, rtol)
    size = np.maximum(np.abs(kap.real), np.abs(kap.imag))
    excess = size - c.bound(om)
    i = int(np.argmax(excess))
    if tol is None:
        tol = 1e-9 * float(np.max(c.bound(om)))
    worst = float(excess[i])
    return BoundReport(worst, bool(worst <= tol), float(om[i]), float(tol), c)
