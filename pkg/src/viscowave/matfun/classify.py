"""Sample-based class membership tests.

None of these prove membership.  They check the defining inequalities on a
finite set of points, with a tolerance of 1e-9 relative to the local function
magnitude so the verdicts do not flip between platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np
from scipy.special import comb

from ..errors import DomainError, PrecisionError, ViscowaveError

__all__ = [
    "Verdict",
    "DEFAULT_CLASS_TOL",
    "classify_crf",
    "check_cm_differences",
    "check_bf_differences",
    "nevanlinna_check",
]

DEFAULT_CLASS_TOL = 1e-9
_EPS = np.finfo(float).eps
# Rounding noise must stay below this fraction of the largest retained difference.
_NOISE_FRACTION = 1e-3


@dataclass(frozen=True)
class Verdict:
    """Outcome of one class test.

    ``witness`` is the point where the violation is located (``None`` when
    the test passes); ``order`` is set by the difference tests.
    """

    cls: str
    passed: bool
    witness: Any = None
    order: int | None = None
    tolerances: dict = field(default_factory=dict)
    detail: str = ""

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, complex):
            w = [w.real, w.imag]
        elif isinstance(w, tuple):
            w = list(w)
        out = {"class": self.cls, "pass": self.passed, "witness": w,
               "tolerances": dict(self.tolerances)}
        if self.order is not None:
            out["order"] = self.order
        if self.detail:
            out["detail"] = self.detail
        return out


def classify_crf(samples, tol: float = DEFAULT_CLASS_TOL) -> Verdict:
    """Check non-negativity, monotonicity and concavity of sampled data.

    ``samples`` is a sequence of ``(t, f(t))`` pairs (or a 2-column array)
    with strictly increasing ``t >= 0``.  Concavity is tested on every
    consecutive triple ``x < y < z`` by writing ``y = th*x + (1-th)*z`` and
    requiring ``th*f(x) + (1-th)*f(z) <= f(y)``.  The witness is the first
    violating point (or triple, for concavity).
    """
    arr = np.asarray(samples, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 3:
        raise DomainError("classify_crf needs at least 3 (t, f) samples")
    t, f = arr[:, 0], arr[:, 1]
    if np.any(np.diff(t) <= 0.0):
        raise DomainError("sample times must be strictly increasing")
    if t[0] < 0.0:
        raise DomainError("sample times must be non-negative")
    tols = {"relative": tol}

    scale = np.abs(f)
    bad = np.nonzero(f < -tol * scale)[0]
    if bad.size:
        i = bad[0]
        return Verdict("crf", False, float(t[i]), tolerances=tols, detail="negative value")

    local = np.maximum(scale[:-1], scale[1:])
    bad = np.nonzero(np.diff(f) < -tol * local)[0]
    if bad.size:
        i = bad[0]
        return Verdict("crf", False, (float(t[i]), float(t[i + 1])), tolerances=tols,
                       detail="decreasing")

    x, y, z = t[:-2], t[1:-1], t[2:]
    fx, fy, fz = f[:-2], f[1:-1], f[2:]
    theta = (z - y) / (z - x)
    chord = theta * fx + (1.0 - theta) * fz
    local = np.maximum(np.maximum(scale[:-2], scale[1:-1]), scale[2:])
    bad = np.nonzero(chord > fy + tol * local)[0]
    if bad.size:
        i = bad[0]
        return Verdict("crf", False, (float(x[i]), float(y[i]), float(z[i])), tolerances=tols,
                       detail="not concave")
    return Verdict("crf", True, tolerances=tols)


def _evaluate(f, x):
    x = np.asarray(x, dtype=float)
    try:
        y = np.asarray(f(x), dtype=float)
        if y.shape == x.shape:
            return y
    except (TypeError, ValueError):
        pass
    return np.array([float(f(v)) for v in x.ravel()]).reshape(x.shape)


def _sign_change(centers, diffs, fail):
    """Boundary of the first failing run, interpolated to the zero crossing."""
    idx = np.nonzero(fail)[0]
    i0 = idx[0]
    if i0 == 0:
        i1 = i0
        while i1 + 1 < len(fail) and fail[i1 + 1]:
            i1 += 1
        if i1 + 1 == len(fail):
            return float(centers[0])
        j, k = i1, i1 + 1
    else:
        j, k = i0 - 1, i0
    d0, d1 = diffs[j], diffs[k]
    if d1 == d0:
        return float(centers[k])
    s = d0 / (d0 - d1)
    return float(centers[j] + min(max(s, 0.0), 1.0) * (centers[k] - centers[j]))


def _alternation(f, orders, sign_of, grid, h, tol, cls):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0.0):
        raise DomainError("grid must be a strictly increasing 1-d array")
    if not h > 0.0:
        raise DomainError(f"step must be positive, got {h}")
    top = max(orders)
    vals = _evaluate(f, grid[:, None] + h * np.arange(top + 1)[None, :])
    if not np.all(np.isfinite(vals)):
        raise DomainError("function is not finite on the difference stencil")
    tols = {"relative": tol, "step": h, "noise_fraction": _NOISE_FRACTION}
    for n in orders:
        k = np.arange(n + 1)
        weights = comb(n, k) * (-1.0) ** (n - k)
        delta = vals[:, : n + 1] @ weights
        signed = sign_of(n) * delta
        local = np.max(np.abs(vals[:, : n + 1]), axis=1)
        noise = 4.0 * 2.0**n * _EPS * local
        if n > 0 and np.max(noise) > _NOISE_FRACTION * np.max(np.abs(delta)):
            raise PrecisionError(
                f"order-{n} differences with step {h} are dominated by rounding noise "
                f"(noise {np.max(noise):.3g} vs signal {np.max(np.abs(delta)):.3g})")
        fail = signed < -(tol * local + noise)
        if np.any(fail):
            centers = grid + 0.5 * n * h
            witness = _sign_change(centers, signed, fail)
            first = float(centers[np.nonzero(fail)[0][0]])
            return Verdict(cls, False, witness, order=n, tolerances=tols,
                           detail=f"first failing point {first:.6g}")
    return Verdict(cls, True, order=top, tolerances=tols)


def check_cm_differences(f: Callable, order: int, grid: Sequence[float], h: float,
                         tol: float = DEFAULT_CLASS_TOL) -> Verdict:
    """Finite-difference surrogate for complete monotonicity.

    Requires ``(-1)**n * Delta_h**n f(x) >= 0`` for ``n = 0..order`` at every
    grid point.  The witness is the interpolated zero crossing that bounds
    the first run of failing points at the first failing order.

    Raises
    ------
    PrecisionError
        If rounding noise in the ``n``-th difference exceeds 1e-3 of the
        largest difference on the grid (choose a larger ``h``).
    """
    return _alternation(f, range(order + 1), lambda n: (-1.0) ** n, grid, h, tol, "cm")


def check_bf_differences(f: Callable, order: int, grid: Sequence[float], h: float,
                         tol: float = DEFAULT_CLASS_TOL) -> Verdict:
    """Finite-difference surrogate for the Bernstein property.

    ``f >= 0`` and ``(-1)**(n-1) * Delta_h**n f >= 0`` for ``n = 1..order``,
    i.e. the derivative passes :func:`check_cm_differences` at order
    ``order - 1``.
    """
    if order < 1:
        raise DomainError("Bernstein check needs order >= 1")
    return _alternation(f, range(order + 1),
                        lambda n: 1.0 if n == 0 else (-1.0) ** (n - 1), grid, h, tol,
                        "bernstein")


def nevanlinna_check(F: Callable[[complex], complex], samples: Sequence[complex],
                     tol: float = DEFAULT_CLASS_TOL) -> Verdict:
    """Check that ``F`` maps the upper half-plane into its closure.

    For each sample ``z`` (``Im z > 0``) requires ``Im F(z) >= -tol |F(z)|``
    and, at the mirror point, ``Im F(conj z) <= tol |F(conj z)|``.
    """
    tols = {"relative": tol}
    for z in samples:
        z = complex(z)
        if not z.imag > 0.0:
            raise DomainError(f"samples must lie in the upper half-plane, got {z}")
        for point, sign in ((z, 1.0), (z.conjugate(), -1.0)):
            w = complex(F(point))
            if not (math.isfinite(w.real) and math.isfinite(w.imag)):
                raise ViscowaveError(f"function is not finite at {point}")
            if sign * w.imag < -tol * abs(w):
                return Verdict("nevanlinna", False, point, tolerances=tols,
                               detail=f"Im F = {w.imag:.6g}")
    return Verdict("nevanlinna", True, tolerances=tols)
