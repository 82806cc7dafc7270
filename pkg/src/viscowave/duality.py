"""Laplace-domain correspondence between creep compliances and Bernstein
functions.

A creep compliance ``J(t) = a + b t + int_0^t k`` has

    g(p) = p**2 * J~(p) = a p + b + p k~(p)
         = b + a p + int (1 - exp(-p r)) lambda(dr),   lambda = -dk,

so ``g`` is a Bernstein function with offset ``J.b`` and slope ``J.a`` (the
two constants swap places).  Conversely the kernel of a Bernstein function's
pre-image is the tail ``k(r) = lambda(]r, inf[)``.

:func:`eval_bf_imag_axis` continues ``g`` to ``p = -i omega`` directly from
the spectral measure; :func:`laplace_symbol` does the same from the kernel's
closed-form transform.  The two routes are independent and are checked
against each other in the test-suite.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import DomainError, QuadratureError, SingularModulusError
from .matfun.reprs import (
    ZERO_KERNEL,
    BernsteinRepr,
    CrfRepr,
    ExpSumKernel,
    Kernel,
    PowerKernel,
    SumKernel,
    TableKernel,
    TailKernel,
)
from .measures import (
    DEFAULT_RTOL,
    ExpDensity,
    PowerDensity,
    RadonMeasure,
    check_bs1,
    integrate_density,
)

__all__ = [
    "ImagAxisValue",
    "kernel_measure",
    "tail_kernel",
    "crf_to_bf",
    "bf_to_crf",
    "eval_bf_imag_axis",
    "laplace_symbol",
    "complex_modulus",
]


# ---------------------------------------------------------------------------
# CrF <-> Bernstein
# ---------------------------------------------------------------------------


def kernel_measure(kernel: Kernel) -> RadonMeasure:
    """The positive measure ``-dk`` of a non-increasing kernel."""
    if isinstance(kernel, PowerKernel):
        if kernel.c == 0.0:
            return RadonMeasure()
        a = kernel.alpha
        return RadonMeasure(density=PowerDensity(kernel.c * (1.0 - a), a - 2.0))
    if isinstance(kernel, ExpSumKernel):
        terms = tuple((w * r, r) for w, r in kernel.terms if w > 0.0)
        return RadonMeasure(density=ExpDensity(terms)) if terms else RadonMeasure()
    if isinstance(kernel, TableKernel):
        return RadonMeasure(atoms=tuple(
            (knot, drop) for knot, drop in zip(kernel.knots, kernel.drops) if drop > 0.0))
    if isinstance(kernel, TailKernel):
        return kernel.measure
    if isinstance(kernel, SumKernel):
        total = RadonMeasure()
        for part in kernel.components:
            total = total + kernel_measure(part)
        return total
    raise TypeError(f"unsupported kernel type {type(kernel).__name__}")


def _density_tail_kernel(d) -> Kernel:
    if isinstance(d, PowerDensity) and d.lo == 0.0 and math.isinf(d.hi) \
            and -2.0 < d.exponent < -1.0:
        alpha = d.exponent + 2.0
        return PowerKernel(d.c / (1.0 - alpha), alpha)
    if isinstance(d, ExpDensity) and d.lo == 0.0 and math.isinf(d.hi):
        return ExpSumKernel(tuple((c / s, s) for c, s in d.terms))
    return TailKernel(RadonMeasure(density=d))


def tail_kernel(m: RadonMeasure) -> Kernel:
    """Kernel ``k(r) = m(]r, inf[)``, in closed form where the measure allows.

    Atoms become a :class:`TableKernel`; power and exponential densities on
    ]0, inf[ become :class:`PowerKernel` / :class:`ExpSumKernel`; anything
    else falls back to a quadrature-backed :class:`TailKernel`.
    """
    parts: list[Kernel] = []
    atoms = [(r, w) for r, w in m.atoms if w > 0.0]
    if atoms:
        merged: dict[float, float] = {}
        for r, w in atoms:
            merged[r] = merged.get(r, 0.0) + w
        knots = sorted(merged)
        weights = [merged[r] for r in knots]
        levels = list(np.cumsum(weights[::-1])[::-1])
        parts.append(TableKernel(tuple(knots), tuple(levels)))
    if m.density is not None:
        parts.extend(_density_tail_kernel(d) for d in m.density.parts())
    if not parts:
        return ZERO_KERNEL
    return parts[0] if len(parts) == 1 else SumKernel(tuple(parts))


def crf_to_bf(J: CrfRepr) -> BernsteinRepr:
    """Bernstein function ``p**2 J~(p)`` of a CrF creep compliance."""
    return BernsteinRepr(a=J.b, b=J.a, measure=kernel_measure(J.kernel))


def bf_to_crf(g: BernsteinRepr) -> CrfRepr:
    """CrF creep compliance whose transform ``p**2 J~(p)`` is ``g``."""
    if not check_bs1(g.measure).holds:
        raise DomainError("spectral measure violates the Levy condition")
    return CrfRepr(a=g.b, b=g.a, kernel=tail_kernel(g.measure))


# ---------------------------------------------------------------------------
# imaginary axis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ImagAxisValue:
    """``F(omega) = g(-i omega) = f_R + i f_I`` with its quadrature error bound."""

    omega: float
    f_R: float
    f_I: float
    error: float = 0.0

    @property
    def value(self) -> complex:
        return complex(self.f_R, self.f_I)


def _oscillatory(ds, a, b, weight, tol):
    """``int_a^b ds(s) cos|sin(s) ds`` for ``b`` finite or infinite."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        if math.isinf(b):
            val, err = quad(ds, a, b, weight=weight, wvar=1.0, epsabs=tol, limlst=200,
                            limit=200)[:2]
        else:
            val, err = quad(ds, a, b, weight=weight, wvar=1.0, epsabs=tol, epsrel=1e-12,
                            limit=400)[:2]
    return val, err


def _rotated_tail(d, a, w, rtol):
    """``int_a^inf d(r) exp(i w r) dr`` along the ray ``r = a + i u / w``.

    On that ray the oscillation becomes the decay ``exp(-u)``; the arc at
    infinity vanishes because ``d`` is bounded in the quadrant.
    """
    z0 = complex(a, 0.0)
    step = 1j / w
    parts = []
    err = 0.0
    for comp in (lambda u: d.continuation(z0 + step * u).real * math.exp(-u),
                 lambda u: d.continuation(z0 + step * u).imag * math.exp(-u)):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", IntegrationWarning)
            v, e = quad(comp, 0.0, math.inf, epsabs=0.0, epsrel=rtol * 0.1, limit=200)[:2]
        parts.append(v)
        err += e
    return step * np.exp(1j * w * a) * complex(*parts), err / w


def _part_on_axis(d, w, rtol):
    split = math.pi / w
    hint = d.tail_exponent
    cos_part = sin_part = 0.0
    err = 0.0
    if d.lo < split:
        top = min(d.hi, split)
        v, e = integrate_density(lambda r: 2.0 * math.sin(0.5 * w * r) ** 2 * d(r), d.lo, top,
                                 d.breakpoints, rtol, hint)
        cos_part += v
        err += e
        v, e = integrate_density(lambda r: math.sin(w * r) * d(r), d.lo, top, d.breakpoints,
                                 rtol, hint)
        sin_part += v
        err += e
    if d.hi <= split:
        return cos_part, sin_part, err
    start = max(d.lo, split)
    mass, e = integrate_density(d, start, d.hi, d.breakpoints, rtol, hint)
    err += e
    if math.isinf(d.hi) and d.analytic:
        osc, e = _rotated_tail(d, start, w, rtol)
        err += e
        return cos_part + mass - osc.real, sin_part + osc.imag, err
    tol = max(rtol * mass, 1e-300)
    ds = lambda s: d(s / w) / w  # noqa: E731
    edges = [start] + [x for x in d.breakpoints if start < x < d.hi] + [d.hi]
    for a, b in zip(edges, edges[1:]):
        c, ec = _oscillatory(ds, a * w, b * w, "cos", tol)
        s, es = _oscillatory(ds, a * w, b * w, "sin", tol)
        cos_part -= c
        sin_part += s
        err += ec + es
    return cos_part + mass, sin_part, err


def _density_on_axis(d, w, rtol):
    """``(int (1 - cos wr) d(r) dr, int sin(wr) d(r) dr)`` for ``w > 0``.

    Below half a period (``r < pi / w``) the integrand does not oscillate and
    goes to the adaptive integrator.  Above it the non-oscillatory mass is
    integrated separately.  The oscillatory remainder is taken along a
    rotated contour for analytic densities with unbounded support, and with
    QUADPACK's cosine/sine-weighted rules (in ``s = w r``, unit frequency)
    otherwise.
    """
    cos_part = sin_part = err = 0.0
    for part in d.parts():
        c, s, e = _part_on_axis(part, w, rtol)
        cos_part += c
        sin_part += s
        err += e
    return cos_part, sin_part, err


def eval_bf_imag_axis(g: BernsteinRepr, omega: float, rtol: float = DEFAULT_RTOL
                      ) -> ImagAxisValue:
    """Continuation ``F(omega) = g(-i omega)`` of a Bernstein function.

    ``f_R = a + int (1 - cos(r omega)) lambda(dr)`` and
    ``f_I = -b omega - int sin(r omega) lambda(dr)``.  Atoms are summed
    exactly; densities use oscillation-aware quadrature.  ``F(-omega)`` is the
    complex conjugate of ``F(omega)``.
    """
    omega = float(omega)
    if not math.isfinite(omega):
        raise DomainError(f"frequency must be finite, got {omega}")
    if omega == 0.0:
        return ImagAxisValue(0.0, g.a, 0.0)
    w = abs(omega)
    sign = math.copysign(1.0, omega)
    f_R = g.a
    f_I = -g.b * w
    err = 0.0
    if g.measure.atoms:
        r = np.array([x for x, _ in g.measure.atoms])
        wt = np.array([y for _, y in g.measure.atoms])
        f_R += float(np.sum(wt * 2.0 * np.sin(0.5 * r * w) ** 2))
        f_I -= float(np.sum(wt * np.sin(r * w)))
    if g.measure.density is not None:
        c, s, e = _density_on_axis(g.measure.density, w, rtol)
        f_R += c
        f_I -= s
        err += e
    scale = abs(f_R) + abs(f_I)
    if err > max(1e3 * rtol * scale, 1e-12 * max(scale, 1.0)):
        raise QuadratureError(f"imaginary-axis quadrature at omega={omega}",
                              estimate=complex(f_R, sign * f_I), error=err)
    return ImagAxisValue(omega, f_R, sign * f_I, err)


# ---------------------------------------------------------------------------
# Laplace domain
# ---------------------------------------------------------------------------


def laplace_symbol(J: CrfRepr, p):
    """``g(p) = p**2 J~(p) = J.a p + J.b + p k~(p)`` for ``Re p >= 0``.

    Closed form for power, Prony and table kernels; arrays are accepted.
    """
    arr = np.asarray(p, dtype=complex)
    if np.any(arr.real < 0.0):
        raise DomainError("the Laplace symbol is evaluated on Re p >= 0 only")
    out = J.a * arr + J.b + np.asarray(J.kernel.laplace_symbol(arr))
    return out if out.ndim else complex(out)


def complex_modulus(J: CrfRepr, p) -> complex:
    """``p G~(p) = 1 / (p J~(p)) = p / g(p)``."""
    p = complex(p)
    g = laplace_symbol(J, p)
    if g == 0:
        raise SingularModulusError(f"p**2 J~(p) vanishes at p={p}")
    return p / g
