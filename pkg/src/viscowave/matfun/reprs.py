"""Evaluable representations of CM, Bernstein, CrF and complete Bernstein
functions.

All representations are frozen dataclasses.  The creep kernels carry their own
closed-form primitive ``int_0^t k`` and Laplace symbol ``p * k~(p)`` so the
time and Laplace domains can be evaluated without quadrature whenever the
kernel allows it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.special import gamma, gammainc

from ..errors import BranchError, DomainError, InconsistencyError, InvalidKernelError
from ..measures import DEFAULT_RTOL, RadonMeasure, check_bs1, integrate, tail_mass

__all__ = [
    "Kernel",
    "PowerKernel",
    "ExpSumKernel",
    "TableKernel",
    "SumKernel",
    "TailKernel",
    "ZERO_KERNEL",
    "CMRepr",
    "BernsteinRepr",
    "CrfRepr",
    "StieltjesRepr",
    "SlopeDiagnostics",
    "eval_cm",
    "eval_bf",
    "eval_crf",
    "eval_cbf",
    "limit_slope",
    "stretched_exp_creep",
]


# ---------------------------------------------------------------------------
# creep kernels
# ---------------------------------------------------------------------------


class Kernel:
    """Non-negative, non-increasing, locally integrable ``k`` with k(inf) = 0."""

    kind = "abstract"

    def __call__(self, t: float) -> float:  # pragma: no cover - abstract
        raise NotImplementedError

    def primitive(self, t: float) -> float:  # pragma: no cover - abstract
        """``int_0^t k(s) ds``."""
        raise NotImplementedError

    def laplace_symbol(self, p):  # pragma: no cover - abstract
        """``p * k~(p)`` for complex ``p`` with ``Re p >= 0`` (array friendly)."""
        raise NotImplementedError

    def parts(self) -> tuple["Kernel", ...]:
        return (self,)


@dataclass(frozen=True)
class PowerKernel(Kernel):
    """``k(t) = c * t**(alpha - 1)`` with ``0 < alpha < 1``.

    Its primitive is ``(c / alpha) * t**alpha``.
    """

    c: float
    alpha: float
    kind = "power"

    def __post_init__(self):
        if not (self.c >= 0.0 and math.isfinite(self.c)):
            raise InvalidKernelError(f"power kernel needs c >= 0, got {self.c}")
        if not 0.0 < self.alpha < 1.0:
            raise InvalidKernelError(f"power kernel needs 0 < alpha < 1, got {self.alpha}")

    def __call__(self, t):
        return math.inf if t == 0.0 else self.c * t ** (self.alpha - 1.0)

    def primitive(self, t):
        return self.c / self.alpha * t**self.alpha

    def laplace_symbol(self, p):
        p = np.asarray(p, dtype=complex)
        out = self.c * gamma(self.alpha) * np.power(p, 1.0 - self.alpha, where=p != 0,
                                                    out=np.zeros_like(p))
        return out if out.ndim else complex(out)


@dataclass(frozen=True)
class ExpSumKernel(Kernel):
    """``k(t) = sum(w_i * exp(-r_i t))`` -- a Prony series of retardation terms."""

    terms: tuple[tuple[float, float], ...] = ()
    kind = "expsum"

    def __post_init__(self):
        terms = tuple((float(w), float(r)) for w, r in self.terms)
        for w, r in terms:
            if not (w >= 0.0 and math.isfinite(w)):
                raise InvalidKernelError(f"Prony weight must be finite and >= 0, got {w}")
            if not (r > 0.0 and math.isfinite(r)):
                raise InvalidKernelError(f"Prony rate must be finite and > 0, got {r}")
        object.__setattr__(self, "terms", terms)

    def __call__(self, t):
        return sum(w * math.exp(-r * t) for w, r in self.terms)

    def primitive(self, t):
        return sum(-w / r * math.expm1(-r * t) for w, r in self.terms)

    def laplace_symbol(self, p):
        p = np.asarray(p, dtype=complex)
        out = np.zeros_like(p)
        for w, r in self.terms:
            out = out + w * p / (p + r)
        return out if out.ndim else complex(out)


ZERO_KERNEL = ExpSumKernel(())


@dataclass(frozen=True)
class TableKernel(Kernel):
    """Right-continuous step function.

    ``k(t) = levels[i]`` for ``knots[i-1] <= t < knots[i]`` (with an implicit
    ``knots[-1] = 0``) and ``k(t) = 0`` for ``t >= knots[-1]``.
    """

    knots: tuple[float, ...]
    levels: tuple[float, ...]
    kind = "table"

    def __post_init__(self):
        knots = tuple(float(x) for x in self.knots)
        levels = tuple(float(x) for x in self.levels)
        if len(knots) != len(levels) or not knots:
            raise InvalidKernelError("table kernel needs one level per knot")
        if knots[0] <= 0.0 or any(b <= a for a, b in zip(knots, knots[1:])):
            raise InvalidKernelError("table kernel knots must be positive and increasing")
        if any(not (v >= 0.0 and math.isfinite(v)) for v in levels):
            raise InvalidKernelError("table kernel levels must be finite and >= 0")
        if any(b > a for a, b in zip(levels, levels[1:])):
            raise InvalidKernelError("table kernel levels must be non-increasing")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "levels", levels)

    @property
    def drops(self) -> tuple[float, ...]:
        """Downward jump at each knot (the last one falls to zero)."""
        nxt = self.levels[1:] + (0.0,)
        return tuple(a - b for a, b in zip(self.levels, nxt))

    def __call__(self, t):
        i = int(np.searchsorted(self.knots, t, side="right"))
        return self.levels[i] if i < len(self.levels) else 0.0

    def primitive(self, t):
        total, left = 0.0, 0.0
        for knot, level in zip(self.knots, self.levels):
            if t <= left:
                break
            total += level * (min(t, knot) - left)
            left = knot
        return total

    def laplace_symbol(self, p):
        p = np.asarray(p, dtype=complex)
        out = np.zeros_like(p)
        for knot, drop in zip(self.knots, self.drops):
            out = out - drop * np.expm1(-p * knot)
        return out if out.ndim else complex(out)


@dataclass(frozen=True)
class SumKernel(Kernel):
    """Pointwise sum of kernels; sums of CrF kernels are CrF kernels."""

    components: tuple[Kernel, ...]
    kind = "sum"

    def __post_init__(self):
        flat: list[Kernel] = []
        for k in self.components:
            if not isinstance(k, Kernel):
                raise InvalidKernelError(f"not a kernel: {k!r}")
            flat.extend(k.parts())
        object.__setattr__(self, "components", tuple(flat))

    def __call__(self, t):
        return sum(k(t) for k in self.components)

    def primitive(self, t):
        return sum(k.primitive(t) for k in self.components)

    def laplace_symbol(self, p):
        out = sum((np.asarray(k.laplace_symbol(p)) for k in self.components),
                  np.zeros_like(np.asarray(p, dtype=complex)))
        return out if np.ndim(out) else complex(out)

    def parts(self):
        return self.components


@dataclass(frozen=True)
class TailKernel(Kernel):
    """``k(t) = measure(]t, inf[)`` for a measure without closed-form tail.

    The primitive uses ``int_0^t m(]s, inf[) ds = int min(r, t) m(dr)``.
    """

    measure: RadonMeasure
    rtol: float = DEFAULT_RTOL
    kind = "tail"

    def __post_init__(self):
        if not check_bs1(self.measure).holds:
            raise InvalidKernelError("tail kernel measure violates the Levy condition")

    def __call__(self, t):
        return math.inf if t <= 0.0 else tail_mass(self.measure, t, self.rtol)

    def primitive(self, t):
        if t <= 0.0:
            return 0.0
        return integrate(self.measure, lambda r: min(r, t), rtol=self.rtol, scales=(t,))

    def laplace_symbol(self, p):
        arr = np.asarray(p, dtype=complex)
        vals = np.array([self._symbol(q) for q in arr.ravel()], dtype=complex).reshape(arr.shape)
        return vals if vals.ndim else complex(vals)

    def _symbol(self, q):
        if q.real < 0.0:
            return complex(np.nan, np.nan)
        if q == 0:
            return 0j
        if q.real == 0.0:
            # oscillatory on the imaginary axis; use the dedicated evaluator
            from ..duality import eval_bf_imag_axis

            return eval_bf_imag_axis(BernsteinRepr(0.0, 0.0, self.measure), -q.imag,
                                     self.rtol).value
        return integrate(self.measure, lambda r: -np.expm1(-q * r), rtol=self.rtol,
                         scales=(1.0 / abs(q),))


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


def _nonneg(name, value):
    value = float(value)
    if not (value >= 0.0 and math.isfinite(value)):
        raise DomainError(f"{name} must be finite and >= 0, got {value}")
    return value


@dataclass(frozen=True)
class CMRepr:
    """Completely monotonic ``f(t) = int exp(-t r) mu(dr)``."""

    measure: RadonMeasure


@dataclass(frozen=True)
class BernsteinRepr:
    """Bernstein ``f(t) = a + b t + int (1 - exp(-r t)) lambda(dr)``."""

    a: float = 0.0
    b: float = 0.0
    measure: RadonMeasure = field(default_factory=RadonMeasure)

    def __post_init__(self):
        object.__setattr__(self, "a", _nonneg("a", self.a))
        object.__setattr__(self, "b", _nonneg("b", self.b))


@dataclass(frozen=True)
class CrfRepr:
    """Creep compliance ``J(t) = a + b t + int_0^t k(s) ds``.

    ``a`` is the instantaneous compliance J(0), ``b`` the steady-flow slope
    (inverse Newtonian viscosity), ``kernel`` the retardation part.
    """

    a: float = 0.0
    b: float = 0.0
    kernel: Kernel = ZERO_KERNEL

    def __post_init__(self):
        object.__setattr__(self, "a", _nonneg("a", self.a))
        object.__setattr__(self, "b", _nonneg("b", self.b))
        if not isinstance(self.kernel, Kernel):
            raise InvalidKernelError(f"not a kernel: {self.kernel!r}")

    def __call__(self, t):
        return eval_crf(self, t)


@dataclass(frozen=True)
class StieltjesRepr:
    """Complete Bernstein ``f(x) = a + b x + x int mu(dr) / (x + r)``."""

    a: float = 0.0
    b: float = 0.0
    measure: RadonMeasure = field(default_factory=RadonMeasure)

    def __post_init__(self):
        object.__setattr__(self, "a", _nonneg("a", self.a))
        object.__setattr__(self, "b", _nonneg("b", self.b))

    def __call__(self, z):
        return eval_cbf(self, z)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _scale(t):
    # natural scale of exp(-t r) in r
    return (1.0 / t,) if t > 0.0 else ()


def eval_cm(f: CMRepr, t: float, rtol: float = DEFAULT_RTOL) -> float:
    if not t > 0.0:
        raise DomainError(f"completely monotonic functions live on t > 0, got {t}")
    return integrate(f.measure, lambda r: math.exp(-t * r), rtol=rtol, scales=_scale(t))


def eval_bf(f: BernsteinRepr, t: float, rtol: float = DEFAULT_RTOL) -> float:
    if not t >= 0.0:
        raise DomainError(f"Bernstein functions live on t >= 0, got {t}")
    if t == 0.0:
        return f.a
    return f.a + f.b * t + integrate(f.measure, lambda r: -math.expm1(-r * t),
                                       rtol=rtol, scales=_scale(t))


def eval_crf(J: CrfRepr, t: float) -> float:
    if not t >= 0.0:
        raise DomainError(f"creep compliance lives on t >= 0, got {t}")
    return J.a + J.b * t + (J.kernel.primitive(t) if t > 0.0 else 0.0)


def eval_cbf(f: StieltjesRepr, z: complex, rtol: float = DEFAULT_RTOL) -> complex:
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise BranchError(f"complete Bernstein functions are cut along ]-inf, 0], got {z}")
    if f.measure.is_zero:
        stieltjes = 0.0
    else:
        stieltjes = integrate(f.measure, lambda r: 1.0 / (z + r) + 0j, rtol=rtol,
                              scales=(abs(z),))
    return f.a + f.b * z + z * stieltjes


class SlopeDiagnostics(NamedTuple):
    slope: float
    times: tuple[float, ...]
    ratios: tuple[float, ...]


def limit_slope(f: BernsteinRepr, times: Sequence[float], tol: float = 1e-9
                ) -> SlopeDiagnostics:
    """Asymptotic slope ``lim f(T)/T`` with the finite-T ratios as evidence.

    The ratios of a Bernstein function decrease toward ``f.b``; a ratio that
    increases, or undershoots ``f.b``, by more than ``tol`` relative raises
    :class:`InconsistencyError`.
    """
    times = tuple(float(T) for T in times)
    if any(T <= 0.0 for T in times) or any(b <= a for a, b in zip(times, times[1:])):
        raise DomainError("probe times must be positive and increasing")
    ratios = tuple(eval_bf(f, T) / T for T in times)
    for T, prev, cur in zip(times[1:], ratios, ratios[1:]):
        if cur > prev + tol * abs(prev):
            raise InconsistencyError(f"f(T)/T increased at T={T}: {prev} -> {cur}")
    for T, cur in zip(times, ratios):
        if cur < f.b - tol * max(abs(f.b), 1.0):
            raise InconsistencyError(f"f(T)/T fell below the slope at T={T}: {cur} < {f.b}")
    return SlopeDiagnostics(f.b, times, ratios)


def stretched_exp_creep(alpha: float):
    """``x -> int_0^x exp(-y**alpha) dy`` and its derivative.

    A CrF for every ``alpha > 0``, but Bernstein only for ``alpha <= 1``.
    For ``alpha > 1`` the third derivative is proportional to
    ``alpha x**alpha - (alpha - 1)`` and so changes sign at
    ``((alpha - 1) / alpha)**(1 / alpha)``.  Returns ``(f, df)``; both
    accept arrays.
    """
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    s = 1.0 / alpha
    scale = gamma(1.0 + s)

    def f(x):
        x = np.asarray(x, dtype=float)
        return scale * gammainc(s, np.power(np.maximum(x, 0.0), alpha))

    def df(x):
        x = np.asarray(x, dtype=float)
        return np.exp(-np.power(np.maximum(x, 0.0), alpha))

    return f, df
