"""Positive Radon measures on the open half-line ]0, inf[.

A measure is a finite list of atoms plus at most one density.  Every spectral
representation in the package (completely monotonic, Bernstein, complete
Bernstein) carries one of these, and every integral against it goes through
:func:`integrate`.

Intervals follow one convention throughout: a domain ``(lo, hi)`` means the
half-open set ]lo, hi].  An atom sitting exactly at ``lo`` is excluded, one at
``hi`` is included.  This is what makes ``tail_mass(m, r) = m(]r, inf[)``
right-continuous.

Quadrature
----------
Densities are integrated panel by panel with adaptive Gauss-Kronrod
(:func:`scipy.integrate.quad`) on a logarithmic subdivision of the support.
Unbounded ends (r -> 0 or r -> inf) are handled by extending one decade at a
time.  Once the decade contributions decay geometrically, the remainder is
summed in closed form and the extension stops when that remainder is below
the tolerance.  Contributions that stop shrinking (ratio >= 0.99) for three
consecutive decades while still exceeding ``rtol * |total|`` mark the integral
as divergent.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import DivergenceError, DomainError, QuadratureError

__all__ = [
    "DEFAULT_RTOL",
    "Density",
    "PowerDensity",
    "ExpDensity",
    "TableDensity",
    "SumDensity",
    "FunctionDensity",
    "RadonMeasure",
    "IntegrabilityCheck",
    "TwoInequalityCheck",
    "integrate",
    "integrate_density",
    "check_bs1",
    "check_twoineq",
    "check_licm",
    "tail_mass",
]

DEFAULT_RTOL = 1e-10

_MAX_DECADES = 300
_STALL_RATIO = 0.99
_STALL_COUNT = 3
_QUAD_LIMIT = 200


# ---------------------------------------------------------------------------
# densities
# ---------------------------------------------------------------------------


class Density:
    """Non-negative density on the support ``[lo, hi]`` (``hi`` may be inf).

    Subclasses provide ``__call__`` for scalar ``r``; values outside the
    support are zero.  ``breakpoints`` lists interior points where the density
    is not smooth so quadrature panels can be split there.  ``tail_exponent``
    is a hint for the power-law decay at infinity (``-inf`` for exponential
    decay, ``None`` when the support is bounded or the decay is unknown).
    """

    kind = "abstract"
    lo: float
    hi: float

    def __call__(self, r: float) -> float:  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return ()

    @property
    def tail_exponent(self) -> float | None:
        return None

    def parts(self) -> tuple["Density", ...]:
        return (self,)

    def continuation(self, z: complex) -> complex:
        """Analytic continuation into ``Re z > 0``; only some kinds have one."""
        raise NotImplementedError(f"{self.kind} densities have no analytic continuation")

    @property
    def analytic(self) -> bool:
        return False


def _check_support(lo: float, hi: float) -> None:
    if not (lo >= 0.0) or not (hi > lo):
        raise DomainError(f"density support must satisfy 0 <= lo < hi, got [{lo}, {hi}]")


@dataclass(frozen=True)
class PowerDensity(Density):
    """``c * r**exponent`` on ``[lo, hi]``."""

    c: float
    exponent: float
    lo: float = 0.0
    hi: float = math.inf
    kind = "power"

    def __post_init__(self):
        _check_support(self.lo, self.hi)
        if not self.c >= 0.0 or not math.isfinite(self.c):
            raise DomainError(f"power density coefficient must be finite and >= 0, got {self.c}")
        if not math.isfinite(self.exponent):
            raise DomainError("power density exponent must be finite")

    def __call__(self, r):
        if r < self.lo or r > self.hi or r <= 0.0:
            return 0.0
        return self.c * r**self.exponent

    @property
    def tail_exponent(self):
        return self.exponent if math.isinf(self.hi) else None

    @property
    def analytic(self):
        return True

    def continuation(self, z):
        return self.c * complex(z) ** self.exponent


@dataclass(frozen=True)
class ExpDensity(Density):
    """``sum(c_i * exp(-s_i * r))`` on ``[lo, hi]``."""

    terms: tuple[tuple[float, float], ...]
    lo: float = 0.0
    hi: float = math.inf
    kind = "exp"

    def __post_init__(self):
        _check_support(self.lo, self.hi)
        terms = tuple((float(c), float(s)) for c, s in self.terms)
        for c, s in terms:
            if not (c >= 0.0 and math.isfinite(c)):
                raise DomainError(f"exponential weight must be finite and >= 0, got {c}")
            if not (s > 0.0 if math.isinf(self.hi) else s >= 0.0):
                raise DomainError(f"exponential rate must be positive, got {s}")
        object.__setattr__(self, "terms", terms)

    def __call__(self, r):
        if r < self.lo or r > self.hi:
            return 0.0
        return sum(c * math.exp(-s * r) for c, s in self.terms)

    @property
    def tail_exponent(self):
        return -math.inf if math.isinf(self.hi) else None

    @property
    def analytic(self):
        return True

    def continuation(self, z):
        z = complex(z)
        return sum(c * cmath.exp(-s * z) for c, s in self.terms)


@dataclass(frozen=True)
class TableDensity(Density):
    """Piecewise-linear density through ``(r[i], values[i])``, zero outside."""

    r: tuple[float, ...]
    values: tuple[float, ...]
    kind = "table"

    def __post_init__(self):
        r = tuple(float(x) for x in self.r)
        v = tuple(float(x) for x in self.values)
        if len(r) < 2 or len(r) != len(v):
            raise DomainError("table density needs >= 2 nodes and matching value count")
        if any(b <= a for a, b in zip(r, r[1:])) or r[0] < 0.0 or not math.isfinite(r[-1]):
            raise DomainError("table density nodes must be finite, >= 0 and strictly increasing")
        if any(not (x >= 0.0 and math.isfinite(x)) for x in v):
            raise DomainError("table density values must be finite and >= 0")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "values", v)

    @property
    def lo(self):
        return self.r[0]

    @property
    def hi(self):
        return self.r[-1]

    def __call__(self, r):
        if r < self.r[0] or r > self.r[-1]:
            return 0.0
        return float(np.interp(r, self.r, self.values))

    @property
    def breakpoints(self):
        return self.r[1:-1]


@dataclass(frozen=True)
class SumDensity(Density):
    """Sum of several densities."""

    components: tuple[Density, ...]
    kind = "sum"

    def __post_init__(self):
        flat: list[Density] = []
        for d in self.components:
            flat.extend(d.parts())
        if not flat:
            raise DomainError("sum density needs at least one component")
        object.__setattr__(self, "components", tuple(flat))

    @property
    def lo(self):
        return min(d.lo for d in self.components)

    @property
    def hi(self):
        return max(d.hi for d in self.components)

    def __call__(self, r):
        return sum(d(r) for d in self.components)

    @property
    def breakpoints(self):
        pts = set()
        for d in self.components:
            pts.update(d.breakpoints)
            pts.update(x for x in (d.lo, d.hi) if 0.0 < x < math.inf)
        return tuple(sorted(x for x in pts if self.lo < x < self.hi))

    @property
    def tail_exponent(self):
        hints = [d.tail_exponent for d in self.components if math.isinf(d.hi)]
        if not hints or any(h is None for h in hints):
            return None
        return max(hints)

    def parts(self):
        return self.components


@dataclass(frozen=True)
class FunctionDensity(Density):
    """Arbitrary user-supplied density.  Not serialisable."""

    func: Callable[[float], float]
    lo: float = 0.0
    hi: float = math.inf
    hint: float | None = None
    kind = "function"

    def __post_init__(self):
        _check_support(self.lo, self.hi)
        top = self.hi if math.isfinite(self.hi) else self.lo + 10.0
        for r in np.linspace(self.lo, top, 7)[1:]:
            v = self.func(float(r))
            if not v >= 0.0:
                raise DomainError(f"density is negative or undefined at r={r}: {v}")

    def __call__(self, r):
        if r < self.lo or r > self.hi:
            return 0.0
        return self.func(r)

    @property
    def tail_exponent(self):
        return self.hint


# ---------------------------------------------------------------------------
# measure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadonMeasure:
    """Atoms ``(r, w)`` with ``r > 0, w >= 0`` plus an optional density.

    >>> m = RadonMeasure.atom(1.0, 2.0)
    >>> integrate(m, lambda r: r / (1 + r))
    1.0
    """

    atoms: tuple[tuple[float, float], ...] = ()
    density: Density | None = None

    def __post_init__(self):
        atoms = []
        for r, w in self.atoms:
            r, w = float(r), float(w)
            if not (r > 0.0 and math.isfinite(r)):
                raise DomainError(f"atom location must be finite and > 0, got {r}")
            if not (w >= 0.0 and math.isfinite(w)):
                raise DomainError(f"atom weight must be finite and >= 0, got {w}")
            atoms.append((r, w))
        object.__setattr__(self, "atoms", tuple(sorted(atoms)))

    @classmethod
    def atom(cls, r: float, w: float) -> "RadonMeasure":
        return cls(atoms=((r, w),))

    @classmethod
    def zero(cls) -> "RadonMeasure":
        return cls()

    @property
    def is_zero(self) -> bool:
        return self.density is None and all(w == 0.0 for _, w in self.atoms)

    def __add__(self, other: "RadonMeasure") -> "RadonMeasure":
        if not isinstance(other, RadonMeasure):
            return NotImplemented
        dens = [d for d in (self.density, other.density) if d is not None]
        density = None if not dens else dens[0] if len(dens) == 1 else SumDensity(tuple(dens))
        return RadonMeasure(self.atoms + other.atoms, density)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------


class _Acc:
    """Running sum of panel values with error and absolute-magnitude tallies."""

    def __init__(self):
        self.value = 0.0
        self.error = 0.0
        self.magnitude = 0.0

    def add(self, value, error):
        self.value += value
        self.error += error
        self.magnitude += abs(value)


def _quad_real(f, a, b, rtol):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        out = quad(f, a, b, epsabs=0.0, epsrel=rtol, limit=_QUAD_LIMIT, full_output=1)
    return out[0], out[1]


def _quad(g, a, b, rtol, is_complex, log_scale=False):
    """Integrate ``g`` over ``[a, b]``; optionally in the variable ``u = ln r``."""
    if log_scale:
        h = lambda u: g(math.exp(u)) * math.exp(u)  # noqa: E731
        a, b = math.log(a), math.log(b)
    else:
        h = g
    if not is_complex:
        return _quad_real(lambda x: float(h(x)), a, b, rtol)
    re, ere = _quad_real(lambda x: h(x).real, a, b, rtol)
    im, eim = _quad_real(lambda x: h(x).imag, a, b, rtol)
    return complex(re, im), ere + eim


def _geometric_points(a, b, ratio=10.0):
    if b <= a:
        return [a]
    n = max(1, math.ceil(math.log(b / a) / math.log(ratio)))
    return list(np.geomspace(a, b, n + 1))


def _extend(g, start, direction, acc, rtol, is_complex, detect=True):
    """Add decades beyond ``start`` (``direction`` -1 toward 0, +1 toward inf)."""
    prev = None
    prev_q = None
    stall = 0
    small = 0
    for k in range(_MAX_DECADES):
        lo, hi = (start * 10.0**-(k + 1), start * 10.0**-k) if direction < 0 else (
            start * 10.0**k, start * 10.0 ** (k + 1))
        if hi == math.inf or lo == 0.0:
            break
        c, e = _quad(g, lo, hi, rtol * 0.1, is_complex, log_scale=True)
        acc.add(c, e)
        total = abs(acc.value)
        mag = abs(c)
        if mag <= 1e-3 * rtol * total or mag == 0.0:
            small += 1
            if small >= 2 or mag == 0.0 and k >= 2:
                return
        else:
            small = 0
        if prev is not None and abs(prev) > 0.0:
            q = mag / abs(prev)
            if detect and q >= _STALL_RATIO and mag > rtol * total:
                stall += 1
                if stall >= _STALL_COUNT:
                    raise DivergenceError(
                        "integral diverges " + ("at 0" if direction < 0 else "at infinity"),
                        estimate=acc.value, error=math.inf)
            else:
                stall = 0
            if q < 0.95 and prev_q is not None and abs(q - prev_q) < 0.1:
                remainder = c * q / (1.0 - q)
                if abs(remainder) <= 0.1 * rtol * max(total, 1e-300):
                    acc.add(remainder, abs(remainder) * 0.1)
                    return
            prev_q = q
        prev = c
    raise QuadratureError("decade extension did not converge", estimate=acc.value,
                          error=math.inf)


def integrate_density(g: Callable[[float], float], lo: float, hi: float,
                      breakpoints: Sequence[float] = (), rtol: float = DEFAULT_RTOL,
                      tail_hint: float | None = None) -> tuple[float, float]:
    """Integrate a scalar function over ``[lo, hi]``, ``0 <= lo < hi <= inf``.

    Returns ``(value, error)``.  ``g`` may return complex values.  A
    ``tail_hint`` of ``-inf`` promises exponential decay at infinity, which
    disables divergence detection there (a slowly decaying exponential looks
    like a stall for a few decades).  Raises :class:`DivergenceError` or
    :class:`QuadratureError` on failure.
    """
    if hi <= lo:
        return 0.0, 0.0
    inner = sorted(x for x in breakpoints if lo < x < hi)
    core_lo = lo if lo > 0.0 else min([hi, 1.0] + inner)
    core_hi = hi if math.isfinite(hi) else max([core_lo, 1.0] + inner)
    probe = g(math.sqrt(core_lo * core_hi) if core_lo > 0 else 0.5 * core_hi)
    is_complex = isinstance(probe, complex) or np.iscomplexobj(probe)

    acc = _Acc()
    if core_hi > core_lo:
        pts = set(_geometric_points(core_lo, core_hi)) if core_lo > 0 else {core_lo, core_hi}
        pts.update(inner)
        pts = sorted(x for x in pts if core_lo <= x <= core_hi)
        for a, b in zip(pts, pts[1:]):
            acc.add(*_quad(g, a, b, rtol * 0.1, is_complex))
    if lo == 0.0 and core_lo > 0.0:
        _extend(g, core_lo, -1, acc, rtol, is_complex)
    if math.isinf(hi):
        _extend(g, core_hi, +1, acc, rtol, is_complex,
                detect=not (tail_hint is not None and tail_hint == -math.inf))

    floor = 100.0 * np.finfo(float).eps * acc.magnitude
    if not (acc.error <= max(rtol * abs(acc.value), floor)) and acc.error > 1e-300:
        raise QuadratureError("quadrature did not reach tolerance", estimate=acc.value,
                              error=acc.error)
    if not np.isfinite(acc.value):
        raise DivergenceError("integral is not finite", estimate=acc.value)
    return acc.value, acc.error


def integrate(m: RadonMeasure, phi: Callable[[float], float],
              domain: tuple[float, float] = (0.0, math.inf), *,
              rtol: float = DEFAULT_RTOL, scales: Sequence[float] = ()) -> float:
    """Integral of ``phi`` against ``m`` over the half-open set ]lo, hi].

    Atoms contribute ``w * phi(r)`` exactly; the density part is integrated
    adaptively to relative tolerance ``rtol``.  ``scales`` lists points where
    ``phi`` changes behaviour (e.g. ``1/t`` for ``exp(-t r)``); they are added
    to the quadrature breakpoints so that tail extrapolation starts beyond them.

    Raises
    ------
    DomainError
        If the domain is not a sub-interval of ]0, inf] or ``phi`` is not
        finite at an atom.
    QuadratureError, DivergenceError
        If the density integral cannot be brought below tolerance.
    """
    lo, hi = float(domain[0]), float(domain[1])
    if lo < 0.0 or hi < lo:
        raise DomainError(f"domain must satisfy 0 <= lo <= hi, got ]{lo}, {hi}]")
    total = 0.0
    for r, w in m.atoms:
        if lo < r <= hi:
            v = phi(r)
            if not np.isfinite(v):
                raise DomainError(f"integrand is not finite at atom r={r}")
            total = total + w * v
    d = m.density
    if d is not None:
        a, b = max(lo, d.lo), min(hi, d.hi)
        if b > a:
            pts = tuple(d.breakpoints) + tuple(x for x in scales if math.isfinite(x) and x > 0)
            value, _ = integrate_density(lambda r: d(r) * phi(r), a, b, pts, rtol,
                                         d.tail_exponent)
            total = total + value
    return total


class IntegrabilityCheck(NamedTuple):
    value: float
    holds: bool


class TwoInequalityCheck(NamedTuple):
    head: float
    tail: float
    holds: bool


def _checked(m, phi, domain, rtol):
    try:
        return integrate(m, phi, domain, rtol=rtol), True
    except QuadratureError as exc:
        return exc.estimate, False


def check_bs1(m: RadonMeasure, rtol: float = DEFAULT_RTOL) -> IntegrabilityCheck:
    """Finiteness of ``integral r / (1 + r) dm`` -- the Levy condition for a
    Bernstein spectral measure."""
    return IntegrabilityCheck(*_checked(m, lambda r: r / (1.0 + r), (0.0, math.inf), rtol))


def check_twoineq(m: RadonMeasure, rtol: float = DEFAULT_RTOL) -> TwoInequalityCheck:
    """First moment on ]0, 1] and total mass on ]1, inf[, both required finite."""
    head, ok_head = _checked(m, lambda r: r, (0.0, 1.0), rtol)
    tail, ok_tail = _checked(m, lambda r: 1.0, (1.0, math.inf), rtol)
    return TwoInequalityCheck(head, tail, ok_head and ok_tail)


def check_licm(m: RadonMeasure, rtol: float = DEFAULT_RTOL) -> IntegrabilityCheck:
    """Finiteness of ``integral 1 / (1 + r) dm``: the Laplace transform of
    ``m`` is then locally integrable at 0."""
    return IntegrabilityCheck(*_checked(m, lambda r: 1.0 / (1.0 + r), (0.0, math.inf), rtol))


def tail_mass(m: RadonMeasure, r: float, rtol: float = DEFAULT_RTOL) -> float:
    """``m(]r, inf[)``; right-continuous and non-increasing in ``r``."""
    if not r > 0.0:
        raise DomainError(f"tail_mass needs r > 0, got {r}")
    return integrate(m, lambda x: 1.0, (r, math.inf), rtol=rtol)
