"""Closure operations on complete Bernstein functions.

Both operations work pointwise with principal branches.  For ``Im z > 0`` a
complete Bernstein function has ``arg f(z)`` in ``[0, pi]``, so the principal
power simply scales the argument and the results stay in the closed upper
half-plane.
"""

from __future__ import annotations

from typing import Callable, Union

import numpy as np

from ..errors import DomainError
from .reprs import StieltjesRepr, eval_cbf

__all__ = ["cbf_power", "cbf_product", "as_function"]

CBFLike = Union[StieltjesRepr, Callable[[complex], complex]]


def as_function(f: CBFLike) -> Callable[[complex], complex]:
    if isinstance(f, StieltjesRepr):
        return lambda z: eval_cbf(f, z)
    if callable(f):
        return f
    raise TypeError(f"expected a StieltjesRepr or a callable, got {type(f).__name__}")


def _check_exponent(alpha):
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"exponent must lie in [0, 1], got {alpha}")
    return alpha


def _power(w, alpha):
    if alpha == 0.0:
        return 1.0 + 0j
    if alpha == 1.0:
        return complex(w)
    return complex(np.power(complex(w), alpha))


def cbf_power(f: CBFLike, alpha: float) -> Callable[[complex], complex]:
    """``z -> f(z)**alpha``, again complete Bernstein for ``0 <= alpha <= 1``."""
    alpha = _check_exponent(alpha)
    fn = as_function(f)
    return lambda z: _power(fn(z), alpha)


def cbf_product(f: CBFLike, g: CBFLike, alpha: float) -> Callable[[complex], complex]:
    """``z -> f(z)**alpha * g(z)**(1 - alpha)`` (log-convex combination)."""
    alpha = _check_exponent(alpha)
    fn, gn = as_function(f), as_function(g)
    return lambda z: _power(fn(z), alpha) * _power(gn(z), 1.0 - alpha)
