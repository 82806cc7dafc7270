"""Order-preserving parallel map for frequency sweeps.

SciPy's QUADPACK wrappers release no shared state between calls, so a thread
pool is enough.  ``VISCOWAVE_THREADS`` caps the number of workers; ``1``
forces a serial loop.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "VISCOWAVE_THREADS"


def max_workers() -> int:
    raw = os.environ.get(ENV_VAR, "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError:
            n = 1
        return max(1, n)
    return max(1, min(8, os.cpu_count() or 1))


def pmap(func: Callable[[T], R], items: Iterable[T], min_items: int = 16) -> list[R]:
    """``[func(x) for x in items]``, possibly on a thread pool.

    Results come back in input order; the first exception raised by any call
    propagates.
    """
    items = list(items)
    workers = min(max_workers(), len(items))
    if workers <= 1 or len(items) < min_items:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
