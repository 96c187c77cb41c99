"""Thread-pool helper with an environment fallback for the worker count.

Results come back in input order no matter how the pool schedules the
calls, so callers can rely on identical output for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "NICHOLS_FORGE_THREADS"


def resolve_threads(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        value = int(explicit)
    else:
        raw = os.environ.get(ENV_VAR, "").strip()
        value = int(raw) if raw else 1
    if value < 1:
        raise ValueError(f"thread count must be >= 1, got {value}")
    return value


def pmap(fn: Callable[[T], R], items: Sequence[T], threads: Optional[int] = None) -> List[R]:
    """Ordered map, parallel when more than one worker is requested."""
    n = resolve_threads(threads)
    items = list(items)
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
