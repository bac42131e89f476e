"""Deterministic work distribution capped by the SUBGAUSS_THREADS env var."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

ENV_THREADS = "SUBGAUSS_THREADS"

_T = TypeVar("_T")
_R = TypeVar("_R")


def max_threads() -> int:
    """Worker cap: SUBGAUSS_THREADS if set, else cpu count clamped to 8."""
    raw = os.environ.get(ENV_THREADS)
    if raw is None:
        return min(os.cpu_count() or 1, 8)
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(
            f"{ENV_THREADS} must be a positive integer, got {raw!r}"
        ) from None
    if n < 1:
        raise ValueError(f"{ENV_THREADS} must be a positive integer, got {raw!r}")
    return n


def ordered_map(fn: Callable[[_T], _R], items: Iterable[_T]) -> list[_R]:
    """Map preserving input order, threaded when the cap allows.

    Output is identical to list(map(fn, items)) regardless of thread count,
    so results never depend on scheduling.
    """
    seq: Sequence[_T] = list(items)
    workers = min(max_threads(), len(seq)) if seq else 1
    if workers <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, seq))
