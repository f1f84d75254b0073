"""Deterministic parallel range scans.

Work is split into fixed-size chunks independent of the worker count and
results are merged in chunk order, so output is identical for any number
of threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

DEFAULT_CHUNK = 1 << 16

ENV_THREADS = "PRIMROOT_THREADS"


def default_threads() -> int:
    env = os.environ.get(ENV_THREADS)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def chunked_ranges(lo: int, hi: int, chunk: int = DEFAULT_CHUNK) -> list[tuple[int, int]]:
    """[lo, hi] split into [a, b] chunks of fixed width."""
    return [(a, min(a + chunk - 1, hi)) for a in range(lo, hi + 1, chunk)]


def map_chunks(fn, args_list, threads: int) -> list:
    """Apply fn over args tuples, preserving input order.

    Serial when threads == 1; otherwise a process pool (fn must be a
    picklable module-level function).
    """
    if threads <= 1 or len(args_list) <= 1:
        return [fn(*args) for args in args_list]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_star, [(fn, args) for args in args_list]))


def _star(packed):
    fn, args = packed
    return fn(*args)
