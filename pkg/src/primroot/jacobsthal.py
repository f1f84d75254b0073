"""Exact Jacobsthal function J(m) and the Iwaniec-style comparison bound.

J(m) is the smallest J such that every J consecutive integers contain one
coprime to m.  It depends only on rad(m), so we scan coprime gaps over a
single period [1, rad(m)] with wraparound.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from .primes import factorize

DEFAULT_OMEGA_LIMIT = 8

_cache: dict[int, "JacobsthalValue"] = {}
_cache_lock = threading.Lock()


@dataclass(frozen=True)
class JacobsthalValue:
    """J(m) together with a maximal coprime-free witness window.

    witness_start a means a+1, ..., a+J-1 are all non-coprime to m
    (None when J == 1, where the window is empty).
    """

    m: int
    J: int
    witness_start: int | None

    def to_json_dict(self) -> dict:
        return {"m": self.m, "J": self.J, "witness_start": self.witness_start}


def jacobsthal(m: int, *, omega_limit: int = DEFAULT_OMEGA_LIMIT) -> JacobsthalValue:
    """Exact J(m) with witness, for m with at most omega_limit distinct primes."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return JacobsthalValue(m=1, J=1, witness_start=None)
    primes = [q for q, _ in factorize(m)]
    if len(primes) > omega_limit:
        raise ValueError(f"omega({m}) = {len(primes)} exceeds limit {omega_limit}")
    rad = math.prod(primes)
    with _cache_lock:
        cached = _cache.get(rad)
    if cached is not None:
        return JacobsthalValue(m=m, J=cached.J, witness_start=cached.witness_start)

    coprime = np.ones(rad + 1, dtype=bool)
    coprime[0] = False
    for q in primes:
        coprime[q::q] = False
    positions = np.flatnonzero(coprime)  # 1 is always coprime, so nonempty
    gaps = np.diff(positions)
    wrap = int(positions[0]) + rad - int(positions[-1])
    if gaps.size and int(gaps.max()) >= wrap:
        k = int(gaps.argmax())
        J = int(gaps[k])
        start = int(positions[k])
    else:
        J = wrap
        start = int(positions[-1])
    value = JacobsthalValue(m=rad, J=J, witness_start=start if J > 1 else None)
    with _cache_lock:
        _cache[rad] = value
    return JacobsthalValue(m=m, J=J, witness_start=value.witness_start)


def iwaniec_bound(m: int, c: float = 1.0) -> float:
    """Comparison value c * (omega(m) * log(omega(m)+1))^2 for J(m)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    w = len(factorize(m)) if m > 1 else 0
    return c * (w * math.log(w + 1)) ** 2
