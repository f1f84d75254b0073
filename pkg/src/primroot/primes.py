"""Prime generation, deterministic 64-bit primality testing, and factorization.

This is the data backbone for all range scans: a segmented sieve, a
Miller-Rabin test with a witness set valid for every n < 2^64, and a
trial-division + Brent-rho factorizer that records the full factorization
of p-1 for a prime p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Spans larger than this are rejected by primes_in_range; scans should chunk.
MAX_SEGMENT_SPAN = 10**8

# Witnesses proving primality for every n < 2^64 (Sorenson-Webster et al.).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 1 << 16

_small_prime_cache: np.ndarray | None = None


def _small_primes() -> np.ndarray:
    """Primes below 2^16, cached; used for trial division and base sieving."""
    global _small_prime_cache
    if _small_prime_cache is None:
        _small_prime_cache = sieve_upto(_TRIAL_BOUND)
    return _small_prime_cache


def sieve_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain sieve of Eratosthenes)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_comp = np.zeros(limit + 1, dtype=bool)
    is_comp[:2] = True
    for p in range(2, math.isqrt(limit) + 1):
        if not is_comp[p]:
            is_comp[p * p :: p] = True
    return np.flatnonzero(~is_comp).astype(np.int64)


def is_prime(n: int) -> bool:
    """Deterministic primality for 1 <= n < 2^63."""
    if not 1 <= n < 1 << 63:
        raise ValueError(f"is_prime requires 1 <= n < 2^63, got {n}")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int, *, max_span: int = MAX_SEGMENT_SPAN) -> list[int]:
    """Primes in [lo, hi], ascending.

    Segmented sieve by the base primes below 2^16; for hi beyond 2^32 the
    survivors are finished off with the deterministic Miller-Rabin test.
    """
    if not 2 <= lo <= hi < 1 << 63:
        raise ValueError(f"primes_in_range requires 2 <= lo <= hi < 2^63, got [{lo}, {hi}]")
    if hi - lo + 1 > max_span:
        raise ValueError(f"range [{lo}, {hi}] exceeds segment budget {max_span}")
    base = _small_primes()
    root = math.isqrt(hi)
    need_mr = root >= _TRIAL_BOUND
    out: list[int] = []
    chunk = 10**7
    for seg_lo in range(lo, hi + 1, chunk):
        seg_hi = min(seg_lo + chunk - 1, hi)
        size = seg_hi - seg_lo + 1
        mask = np.ones(size, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > seg_hi:
                break
            start = max(p * p, ((seg_lo + p - 1) // p) * p)
            if start > seg_hi:
                continue
            mask[start - seg_lo :: p] = False
        if seg_lo == 1:
            mask[0] = False
        cands = (np.flatnonzero(mask) + seg_lo).tolist()
        if need_mr:
            cands = [n for n in cands if is_prime(n)]
        out.extend(cands)
    return out


def _brent_rho(n: int, seed: int) -> int:
    """One nontrivial factor of composite odd n via Brent's cycle variant.

    Deterministic: the polynomial increment walks seed, seed+1, ... so the
    whole factorization is reproducible.
    """
    if n % 2 == 0:
        return 2
    c = seed
    while True:
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # rare cycle degeneracy: restart with the next increment


def factorize(n: int) -> list[tuple[int, int]]:
    """Full factorization of n >= 1 as sorted (prime, multiplicity) pairs."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in _small_primes():
        p = int(p)
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _brent_rho(m, seed=1)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors.items())


@dataclass(frozen=True)
class PrimeRecord:
    """A prime p together with the full factorization of p - 1.

    factors are (q, e) pairs with prod q^e == p - 1; q_list is the sorted
    list of distinct prime divisors q_1 < q_2 < ... < q_omega.
    """

    p: int
    factors: tuple[tuple[int, int], ...]
    q_list: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q_list", tuple(q for q, _ in self.factors))
        prod = 1
        for q, e in self.factors:
            prod *= q**e
        if prod != self.p - 1:
            raise ValueError(f"factorization of {self.p - 1} does not multiply back")

    @property
    def omega(self) -> int:
        return len(self.q_list)


def factorize_shifted(p: int) -> PrimeRecord:
    """PrimeRecord for prime p >= 3: the factorization of p - 1."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"factorize_shifted requires an odd prime, got {p}")
    return PrimeRecord(p=p, factors=tuple(factorize(p - 1)))


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).

    Batch factorization support for range scans: following spf repeatedly
    yields the sorted distinct prime divisors of any n <= limit.
    """
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 2:
        spf[2::2] = 2
        for p in range(3, math.isqrt(limit) + 1, 2):
            if spf[p] == 0:
                sl = spf[p * p :: 2 * p]
                sl[sl == 0] = p
        rest = np.flatnonzero(spf[3::2] == 0) * 2 + 3
        spf[rest] = rest
    return spf


def distinct_primes_spf(n: int, spf: np.ndarray) -> list[int]:
    """Sorted distinct prime divisors of n via a precomputed spf table."""
    qs = []
    while n > 1:
        q = int(spf[n])
        qs.append(q)
        while n % q == 0:
            n //= q
    return qs
