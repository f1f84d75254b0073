"""Explicit prime-classification conditions and exceptional-set scans.

A prime p qualifies when (i) the reciprocal sum of the first ~log(1/delta)
prime divisors of p-1 is small and (ii) some small r makes the weighted
tail over the remaining divisors tiny.  Both are exact finite computations
per prime; the range scans report failure counts and trend data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combiner import BoundConfig, alpha_bound
from .primes import PrimeRecord, distinct_primes_spf, spf_sieve
from .residues import least_primitive_root

DELTA_MAX = math.exp(-math.e)  # delta in (0, e^-e) keeps logloglog(1/delta) > 0
SCAN_BUDGET = 10**8
VERIFY_BUDGET = 10**12


def iterated_log(x: float, k: int) -> float:
    """The k-th iterate of the natural logarithm."""
    for _ in range(k):
        x = math.log(x)
    return x


def _check_delta(delta: float) -> float:
    """Validate delta and return eta = logloglog(1/delta) > 0."""
    if not 0 < delta < DELTA_MAX:
        raise ValueError(f"delta must lie in (0, e^-e) = (0, {DELTA_MAX:.6f}), got {delta}")
    return iterated_log(1 / delta, 3)


@dataclass(frozen=True)
class ConditionReport:
    p: int
    delta: float
    xi: float
    sum_i: float
    cond_i: bool
    r_found: int | None
    tail_at_r: float
    cond_ii: bool
    eta: float
    in_S: bool


def _sum_i(q_list, delta: float) -> float:
    j_max = min(math.floor(math.log(1 / delta)), len(q_list))
    return sum(1 / q for q in q_list[:j_max])


def condition_i(record: PrimeRecord, delta: float, xi: float) -> tuple[float, bool]:
    """Reciprocal-sum condition: sum_{j <= log(1/delta)} 1/q_j <= xi * eta."""
    eta = _check_delta(delta)
    if xi <= 0:
        raise ValueError(f"xi must be positive, got {xi}")
    s = _sum_i(record.q_list, delta)
    return s, s <= xi * eta


def _tail_terms(q_list) -> list[float]:
    return [j**3 * math.log(math.log(q)) / math.log(q) for j, q in enumerate(q_list, start=1)]


def _tail(q_list, r: int) -> float:
    return sum(_tail_terms(q_list)[r:])


def condition_ii(record: PrimeRecord, delta: float) -> tuple[int | None, float]:
    """Smallest r <= (1/3)log(1/delta) with tail(r) <= exp(-r - sqrt(r*eta)).

    Returns (r, tail at r); (None, tail at the last r tried) when no r works.
    """
    eta = _check_delta(delta)
    r_max = math.floor(math.log(1 / delta) / 3)
    tail = _tail(record.q_list, 0)
    for r in range(1, r_max + 1):
        tail = _tail(record.q_list, r)
        if tail <= math.exp(-r - math.sqrt(r * eta)):
            return r, tail
    return None, tail


def condition_report(record: PrimeRecord, delta: float, xi: float) -> ConditionReport:
    eta = _check_delta(delta)
    sum_i, cond_i_ok = condition_i(record, delta, xi)
    r_found, tail_at_r = condition_ii(record, delta)
    cond_ii_ok = r_found is not None
    return ConditionReport(
        p=record.p,
        delta=delta,
        xi=xi,
        sum_i=sum_i,
        cond_i=cond_i_ok,
        r_found=r_found,
        tail_at_r=tail_at_r,
        cond_ii=cond_ii_ok,
        eta=eta,
        in_S=cond_i_ok and cond_ii_ok,
    )


def verify_bound(
    record: PrimeRecord, delta: float, config: BoundConfig
) -> tuple[int, float, bool, float | None]:
    """(g(p), p^(1/4-delta), g <= bound, alpha(p, r_found)); exact g, reported bound."""
    _check_delta(delta)
    if record.p > VERIFY_BUDGET:
        raise ValueError(f"p={record.p} exceeds brute-force budget {VERIFY_BUDGET}")
    g = least_primitive_root(record.p)
    bound = record.p ** (0.25 - delta)
    r_found, _ = condition_ii(record, delta)
    alpha = alpha_bound(record, r_found, config) if r_found is not None else None
    return g, bound, g <= bound, alpha


def sum_recip_scan(x: int, R: float, xi: float) -> tuple[int, float]:
    """Count primes p <= x with sum_{i <= R} 1/q_i >= xi * loglog R.

    Returns (count, fraction of primes p <= x).  R is a free parameter at
    desk scale; the scan reports without asserting any density bound.
    """
    if x > SCAN_BUDGET:
        raise ValueError(f"x={x} exceeds scan budget {SCAN_BUDGET}")
    if R < 3:
        raise ValueError(f"R must be >= 3, got {R}")
    threshold = xi * math.log(math.log(R))
    i_max = math.floor(R)
    spf = spf_sieve(x)
    count = 0
    total = 0
    for p in _primes_from_spf(spf):
        total += 1
        if p == 2:
            continue  # q_list of p-1 = 1 is empty; never meets a positive threshold
        qs = distinct_primes_spf(p - 1, spf)
        if sum(1 / q for q in qs[:i_max]) >= threshold:
            count += 1
    return count, count / total if total else 0.0


def _primes_from_spf(spf) -> list[int]:
    import numpy as np

    idx = np.arange(len(spf), dtype=spf.dtype)
    return np.flatnonzero((spf == idx) & (idx >= 2)).tolist()


@dataclass(frozen=True)
class ExceptionalDensity:
    x: int
    delta: float
    xi: float
    n_primes: int
    fail_i: int
    fail_ii: int
    fail_combined: int
    fraction: float
    paper_comparison: float  # exp(-(loglog(1/delta))^(1/4))


def exceptional_density(x: int, delta: float, xi: float) -> ExceptionalDensity:
    """Exact failure counts of (i)/(ii) over primes in (sqrt(x), x]."""
    eta = _check_delta(delta)
    if x > SCAN_BUDGET:
        raise ValueError(f"x={x} exceeds scan budget {SCAN_BUDGET}")
    if xi <= 0:
        raise ValueError(f"xi must be positive, got {xi}")
    lo = math.isqrt(x) + 1
    spf = spf_sieve(x)
    n_primes = fail_i = fail_ii = fail_combined = 0
    j_cap = math.floor(math.log(1 / delta))
    r_max = math.floor(math.log(1 / delta) / 3)
    thresholds = [math.exp(-r - math.sqrt(r * eta)) for r in range(1, r_max + 1)]
    for p in _primes_from_spf(spf):
        if p < max(lo, 3):
            continue
        n_primes += 1
        qs = distinct_primes_spf(p - 1, spf)
        s = sum(1 / q for q in qs[: min(j_cap, len(qs))])
        bad_i = s > xi * eta
        terms = _tail_terms(qs)
        bad_ii = True
        tail = sum(terms)
        for r, thr in enumerate(thresholds, start=1):
            tail_r = tail - sum(terms[:r]) if r <= len(terms) else 0.0
            if tail_r <= thr:
                bad_ii = False
                break
        fail_i += bad_i
        fail_ii += bad_ii
        fail_combined += bad_i or bad_ii
    return ExceptionalDensity(
        x=x,
        delta=delta,
        xi=xi,
        n_primes=n_primes,
        fail_i=fail_i,
        fail_ii=fail_ii,
        fail_combined=fail_combined,
        fraction=fail_combined / n_primes if n_primes else 0.0,
        paper_comparison=math.exp(-iterated_log(1 / delta, 2) ** 0.25),
    )
