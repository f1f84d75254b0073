"""Divisor-structure experiments: well-spaced chains and near-pair statistics.

A chain d_1 < ... < d_t of divisors of n is well-spaced (at scale x with
exponent c) when every consecutive ratio exceeds x^(1/t^c).  The greedy
scan over sorted divisors yields a maximum-length chain, so existence for
a target length t reduces to one pass.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .primes import factorize, spf_sieve

MAX_DIVISORS = 10**6
EXCEPTION_SCAN_BUDGET = 10**8

# Strict ratio comparisons run in log space; exact-boundary ties resolve
# as "not greater".
_GUARD = 1e-12


@dataclass(frozen=True)
class DivisorChain:
    n: int
    x: float
    t: int
    c: float
    threshold: float
    chain: tuple[int, ...]


@dataclass(frozen=True)
class ExceptionScanResult:
    x: int
    t: int
    c: float
    delta: float
    exceptions: int
    fraction: float
    paper_comparison: float  # t^(-delta^2/210)


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    divs = [1]
    count = 1
    for q, e in factorize(n):
        count *= e + 1
        if count > MAX_DIVISORS:
            raise ValueError(f"n={n} has more than {MAX_DIVISORS} divisors")
        divs = [d * q**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def _spacing_log_threshold(x: float, t: int, c: float) -> float:
    return math.log(x) / t**c


def _greedy_chain(sorted_divs, log_threshold: float) -> list[int]:
    """Maximum-length chain with consecutive log-ratios > log_threshold.

    Greedy from the smallest divisor, always taking the next admissible
    one; a standard exchange argument shows this is optimal.
    """
    chain = [sorted_divs[0]]
    bound = math.log(sorted_divs[0]) + log_threshold * (1 + _GUARD)
    for d in sorted_divs[1:]:
        if math.log(d) > bound:
            chain.append(d)
            bound = math.log(d) + log_threshold * (1 + _GUARD)
    return chain


def well_spaced_chain(n: int, x: float, t: int, c: float) -> DivisorChain | None:
    """A length-t well-spaced divisor chain of n, or None if none exists."""
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    if x <= 1 or c <= 0:
        raise ValueError(f"need x > 1 and c > 0, got x={x}, c={c}")
    log_thr = _spacing_log_threshold(x, t, c)
    chain = _greedy_chain(divisors(n), log_thr)
    if len(chain) < t:
        return None
    return DivisorChain(n=n, x=x, t=t, c=c, threshold=math.exp(log_thr), chain=tuple(chain[:t]))


def exception_scan(x: int, t: int, c: float) -> ExceptionScanResult:
    """Count n <= x with no length-t well-spaced divisor chain at scale x.

    delta = c - 1/log 2 must be positive; the reported paper_comparison is
    the shape t^(-delta^2/210) of the exceptional-count bound (reported,
    not asserted).
    """
    if x > EXCEPTION_SCAN_BUDGET:
        raise ValueError(f"x={x} exceeds scan budget {EXCEPTION_SCAN_BUDGET}")
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    delta = c - 1 / math.log(2)
    if delta <= 0:
        raise ValueError(f"c={c} must exceed 1/log 2 = {1 / math.log(2):.6f}")
    log_thr = _spacing_log_threshold(x, t, c)
    spf = spf_sieve(x)
    exceptions = 0
    for n in range(1, x + 1):
        divs = [1]
        m = n
        while m > 1:
            q = int(spf[m])
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            divs = [d * q**k for d in divs for k in range(e + 1)]
        divs.sort()
        if len(_greedy_chain(divs, log_thr)) < t:
            exceptions += 1
    return ExceptionScanResult(
        x=x,
        t=t,
        c=c,
        delta=delta,
        exceptions=exceptions,
        fraction=exceptions / x,
        paper_comparison=t ** (-delta * delta / 210),
    )


def wstar(b: int, sigma: float) -> int:
    """Ordered pairs of distinct divisors of b with |log(d'/d'')| <= sigma."""
    if b < 1:
        raise ValueError(f"b must be positive, got {b}")
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    logs = [math.log(d) for d in divisors(b)]
    count = 0
    for ld in logs:
        lo = bisect_left(logs, ld - sigma - _GUARD)
        hi = bisect_right(logs, ld + sigma + _GUARD)
        count += hi - lo - 1  # drop the pair (d, d) itself
    return count


def max_chain_length(n: int, x: float, t: int, c: float) -> int:
    """Length of the maximum well-spaced chain (greedy), for scan reporting."""
    return len(_greedy_chain(divisors(n), _spacing_log_threshold(x, t, c)))
