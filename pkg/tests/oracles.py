"""Independent brute-force oracles used by the test suite.

Everything here avoids the library's own search paths: orders are found
by full repeated multiplication, residue sets by exhaustive enumeration,
Jacobsthal values by window scanning, and maximum well-spaced chains by
dynamic programming / subset search over the divisor list.
"""

from __future__ import annotations

import math

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*a, **k):
        if a and callable(a[0]):
            return a[0]
        return lambda f: f


@njit(cache=True)
def least_primitive_root_oracle(p: int) -> int:
    """g(p) by computing each candidate's full multiplicative order."""
    if p == 2:
        return 1
    for n in range(2, p):
        order = 1
        val = n % p
        while val != 1:
            val = val * n % p
            order += 1
        if order == p - 1:
            return n
    return 0


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def qth_residue_set(p: int, q: int) -> set[int]:
    """{n^q mod p : 1 <= n <= p-1} by exhaustive enumeration."""
    return {pow(n, q, p) for n in range(1, p)}


def jacobsthal_oracle(m: int) -> int:
    """Smallest J such that every J consecutive integers contain one coprime to m.

    Window scan over [1, 2m]: by periodicity every gap pattern appears there.
    """
    if m == 1:
        return 1
    J = 1
    run = 0
    for n in range(1, 2 * m + 1):
        if math.gcd(n, m) == 1:
            run = 0
        else:
            run += 1
            J = max(J, run + 1)
    return J


def max_well_spaced_subset(divs: list[int], log_threshold: float, guard: float = 1e-12) -> int:
    """Length of the longest subset with consecutive log-ratios > log_threshold.

    Longest-path DP over the sorted divisor list; independent of the
    greedy construction it checks.
    """
    logs = [math.log(d) for d in divs]
    bound = log_threshold * (1 + guard)
    best = [1] * len(divs)
    for i in range(len(divs)):
        for j in range(i):
            if logs[i] - logs[j] > bound and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best, default=0)


def max_well_spaced_subset_bruteforce(divs, log_threshold, guard=1e-12) -> int:
    """Same statistic by explicit subset enumeration (for small divisor lists)."""
    from itertools import combinations

    logs = [math.log(d) for d in divs]
    bound = log_threshold * (1 + guard)
    for size in range(len(divs), 1, -1):
        for combo in combinations(range(len(divs)), size):
            if all(logs[b] - logs[a] > bound for a, b in zip(combo, combo[1:])):
                return size
    return 1 if divs else 0
