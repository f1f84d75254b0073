"""Poisson anatomy of p-1 at computable scale.

The interval endpoints are t_j = exp(e^j).  For a random prime p, the
count W_j of distinct prime factors of p-1 in (t_j, t_{j+1}] is modeled
as Poisson with parameter lambda_j = sum over primes q in the interval of
1/(q-1), which is 1 + o(1).  This module computes lambda_j exactly,
collects empirical W_j histograms over real primes, provides exact
Poisson pmf/tail utilities, and Monte-Carlo simulates the
iterated-logarithm events in the pure Poisson model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .primes import sieve_upto

MAX_J = 2  # t_3 ~ 5.3e8 is the default desk limit for the upper endpoint
WJ_SCAN_BUDGET = 10**8
LIL_J_MAX = 200
LIL_CHUNK = 10_000


def t_endpoint(j: int) -> float:
    """t_j = exp(e^j)."""
    return math.exp(math.exp(j))


def lambda_param(j: int, *, max_j: int = MAX_J) -> float:
    """Exact lambda_j = sum over primes q in (t_j, t_{j+1}] of 1/(q-1)."""
    if not 1 <= j <= max_j:
        raise ValueError(f"j={j} outside budget [1, {max_j}]; raise max_j for a long run")
    lo, hi = t_endpoint(j), t_endpoint(j + 1)
    limit = math.floor(hi)
    total = 0.0
    chunk = 10**7
    base = sieve_upto(min(limit, chunk))
    start = math.floor(lo) + 1
    if limit <= chunk:
        qs = base[(base >= start) & (base <= limit)]
        return float(np.sum(1.0 / (qs - 1.0)))
    root_primes = base[base <= math.isqrt(limit)]
    for seg_lo in range(2, limit + 1, chunk):
        seg_hi = min(seg_lo + chunk - 1, limit)
        mask = np.ones(seg_hi - seg_lo + 1, dtype=bool)
        for p in root_primes:
            p = int(p)
            if p * p > seg_hi:
                break
            first = max(p * p, ((seg_lo + p - 1) // p) * p)
            if first <= seg_hi:
                mask[first - seg_lo :: p] = False
        qs = np.flatnonzero(mask) + seg_lo
        qs = qs[qs >= start]
        total += float(np.sum(1.0 / (qs - 1.0)))
    return total


def omega_interval(n: int, a: float, b: float) -> int:
    """Number of distinct prime factors of n in (a, b]."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    from .primes import factorize

    return sum(1 for q, _ in factorize(n) if a < q <= b)


def poisson_pmf(lam: float, k: int) -> float:
    """P(Y = k) for Y ~ Poisson(lam), via log-gamma to avoid overflow."""
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if k < 0:
        return 0.0
    return math.exp(k * math.log(lam) - lam - math.lgamma(k + 1))


def poisson_cdf(lam: float, k: int) -> float:
    """P(Y <= k) by direct summation."""
    if k < 0:
        return 0.0
    return min(1.0, math.fsum(poisson_pmf(lam, i) for i in range(k + 1)))


def poisson_tail(lam: float, alpha: float, side: str) -> float:
    """P(Y <= lam - alpha*sqrt(lam)) or P(Y >= lam + alpha*sqrt(lam))."""
    if side == "lower":
        k = math.floor(lam - alpha * math.sqrt(lam))
        return poisson_cdf(lam, k)
    if side == "upper":
        k = math.ceil(lam + alpha * math.sqrt(lam))
        return max(0.0, 1.0 - poisson_cdf(lam, k - 1))
    raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")


def tv_distance_to_poisson(histogram: np.ndarray, lam: float) -> float:
    """Half the L1 distance between an empirical pmf and Poisson(lam).

    histogram[k] counts observations of value k; Poisson mass beyond the
    histogram support is included in the distance.
    """
    total = int(histogram.sum())
    if total <= 0:
        raise ValueError("histogram is empty")
    emp = histogram / total
    pois = np.array([poisson_pmf(lam, k) for k in range(len(emp))])
    covered = float(pois.sum())
    return 0.5 * (float(np.abs(emp - pois).sum()) + (1.0 - covered))


@dataclass(frozen=True)
class PoissonStats:
    j: int
    t_lo: float
    t_hi: float
    lambda_j: float
    histogram: tuple[int, ...]
    sample_size: int
    mean: float
    tv_distance: float

    def to_json_dict(self) -> dict:
        return {
            "j": self.j,
            "t_lo": self.t_lo,
            "t_hi": self.t_hi,
            "lambda_j": self.lambda_j,
            "histogram": list(self.histogram),
            "sample_size": self.sample_size,
            "mean": self.mean,
            "tv_distance": self.tv_distance,
        }


def empirical_Wj(j: int, x: int, *, max_j: int = MAX_J) -> PoissonStats:
    """Histogram of W_j = omega(p-1, t_j, t_{j+1}) over all primes p <= x."""
    if x > WJ_SCAN_BUDGET:
        raise ValueError(f"x={x} exceeds scan budget {WJ_SCAN_BUDGET}")
    lam = lambda_param(j, max_j=max_j)
    lo, hi = t_endpoint(j), t_endpoint(j + 1)
    primes = sieve_upto(x)
    counts = np.zeros(x + 1, dtype=np.int16)  # counts[i] = omega(i, t_j, t_{j+1}]
    qs = primes[(primes > lo) & (primes <= hi)]
    for q in qs:
        q = int(q)
        counts[q::q] += 1
    w = counts[primes - 1]
    hist = np.bincount(w)
    return PoissonStats(
        j=j,
        t_lo=lo,
        t_hi=hi,
        lambda_j=lam,
        histogram=tuple(int(c) for c in hist),
        sample_size=len(primes),
        mean=float(w.mean()),
        tv_distance=tv_distance_to_poisson(hist.astype(float), lam),
    )


@dataclass(frozen=True)
class LilResult:
    eta: float
    epsilon: float
    trials: int
    seed: int
    estimate: float  # P(A and B)
    stderr: float
    p_a: float
    p_b: float
    k1: int
    k2: int
    d: int
    j_max: int
    truncation_mass: float

    def to_json_dict(self) -> dict:
        return {
            "eta": self.eta,
            "epsilon": self.epsilon,
            "trials": self.trials,
            "seed": self.seed,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "p_a": self.p_a,
            "p_b": self.p_b,
            "k1": self.k1,
            "k2": self.k2,
            "d": self.d,
            "j_max": self.j_max,
            "truncation_mass": self.truncation_mass,
        }


def simulate_lil(
    eta: float,
    epsilon: float,
    trials: int,
    seed: int,
    *,
    j_max: int = LIL_J_MAX,
) -> LilResult:
    """Monte-Carlo estimate of P(A and B) in the pure Poisson model.

    Unit-rate Poisson draws Y_j for j = D .. j_max; A asks that for some k
    in [K1, K2-1] the interval sum Y_{k!,(k+1)!} falls below the
    iterated-logarithm threshold while the running sum Y_{D,k!} stays
    moderate; B asks Y_j <= j for all j >= K1! (truncated at j_max, with
    the ignored tail mass reported).  Deterministic given the seed:
    trials are generated in fixed chunks with per-chunk substreams, so the
    result is independent of any parallel execution.
    """
    if not 1 <= eta <= 3:
        raise ValueError(f"eta must lie in [1, 3], got {eta}")
    if not 0 < epsilon <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    d = math.floor(eta / 2) + 1
    k1 = math.floor(math.exp(eta / 2))
    k2 = math.floor(math.exp((0.5 + epsilon) * eta) / (2 * eta))
    if math.factorial(max(k2, 1)) > j_max:
        raise ValueError(f"K2! = {math.factorial(k2)} exceeds truncation index {j_max}")

    js = np.arange(d, j_max + 1)
    b_start = max(math.factorial(k1), d)
    n_a = n_b = n_ab = 0
    done = 0
    chunk_index = 0
    while done < trials:
        n = min(LIL_CHUNK, trials - done)
        rng = np.random.default_rng([seed, chunk_index])
        draws = rng.poisson(1.0, size=(n, len(js))).astype(np.int64)
        ev_b = np.all(draws[:, b_start - d :] <= js[b_start - d :], axis=1)
        ev_a = np.zeros(n, dtype=bool)
        for k in range(k1, k2):
            a0, a1 = math.factorial(k), math.factorial(k + 1)
            y_int = draws[:, a0 - d : a1 - d].sum(axis=1)
            e_k = y_int <= k * a0 - (1 + epsilon / 10) * math.sqrt(eta * k * a0)
            y_run = draws[:, : a0 - d].sum(axis=1)
            f_k = y_run <= a0 - d + math.exp(eta / 6) * math.sqrt(eta * (a0 - d))
            ev_a |= e_k & f_k
        n_a += int(ev_a.sum())
        n_b += int(ev_b.sum())
        n_ab += int((ev_a & ev_b).sum())
        done += n
        chunk_index += 1

    est = n_ab / trials
    stderr = math.sqrt(est * (1 - est) / trials)
    # P(Y_j > j) <= 1/j! summed over the ignored indices; below double
    # precision for the default j_max.
    trunc = math.fsum(math.exp(-math.lgamma(j + 1)) for j in range(j_max + 1, j_max + 60))
    return LilResult(
        eta=eta,
        epsilon=epsilon,
        trials=trials,
        seed=seed,
        estimate=est,
        stderr=stderr,
        p_a=n_a / trials,
        p_b=n_b / trials,
        k1=k1,
        k2=k2,
        d=d,
        j_max=j_max,
        truncation_mass=trunc,
    )
