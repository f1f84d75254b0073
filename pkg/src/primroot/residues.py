"""Power-residue predicates and least-nonresidue searches.

For a prime p and prime q | p-1, n is a q-th power residue iff
n^((p-1)/q) == 1 (mod p).  Everything here reduces to that single
modular-exponentiation test, which is exact for the full 63-bit range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .primes import factorize_shifted

# int64 products stay exact as long as the modulus squared fits below 2^63.
_VEC_MOD_LIMIT = 3_000_000_000


def is_qth_residue(n: int, p: int, q: int) -> bool:
    """True iff n is a q-th power residue modulo p."""
    if not 1 <= n <= p - 1:
        raise ValueError(f"n={n} out of range [1, {p - 1}]")
    if (p - 1) % q != 0:
        raise ValueError(f"q={q} does not divide p-1={p - 1}")
    return pow(n, (p - 1) // q, p) == 1


def least_q_nonresidue(p: int, q: int) -> int:
    """Least n >= 2 that is a q-th power nonresidue modulo p."""
    if (p - 1) % q != 0:
        raise ValueError(f"q={q} does not divide p-1={p - 1}")
    e = (p - 1) // q
    for n in range(2, p):
        if pow(n, e, p) != 1:
            return n
    raise AssertionError("no q-th nonresidue found; q | p-1 should guarantee one")


def least_simultaneous_nonresidue(p: int, Q, cap: int | None = None) -> int | None:
    """Least n <= cap that is a q-th nonresidue for every q in Q, else None.

    cap defaults to p-1, at which a result always exists (any primitive
    root qualifies).
    """
    Q = sorted(set(Q))
    if not Q:
        raise ValueError("Q must be nonempty")
    for q in Q:
        if (p - 1) % q != 0:
            raise ValueError(f"q={q} does not divide p-1={p - 1}")
    if cap is None:
        cap = p - 1
    if cap > p - 1:
        raise ValueError(f"cap={cap} exceeds p-1={p - 1}")
    exps = [(p - 1) // q for q in Q]
    for n in range(2, cap + 1):
        if all(pow(n, e, p) != 1 for e in exps):
            return n
    return None


def least_primitive_root(p: int) -> int:
    """g(p), the least primitive root modulo p; g(2) = 1 by convention."""
    if p == 2:
        return 1
    record = factorize_shifted(p)
    exps = [(p - 1) // q for q in record.q_list]
    for n in range(2, p):
        if all(pow(n, e, p) != 1 for e in exps):
            return n
    raise AssertionError(f"no primitive root below {p}; p is not prime?")


def _pow_mod_vec(base: np.ndarray, exp: int, mod: int) -> np.ndarray:
    """base**exp mod `mod`, elementwise, by square-and-multiply on int64."""
    result = np.ones_like(base)
    b = base % mod
    e = exp
    while e:
        if e & 1:
            result = result * b % mod
        b = b * b % mod
        e >>= 1
    return result


def count_simultaneous_nonresidues(p: int, Q, H: int) -> int:
    """Exact #{n in [1,H] : n is a q-th nonresidue for all q in Q}."""
    Q = sorted(set(Q))
    for q in Q:
        if (p - 1) % q != 0:
            raise ValueError(f"q={q} does not divide p-1={p - 1}")
    if H > p - 1:
        raise ValueError(f"H={H} exceeds p-1={p - 1}")
    if H < 1 or not Q:
        return 0
    if p <= _VEC_MOD_LIMIT:
        n = np.arange(1, H + 1, dtype=np.int64)
        mask = np.ones(H, dtype=bool)
        for q in Q:
            mask &= _pow_mod_vec(n, (p - 1) // q, p) != 1
        return int(mask.sum())
    exps = [(p - 1) // q for q in Q]
    return sum(1 for n in range(1, H + 1) if all(pow(n, e, p) != 1 for e in exps))


def burgess_lower_bound(p: int, Q, H: int, m: int, c3: float = 1.0) -> float:
    """Burgess-type lower bound on the count of simultaneous nonresidues in [1,H].

    H/8 * prod(1 - 1/q) - (5r)^c3 * H^(1-1/m) * p^((m+1)/(4m^2)) * (log p)^(1/m).
    Pure formula evaluation; may be negative at desk scale.
    """
    Q = sorted(set(Q))
    r = len(Q)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    main = H / 8
    for q in Q:
        main *= 1 - 1 / q
    error = (5 * r) ** c3 * H ** (1 - 1 / m) * p ** ((m + 1) / (4 * m * m)) * math.log(p) ** (1 / m)
    return main - error


def least_M_nonresidue(p: int, M: int) -> int:
    """Least n >= 2 that is not an M-th power residue modulo p (M | p-1)."""
    if M < 2 or (p - 1) % M != 0:
        raise ValueError(f"M={M} must be a divisor >= 2 of p-1={p - 1}")
    e = (p - 1) // M
    for n in range(2, p):
        if pow(n, e, p) != 1:
            return n
    raise AssertionError("no M-th nonresidue found below p")


@dataclass(frozen=True)
class ResidueProfile:
    """Per-q least nonresidues t_q and the least primitive root g of p."""

    p: int
    t_q_map: dict[int, int]
    g: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "t_q_map": {str(q): t for q, t in self.t_q_map.items()},
            "g": self.g,
        }


def residue_profile(p: int) -> ResidueProfile:
    """Compute t_q for every q | p-1 together with g(p)."""
    if p == 2:
        return ResidueProfile(p=2, t_q_map={}, g=1)
    record = factorize_shifted(p)
    t_q = {q: least_q_nonresidue(p, q) for q in record.q_list}
    return ResidueProfile(p=p, t_q_map=t_q, g=least_primitive_root(p))
