"""Constructive primitive-root machinery.

The core pipeline: group the prime divisors of p-1 by their least
nonresidue value, pick bases for each group, then multiply in small
powers of the bases (exponents bounded by the Jacobsthal function of the
group modulus) until the running product is a nonresidue for every group.
The resulting residue is a primitive root, unconditionally, and its size
is controlled by the Jacobsthal bounds.

Also here: the bound calculators beta(r, Phi) and alpha(p, r) and the
divisor-ratio reduction step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .jacobsthal import jacobsthal
from .primes import PrimeRecord
from .residues import least_q_nonresidue, least_simultaneous_nonresidue

REL_TOL = 1e-12  # documented tolerance for real-valued bound comparisons


class HypothesisViolation(ValueError):
    """A base fails the residue/nonresidue hypotheses of the combiner."""

    def __init__(self, stage: int, q: int, message: str):
        super().__init__(message)
        self.stage = stage
        self.q = q


@dataclass(frozen=True)
class BoundConfig:
    """Configured stand-ins for the unspecified absolute constants.

    The constants are existential in the underlying theory; every bound
    computed from them is a "formula under configured constants", never a
    certified inequality.
    """

    delta: float = 0.01
    xi: float = 1.0
    r: int = 1
    c_C: float = 1.0
    c_Cp: float = 1.0
    c_Cpp: float = 1.0
    c_Cppp: float = 1.0


@dataclass(frozen=True)
class ChainPlan:
    """Full record of one chain construction for a prime p.

    groups are (s_i, primes) with s_0 > s_1 > ... > s_l; Q_sets / bases /
    moduli / jacobsthal_values / exponents follow the staged combiner;
    upper_bound_log is log n_0 + sum (J(m_i) - 1) log n_i.
    """

    p: int
    r: int
    groups: tuple[tuple[int, tuple[int, ...]], ...]
    h: int | None
    Q_sets: tuple[tuple[int, ...], ...]
    bases: tuple[int, ...]
    moduli: tuple[int, ...]
    jacobsthal_values: tuple[int, ...]
    exponents: tuple[int, ...]
    combined_residue: int
    log_size: float
    upper_bound_log: float
    degenerate: bool = False

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "groups": [{"s": s, "primes": list(v)} for s, v in self.groups],
            "h": self.h,
            "Q_sets": [list(q) for q in self.Q_sets],
            "bases": list(self.bases),
            "moduli": list(self.moduli),
            "jacobsthal_values": list(self.jacobsthal_values),
            "exponents": list(self.exponents),
            "combined_residue": self.combined_residue,
            "log_size": self.log_size,
            "upper_bound_log": self.upper_bound_log,
            "degenerate": self.degenerate,
        }


def group_by_least_nonresidue(record: PrimeRecord) -> list[tuple[int, tuple[int, ...]]]:
    """Partition q | p-1 by t_q; returns (s_i, primes) with s_0 > s_1 > ...."""
    p = record.p
    by_t: dict[int, list[int]] = {}
    for q in record.q_list:
        by_t.setdefault(least_q_nonresidue(p, q), []).append(q)
    return [(s, tuple(sorted(by_t[s]))) for s in sorted(by_t, reverse=True)]


def _is_nonresidue(n: int, p: int, q: int) -> bool:
    return pow(n, (p - 1) // q, p) != 1


def combine(p: int, Q_sets, bases) -> tuple[list[int], int, float]:
    """Staged exponent search for a simultaneous nonresidue.

    Given disjoint prime sets Q_0..Q_k and bases n_0..n_k with each n_i a
    nonresidue for its own group and a residue for all earlier groups,
    finds the least exponents a_i < J(m_i) making
    n_0 * n_1^a_1 * ... * n_k^a_k a nonresidue for every prime in the
    union.  Returns (exponents a_1..a_k, combined residue mod p, log of
    the literal product size).
    """
    Q_sets = [tuple(sorted(set(Q))) for Q in Q_sets]
    bases = list(bases)
    if len(Q_sets) != len(bases):
        raise ValueError("Q_sets and bases must have equal length")
    seen: set[int] = set()
    for Q in Q_sets:
        for q in Q:
            if (p - 1) % q != 0:
                raise ValueError(f"q={q} does not divide p-1={p - 1}")
            if q in seen:
                raise ValueError(f"Q_sets are not disjoint at q={q}")
            seen.add(q)

    # Hypothesis checks: (a) n_i nonresidue within its group, (b) residue
    # for every earlier group.  Q_0 may be empty with n_0 = 1.
    for i, (Q, n) in enumerate(zip(Q_sets, bases)):
        if i == 0 and not Q:
            if n != 1:
                raise ValueError("n_0 must be 1 when Q_0 is empty")
            continue
        for q in Q:
            if not _is_nonresidue(n, p, q):
                raise HypothesisViolation(i, q, f"base n_{i}={n} is a {q}-th residue mod {p}")
        for j in range(i):
            for q in Q_sets[j]:
                if _is_nonresidue(n, p, q):
                    raise HypothesisViolation(
                        i, q, f"base n_{i}={n} is a {q}-th nonresidue mod {p} (needs residue)"
                    )

    running = bases[0] % p
    log_size = math.log(bases[0]) if bases[0] > 1 else 0.0
    exponents: list[int] = []
    for i in range(1, len(Q_sets)):
        Q, n = Q_sets[i], bases[i]
        m_i = math.prod(Q)
        J = jacobsthal(m_i).J
        val = running
        for a in range(J):
            if all(_is_nonresidue(val, p, q) for q in Q):
                exponents.append(a)
                running = val
                log_size += a * math.log(n)
                break
            val = val * n % p
        else:
            raise AssertionError(
                f"no exponent below J({m_i})={J} at stage {i}; hypotheses were verified"
            )
    return exponents, running, log_size


def build_chain(record: PrimeRecord, r: int) -> ChainPlan:
    """Build and verify the full chain construction for the given r.

    For r == omega(p-1) the plan is degenerate: a single exhaustive search
    for the least simultaneous nonresidue over all q | p-1 (which is g(p)).
    """
    p = record.p
    omega = record.omega
    if not 1 <= r <= omega:
        raise ValueError(f"r={r} out of range [1, {omega}]")
    groups = tuple(group_by_least_nonresidue(record))

    if r == omega:
        n0 = least_simultaneous_nonresidue(p, record.q_list)
        m = math.prod(record.q_list)
        plan = ChainPlan(
            p=p,
            r=r,
            groups=groups,
            h=None,
            Q_sets=(tuple(record.q_list),),
            bases=(n0,),
            moduli=(m,),
            jacobsthal_values=(),
            exponents=(),
            combined_residue=n0,
            log_size=math.log(n0),
            upper_bound_log=math.log(n0),
            degenerate=True,
        )
        _verify_primitive_root(plan, record)
        return plan

    sizes = [len(v) for _, v in groups]
    h = 0
    total = 0
    for i, size in enumerate(sizes):
        total += size
        if r < total:
            h = i
            break

    Q_sets = [tuple(sorted(q for _, v in groups[:h] for q in v))]
    bases = [least_simultaneous_nonresidue(p, Q_sets[0]) if h > 0 else 1]
    for i in range(h, len(groups)):
        s_i, v_i = groups[i]
        Q_sets.append(v_i)
        bases.append(s_i)

    exponents, residue, log_size = combine(p, Q_sets, bases)
    moduli = tuple(math.prod(Q) if Q else 1 for Q in Q_sets[1:])
    j_values = tuple(jacobsthal(m).J for m in moduli)
    upper = (math.log(bases[0]) if bases[0] > 1 else 0.0) + sum(
        (J - 1) * math.log(n) for J, n in zip(j_values, bases[1:])
    )
    plan = ChainPlan(
        p=p,
        r=r,
        groups=groups,
        h=h,
        Q_sets=tuple(Q_sets),
        bases=tuple(bases),
        moduli=moduli,
        jacobsthal_values=j_values,
        exponents=tuple(exponents),
        combined_residue=residue,
        log_size=log_size,
        upper_bound_log=upper,
    )
    _verify_primitive_root(plan, record)
    return plan


def _verify_primitive_root(plan: ChainPlan, record: PrimeRecord) -> None:
    p = record.p
    g = plan.combined_residue
    for q in record.q_list:
        if pow(g, (p - 1) // q, p) == 1:
            raise AssertionError(f"combined residue {g} is a {q}-th residue mod {p}")


def phi_ratio(q_list, r: int) -> float:
    """Phi = prod_{i<=r} q_i/(q_i - 1) over the first r prime divisors."""
    qs = list(q_list)[:r]
    out = 1.0
    for q in qs:
        out *= q / (q - 1)
    return out


def beta_bound(r: int, phi: float, c_Cp: float = 1.0) -> float:
    """beta(r, Phi) = exp(-r - c' * sqrt(r * max(1, log Phi)))."""
    if r < 1 or phi < 1:
        raise ValueError(f"need r >= 1 and phi >= 1, got r={r}, phi={phi}")
    return math.exp(-r - c_Cp * math.sqrt(r * max(1.0, math.log(phi))))


def alpha_bound(record: PrimeRecord, r: int, config: BoundConfig) -> float:
    """alpha(p, r): beta minus the log-size and tail penalties.

    The tail sum runs over j = r+1 .. omega(p-1); all logs natural.
    """
    if not 1 <= r <= record.omega:
        raise ValueError(f"r={r} out of range [1, {record.omega}]")
    phi = phi_ratio(record.q_list, r)
    beta = beta_bound(r, phi, config.c_Cp)
    tail = sum(
        j**3 * math.log(math.log(q)) / math.log(q)
        for j, q in enumerate(record.q_list, start=1)
        if j > r
    )
    penalty = math.sqrt(math.log(2 * r)) / math.sqrt(math.log(record.p)) + tail
    return beta - config.c_Cpp * penalty


def theta_exponent(record: PrimeRecord, r: int, config: BoundConfig) -> float:
    """theta(p, r) = 1/4 - alpha(p, r): the reported exponent in g(p) <= p^theta."""
    return 0.25 - alpha_bound(record, r, config)


def reduction_pair(p: int, Q, n: int, chain) -> tuple[int, int] | None:
    """First (i, j), i < j, 0-based, with n*d_i/d_j still a simultaneous nonresidue.

    chain must be strictly increasing divisors of n, and n must itself be a
    simultaneous nonresidue for Q.  Existence is guaranteed once the chain
    is longer than 2^|Q| * prod_{q in Q, q > 2} q/(q-1); below that
    threshold None is possible.
    """
    Q = sorted(set(Q))
    if not Q:
        raise ValueError("Q must be nonempty")
    chain = list(chain)
    if any(b <= a for a, b in zip(chain, chain[1:])):
        raise ValueError("divisor chain must be strictly increasing")
    for d in chain:
        if d < 1 or n % d != 0:
            raise ValueError(f"{d} does not divide n={n}")
    exps = [(p - 1) // q for q in Q]
    if any(pow(n % p, e, p) == 1 for e in exps):
        raise ValueError(f"n={n} is not a simultaneous nonresidue mod {p}")
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            n2 = n * chain[i] // chain[j]
            if all(pow(n2 % p, e, p) != 1 for e in exps):
                return (i, j)
    return None
