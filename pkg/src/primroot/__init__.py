"""Computational toolkit for primes with small primitive roots.

Exact least-nonresidue and primitive-root computation, Jacobsthal-bounded
nonresidue combining, well-spaced divisor chains, explicit
prime-classification conditions, and the Poisson model of the prime-factor
anatomy of p-1.
"""

from .combiner import (
    BoundConfig,
    ChainPlan,
    HypothesisViolation,
    alpha_bound,
    beta_bound,
    build_chain,
    combine,
    group_by_least_nonresidue,
    phi_ratio,
    reduction_pair,
    theta_exponent,
)
from .conditions import (
    ConditionReport,
    condition_i,
    condition_ii,
    condition_report,
    exceptional_density,
    iterated_log,
    sum_recip_scan,
    verify_bound,
)
from .divisors import (
    DivisorChain,
    divisors,
    exception_scan,
    max_chain_length,
    well_spaced_chain,
    wstar,
)
from .jacobsthal import JacobsthalValue, iwaniec_bound, jacobsthal
from .poisson import (
    LilResult,
    PoissonStats,
    empirical_Wj,
    lambda_param,
    omega_interval,
    poisson_cdf,
    poisson_pmf,
    poisson_tail,
    simulate_lil,
    t_endpoint,
    tv_distance_to_poisson,
)
from .primes import (
    PrimeRecord,
    factorize,
    factorize_shifted,
    is_prime,
    primes_in_range,
    sieve_upto,
)
from .residues import (
    ResidueProfile,
    burgess_lower_bound,
    count_simultaneous_nonresidues,
    is_qth_residue,
    least_M_nonresidue,
    least_primitive_root,
    least_q_nonresidue,
    least_simultaneous_nonresidue,
    residue_profile,
)

__all__ = [
    "BoundConfig",
    "ChainPlan",
    "ConditionReport",
    "DivisorChain",
    "HypothesisViolation",
    "JacobsthalValue",
    "LilResult",
    "PoissonStats",
    "PrimeRecord",
    "ResidueProfile",
    "alpha_bound",
    "beta_bound",
    "build_chain",
    "burgess_lower_bound",
    "combine",
    "condition_i",
    "condition_ii",
    "condition_report",
    "count_simultaneous_nonresidues",
    "divisors",
    "empirical_Wj",
    "exception_scan",
    "exceptional_density",
    "factorize",
    "factorize_shifted",
    "group_by_least_nonresidue",
    "is_prime",
    "is_qth_residue",
    "iterated_log",
    "iwaniec_bound",
    "jacobsthal",
    "lambda_param",
    "least_M_nonresidue",
    "least_primitive_root",
    "least_q_nonresidue",
    "least_simultaneous_nonresidue",
    "max_chain_length",
    "omega_interval",
    "phi_ratio",
    "poisson_cdf",
    "poisson_pmf",
    "poisson_tail",
    "primes_in_range",
    "reduction_pair",
    "residue_profile",
    "sieve_upto",
    "simulate_lil",
    "sum_recip_scan",
    "t_endpoint",
    "theta_exponent",
    "tv_distance_to_poisson",
    "verify_bound",
    "well_spaced_chain",
    "wstar",
]

__version__ = "0.1.0"
