"""Walkthrough of the staged nonresidue combiner.

For a handful of primes this prints the grouping of prime divisors of
p-1 by their least nonresidue, the staged bases and exponents, and the
size bound on the constructed primitive root.  The construction is
unconditional: the verification step at the end re-checks that the
combined residue really is a primitive root.
"""

import math

from primroot import build_chain, factorize_shifted, group_by_least_nonresidue

for p in (31, 1321, 29581, 99991):
    rec = factorize_shifted(p)
    print(f"\np = {p}, p-1 = {p - 1} with prime divisors {rec.q_list}")
    for s, qs in group_by_least_nonresidue(rec):
        print(f"  least nonresidue {s} for q in {qs}")
    for r in range(1, rec.omega + 1):
        plan = build_chain(rec, r)
        if plan.degenerate:
            print(f"  r = {r}: degenerate plan, g(p) = {plan.combined_residue}")
            continue
        stages = ", ".join(
            f"{b}^{a} (J = {J})"
            for b, a, J in zip(plan.bases[1:], plan.exponents, plan.jacobsthal_values)
        )
        print(
            f"  r = {r}: residue {plan.combined_residue} = {plan.bases[0]} * {stages}; "
            f"log size {plan.log_size:.3f} <= bound {plan.upper_bound_log:.3f}"
        )
        assert plan.log_size <= plan.upper_bound_log + 1e-9

print("\nhow often does the r = 1 chain beat brute force in size?")
wins = total = 0
from primroot import least_primitive_root, primes_in_range

for p in primes_in_range(100, 20000):
    rec = factorize_shifted(p)
    plan = build_chain(rec, 1)
    total += 1
    if plan.log_size <= math.log(least_primitive_root(p)) + 1e-9:
        wins += 1
print(f"chain size <= g(p) for {wins}/{total} primes in [100, 20000]")
