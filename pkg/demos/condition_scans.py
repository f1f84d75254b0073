"""Range scans of the two explicit conditions on the anatomy of p-1.

Condition (i) bounds the reciprocal sum of the first few prime divisors of
p-1; condition (ii) asks for a small r whose weighted tail is tiny.  Both
are exact per-prime computations.  The exceptional fraction is expected to
decay only asymptotically; at desk scale it is roughly flat, which the
scan below makes visible.
"""

import math

from primroot import condition_report, exceptional_density, factorize_shifted

DELTA = math.exp(-math.exp(math.e))  # logloglog(1/delta) = 1

print("per-prime reports (delta with eta = 1, xi = 1):")
for p in (13, 61, 2311, 99991):
    rep = condition_report(factorize_shifted(p), DELTA, 1.0)
    print(
        f"  p = {p:>6}: sum_i = {rep.sum_i:.4f} ({'ok' if rep.cond_i else 'fail'}), "
        f"r = {rep.r_found} tail = {rep.tail_at_r:.4g} "
        f"({'ok' if rep.cond_ii else 'fail'}), in S: {rep.in_S}"
    )

print("\nexceptional fraction over primes in (sqrt(x), x]:")
for x in (10**5, 10**6, 10**7):
    res = exceptional_density(x, DELTA, 1.0)
    print(
        f"  x = {x:>9}: {res.fail_combined:>7}/{res.n_primes:>7} fail "
        f"(i: {res.fail_i}, ii: {res.fail_ii}), fraction {res.fraction:.5f}, "
        f"reference {res.paper_comparison:.5f}"
    )
print("(condition (i) dominates; nearly every failing prime has 2 and 3")
print(" dividing p-1, which already puts the reciprocal sum near the cutoff)")
