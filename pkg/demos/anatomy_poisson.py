"""Poisson model for the number of prime factors of p-1 in a dyadic-log window.

W_j counts prime divisors of p-1 in (exp(e^j), exp(e^(j+1))].  Heuristically
W_j is close to Poisson with parameter lambda_j = sum 1/(q-1) over the window,
and lambda_j is close to 1.  This prints the exact parameters, the empirical
histogram over primes up to 10^7, and the total variation distance.
"""

from primroot import empirical_Wj, lambda_param, poisson_pmf, t_endpoint

for j in (1, 2):
    lam = lambda_param(j)
    print(f"window j = {j}: ({t_endpoint(j):.4g}, {t_endpoint(j + 1):.4g}], lambda = {lam:.12g}")

X = 10**7
stats = empirical_Wj(1, X)
print(f"\nW_1 over {stats.sample_size} primes <= {X}:")
print(f"{'k':>3} {'count':>8} {'empirical':>10} {'poisson':>10}")
for k, c in enumerate(stats.histogram):
    print(
        f"{k:>3} {c:>8} {c / stats.sample_size:>10.5f} "
        f"{poisson_pmf(stats.lambda_j, k):>10.5f}"
    )
print(f"\nempirical mean {stats.mean:.6f} vs lambda_1 {stats.lambda_j:.6f}")
print(f"total variation distance {stats.tv_distance:.6f}")
print("(the distance decays only like a power of logloglog x, so it is visibly")
print(" nonzero at any computationally reachable x)")
