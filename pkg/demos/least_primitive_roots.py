"""Survey of least primitive roots g(p) over a range of primes.

Prints the record holders (primes where g(p) reaches a new maximum),
the distribution of g values, and how g(p) compares with p^(1/4).
Everything here is exact; no conjecture is assumed.
"""

import numpy as np

from primroot import least_primitive_root, primes_in_range

X = 10**5

ps = primes_in_range(3, X)
gs = np.array([least_primitive_root(p) for p in ps])

print(f"primes scanned: {len(ps)} (3 <= p <= {X})")
print(f"mean g(p) = {gs.mean():.4f}, max g(p) = {gs.max()}")

print("\nrecord holders (new maximum of g):")
best = 0
for p, g in zip(ps, gs):
    if g > best:
        best = g
        print(f"  p = {p:>7}  g(p) = {g:>3}  p^(1/4) = {p**0.25:.2f}")

print("\ndistribution of g(p):")
vals, counts = np.unique(gs, return_counts=True)
for v, c in zip(vals[:12], counts[:12]):
    print(f"  g = {v:>3}: {c:>6}  ({c / len(ps):.4f})")

exceed = int((gs > np.array(ps) ** 0.25).sum())
print(f"\nprimes with g(p) > p^(1/4): {exceed} of {len(ps)}")
print("(the quarter-power comparison is only meaningful asymptotically)")
