"""Well-spaced divisor chains and how often they fail to exist.

A chain of t divisors of n is well spaced (relative to x and c) when each
consecutive ratio exceeds x^(1/t^c).  The greedy scan below is provably
maximal, so "no chain" means no chain exists.  The exception fraction is
then tracked as c varies.
"""

from primroot import exception_scan, well_spaced_chain, wstar

print("sample chains (x = 10^4):")
for n in (5040, 2310, 4096, 9973):
    for t in (2, 3, 4):
        chain = well_spaced_chain(n, 10**4, t, 1.5)
        found = list(chain.chain) if chain else "none"
        print(f"  n = {n:>5}, t = {t}: {found}")

print("\nexception fraction over n <= 20000, t = 3:")
for c in (1.6, 1.8, 2.0, 2.5, 3.0):
    res = exception_scan(20000, 3, c)
    print(
        f"  c = {c:.1f} (delta = {res.delta:.3f}): "
        f"{res.exceptions:>6} exceptions, fraction {res.fraction:.5f}, "
        f"reference x^(-delta^2/210) = {res.paper_comparison:.5f}"
    )

print("\nnear-equal divisor pairs W*(b; sigma):")
for b in (360, 2310, 720720):
    for sigma in (0.1, 0.5, 1.0):
        print(f"  W*({b}; {sigma}) = {wstar(b, sigma)}")
