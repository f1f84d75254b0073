"""Exact Jacobsthal function values and their coprime-free witness windows.

J(m) is the least J such that any J consecutive integers contain one
coprime to m.  It only depends on the radical of m, grows with the number
of prime factors, and is compared here against c*(w log(w+1))^2.
"""

import math

from primroot import iwaniec_bound, jacobsthal

primorial = 1
print(f"{'m':>10} {'omega':>5} {'J(m)':>5} {'(w log(w+1))^2':>15}  witness window")
for omega, q in enumerate((2, 3, 5, 7, 11, 13, 17, 19), start=1):
    primorial *= q
    jv = jacobsthal(primorial)
    w = jv.witness_start
    window = f"[{w + 1}, {w + jv.J - 1}]" if w is not None else "empty"
    print(
        f"{primorial:>10} {omega:>5} {jv.J:>5} {iwaniec_bound(primorial):>15.2f}  {window}"
    )
    # sanity: nothing in the window is coprime to m
    if w is not None:
        assert all(math.gcd(w + i, primorial) > 1 for i in range(1, jv.J))

print("\nJ depends only on the radical:")
for m in (2, 4, 1024, 6, 36, 216):
    print(f"  J({m}) = {jacobsthal(m).J}")
