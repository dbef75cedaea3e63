"""
Counting colored partitions two ways
====================================

The sum side counts grounded colored partitions under the difference
conditions.  The product side is an Euler product with congruence
conditions.  The two agree term by term.
"""

from rrcrystals import (count_d_series, enumerate_partitions, product_side_series,
                        reconstruct_lambda)
from rrcrystals.sumside import congruence_table, forbidden_parts

t = "D4_3"
for r, colors in congruence_table(t).items():
    print(f"parts = {r} mod 4 may carry", [b.name for b in colors])
print("forbidden:", sorted(str(p) for p in forbidden_parts(t) if p.value > 0))

# small weights, listed explicitly
for p in range(1, 8):
    found = enumerate_partitions(t, p)
    print(p, len(found), [str(x) for x in found])

print(reconstruct_lambda(t, enumerate_partitions(t, 7)[0]))

# the transfer DP reaches much further
d = count_d_series(t, 60)
c = product_side_series(t, 60).coeffs
print("d:", d[:16])
print("c:", list(c[:16]))
print("agree up to 60:", list(c) == d)
