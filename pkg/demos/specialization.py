"""
Principal specialization
========================

Specialize the denominator of the dual affine type at two vectors, divide,
and divide once more by (q^h; q^h) with h = ht(delta).  The result is the
product-side series.
"""

from rrcrystals import (normalized_character_series, product_side_series,
                        specialized_D, sum_side_series)
from rrcrystals.productside import level_one_vector, principal_vector
from rrcrystals.rootsystem import ALL_TYPES, affine_config

N = 30
for t in ALL_TYPES:
    dual = affine_config(t).dual
    den = specialized_D(dual, principal_vector(dual), N)
    num = specialized_D(dual, level_one_vector(dual), N)
    print(t.value, "dual", dual.value)
    print("  D(1)      ", den.coeffs[:12])
    print("  D(2,1..1) ", num.coeffs[:12])
    print("  character ", normalized_character_series(t, N).coeffs[:12])
    print("  same as c:", sum_side_series(t, N) == product_side_series(t, N))

# two coincidences between different types
print(product_side_series("D4_3", 60) == product_side_series("E6_1", 60))
print(product_side_series("E6_2", 60) == product_side_series("E7_1", 60))
