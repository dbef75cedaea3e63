"""
The difference matrix
=====================

F(b1 (x) b2) is propagated over the tensor square from F(phi (x) phi) = 0.
Every cell is nonnegative, and undoing the weight shift gives an energy in
{0, 1, 2}.
"""

import numpy as np

from rrcrystals import difference_matrix, energy_matrix, recover_H
from rrcrystals.formats import render_matrix

m = difference_matrix("D4_3")
print(render_matrix(m, "md"))

H = energy_matrix(m)
print("energy values:", np.unique(H))
print("H(+21 (x) -21) =", recover_H(m, "+21", "-21"))

# the same for all types; E8(1) has 249^2 = 62001 cells
for key in ("G2_1", "F4_1", "E6_2", "E6_1", "E7_1", "E8_1"):
    m = difference_matrix(key)
    counts = np.bincount(energy_matrix(m).ravel(), minlength=3)
    print(f"{key}: {m.entries.shape}, min F = {m.entries.min()}, H counts {counts}")
