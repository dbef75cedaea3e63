"""
Root systems and the adjoint-type crystal
=========================================

Walk through G2(1): its positive roots, the crystal built on them and the
i-strings of that crystal.
"""

import numpy as np

from rrcrystals import build_crystal, string_stats
from rrcrystals.rootsystem import affine_config, finite_positive_roots

config = affine_config("G2_1")
print("rank", config.rank, "ht(delta) =", config.ht_delta, "dual:", config.dual.value)

# positive roots come from closing the simple roots under reflections
for root, length in finite_positive_roots(config):
    print(f"  {root.label()}  height {root.ht}  {length.value}")

# the crystal: phi, one element per root (positive and negative), one per simple root
crystal = build_crystal("G2_1")
print(len(crystal), "elements:", " ".join(crystal.names))

# f_i as an (|B|, n+1) table, -1 where no arrow leaves
print(crystal.f)

# string statistics; node 2 is the short node and has one string of length 3
lengths = crystal.phi_table() + crystal.epsilon_table()
print("longest string per node:", lengths.max(axis=0))
b = crystal.elements[crystal.index("+12")]
print("eps, phi of +12 at node 2:", string_stats(crystal, b, 2))

# the twisted type D4(3) uses short roots only
small = build_crystal("D4_3")
print(small.names)
print("arrows per node:", np.count_nonzero(small.f >= 0, axis=0))
