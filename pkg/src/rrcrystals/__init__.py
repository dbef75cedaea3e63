"""Level-one perfect crystals and Rogers-Ramanujan type identities for the
exceptional affine types G2(1), D4(3), F4(1), E6(2), E6(1), E7(1), E8(1)."""

from .check import CheckReport, run_check
from .crystal import GROUND, Crystal, CrystalElement, Kind, build_crystal, parse_element, string_stats
from .energy import (ConsistencyError, CoverageError, DifferenceMatrix, IntegrityError,
                     build_tensor_arrows, compute_F, difference_matrix, energy_matrix, recover_H)
from .productside import (TruncatedSeries, multiplicity_a, normalized_character_series,
                          pochhammer_factor, product_side_series, specialized_D,
                          sum_side_series)
from .rootsystem import (ALL_TYPES, AffineType, Root, TypeConfig, affine_config,
                         affine_positive_root_heights, crystal_root_data, finite_positive_roots)
from .sumside import (BudgetError, ColoredPart, ColoredPartition, congruence_table,
                      count_d_series, enumerate_partitions, forbidden_parts, gamma,
                      is_admissible, reconstruct_lambda)

__version__ = "0.1.0"
