from __future__ import annotations

from .branching import (
    GENUS_ONE,
    PUBLISHED_INVARIANTS,
    STABLE,
    UNSTABLE,
    InvariantValue,
    SpDecomposition,
    even_column_partitions,
    genus_one_invariant_dim,
    invariant_table,
    invariant_value,
    spherical_invariant_multiplicity,
    stabilization_genus,
    stable_invariant_dim,
    stable_restrict,
    unstable_invariant_dim,
)
from .littlewood_richardson import lr_coefficient, skew_lr_expansion, subpartitions
from .modification import modification_invariant_multiplicity, modify
