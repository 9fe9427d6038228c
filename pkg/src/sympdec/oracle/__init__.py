from __future__ import annotations

from .associative import (
    ASSOC_REFERENCE,
    AssocReferenceReport,
    assoc_decompose,
    assoc_reference_check,
    assoc_weight_dimension,
)
from .derivations import (
    DIRECT,
    METHODS,
    WEIGHTS,
    bracket_map_matrix,
    invariant_matrix,
    oracle_kernel_dimension,
    oracle_weight_decomposition,
    sp_invariant_dimension,
    weight_block,
    weight_block_kernel,
)
from .lyndon import (
    LyndonBasis,
    build_lyndon_basis,
    expand,
    expand_bracket,
    is_lyndon,
    lyndon_count,
    lyndon_words,
    standard_bracketing,
)
from .sparse import SparseExactMatrix, certified_rank, kernel_dimension
