from __future__ import annotations

from .decomposition import (
    Decomposition,
    decompose,
    decompose_cyclic,
    decompose_h,
    decompose_lie,
    dimension_of,
    multiplicity,
)
from .symmetry import (
    GUARANTEED,
    NOT_GUARANTEED,
    SeriesReport,
    SymmetryReport,
    check_conjugate_symmetry,
    multiplicity_series_check,
    negative_control_report,
    symmetry_expectation,
)
