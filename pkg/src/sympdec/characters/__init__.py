from __future__ import annotations

from .class_function import ClassFunction
from .formulas import (
    CLASS_FUNCTIONS,
    character_table,
    check_sign_positivity,
    check_sign_twist,
    chi_cyclic,
    chi_induced,
    chi_irreducible,
    chi_L,
    chi_W,
    sign_violations,
    support_bound,
    verify_difference_identity,
)
from .murnaghan_nakayama import mn_character
