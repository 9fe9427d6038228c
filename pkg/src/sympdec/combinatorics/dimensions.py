from __future__ import annotations

import math
from functools import lru_cache

from sympdec.combinatorics.partitions import Partition, hook_lengths
from sympdec.exceptions import IntegralityError, InvalidArgumentError


@lru_cache(maxsize=None)
def gl_dimension(lam: Partition, N: int) -> int:
    """Dimension of the GL(N) irreducible with highest weight `lam`.

    Hook-content formula, prod (N + j - i) / hook(i, j). Vanishes when `lam`
    has more than N rows.
    """
    if N < 1:
        raise InvalidArgumentError(f'gl_dimension needs N >= 1, got {N}')
    if len(lam) > N:
        return 0
    numerator = math.prod(N + j - i for i, row in enumerate(lam) for j in range(row))
    value, rest = divmod(numerator, math.prod(hook_lengths(lam)))
    if rest:
        raise IntegralityError(
            f'Hook-content quotient for {list(lam)} at N={N} is not integral'
        )
    return value
