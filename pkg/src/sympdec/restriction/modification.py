"""Sp(2g) modification rules for universal symplectic characters.

Restricting a GL(2g) irreducible s_lam to Sp(2g) gives, universally,
sum over mu and even-column beta of c^lam_(mu beta) <mu>. A label <mu> with
more than g rows is not a genuine Sp(2g) character: it is rewritten by
removing a boundary strip of length h = 2 l(mu) - 2g - 2 starting at the
foot of the first column, with sign (-1)^(columns of the strip), repeated
until at most g rows remain, or it vanishes (h = 0, or the removal does not
leave a partition).
"""

from __future__ import annotations

from functools import lru_cache

from sympdec.combinatorics.partitions import Partition, has_even_columns
from sympdec.restriction.littlewood_richardson import skew_lr_expansion, subpartitions


def _remove_boundary_strip(mu: tuple, h: int) -> tuple[tuple, int] | None:
    """Remove `h` cells along the rim starting at the bottom of column 0.

    Returns the new partition and the number of columns the strip occupies,
    or None if no partition is left.
    """
    i, j = len(mu) - 1, 0
    removed = []
    while len(removed) < h:
        if i < 0:
            return None
        removed.append((i, j))
        if j + 1 < mu[i]:
            j += 1
        else:
            i -= 1

    rows = list(mu)
    per_row = {}
    for r, c in removed:
        per_row.setdefault(r, []).append(c)
    for r, cols in per_row.items():
        rows[r] -= len(cols)
        # the strip must take the right end of every row it touches
        if min(cols) != rows[r]:
            return None

    rows = [r for r in rows if r]
    if any(rows[x] < rows[x + 1] for x in range(len(rows) - 1)):
        return None
    n_columns = len({c for _, c in removed})
    return tuple(rows), n_columns


@lru_cache(maxsize=None)
def modify(mu: tuple, genus: int) -> tuple[int, tuple]:
    """Rewrite the universal label <mu> as a standard Sp(2g) label.

    Returns `(sign, nu)` with l(nu) <= g, or `(0, ())` if the label
    vanishes.
    """
    sign = 1
    while len(mu) > genus:
        h = 2 * len(mu) - 2 * genus - 2
        if h == 0:
            return 0, ()
        result = _remove_boundary_strip(mu, h)
        if result is None:
            return 0, ()
        mu, n_columns = result
        if n_columns % 2:
            sign = -sign
    return sign, mu


@lru_cache(maxsize=None)
def _modification_invariants(lam: tuple, genus: int) -> int:
    total = 0
    for mu in subpartitions(lam):
        if (sum(lam) - sum(mu)) % 2:
            continue
        if mu:
            sign, nu = modify(tuple(mu), genus)
            if not sign or nu:
                continue
        else:
            sign = 1
        expansion = skew_lr_expansion(Partition._trusted(lam), mu)
        total += sign * sum(c for beta, c in expansion.items() if has_even_columns(beta))
    return total


def modification_invariant_multiplicity(
    lam: Partition, genus: int, truncate: bool = True
) -> int:
    """Dimension of the Sp(2g) invariants of the GL(2g) irreducible `lam`,
    from universal branching followed by the modification rules.

    Diagrams with more than 2g rows are zero as GL(2g) modules; with
    `truncate=False` the alternating sum is evaluated for them anyway (it
    must then cancel to zero).
    """
    lam = Partition(lam)
    if truncate and len(lam) > 2 * genus:
        return 0
    return _modification_invariants(tuple(lam), genus)
