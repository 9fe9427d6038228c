from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from sympdec.combinatorics.partitions import Partition, hook_length_dimension
from sympdec.exceptions import InvalidArgumentError


def remove_rim_hooks(lam: tuple, r: int) -> Iterator[tuple[tuple, int]]:
    """Yield `(nu, height)` for every rim hook of length `r` in `lam`.

    Works on beta numbers: a rim hook of length r corresponds to moving one
    bead b to the free position b - r, and the height (leg length) of the
    hook is the number of beads strictly in between.
    """
    n_rows = len(lam)
    beta = [part + n_rows - 1 - i for i, part in enumerate(lam)]
    beads = set(beta)
    for b in beta:
        c = b - r
        if c < 0 or c in beads:
            continue
        height = sum(1 for x in beta if c < x < b)
        moved = sorted((beads - {b}) | {c}, reverse=True)
        nu = tuple(x - (n_rows - 1 - i) for i, x in enumerate(moved))
        yield tuple(p for p in nu if p), height


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    if mu[0] == 1:
        return hook_length_dimension(Partition._trusted(lam))
    if len(lam) == 1:
        return 1
    head, rest = mu[0], mu[1:]
    total = 0
    for nu, height in remove_rim_hooks(lam, head):
        value = _mn(nu, rest)
        total += -value if height % 2 else value
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character of S_n indexed by `lam` at cycle type `mu`.

    Murnaghan-Nakayama rule, removing the largest cycle first. Results are
    memoized on the pair of canonical tuples; a class of only fixed points is
    answered by the hook length formula.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise InvalidArgumentError(
            f'Shape {list(lam)} and cycle type {list(mu)} have different sizes'
        )
    return _mn(tuple(lam), tuple(mu))


def cache_info():
    return _mn.cache_info()
