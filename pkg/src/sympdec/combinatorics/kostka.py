from __future__ import annotations

from functools import lru_cache

from sympdec.combinatorics.partitions import Partition


def _horizontal_strips(lam: tuple, m: int):
    """Partitions `nu` inside `lam` such that lam/nu is a horizontal strip of
    `m` boxes (lam[i+1] <= nu[i] <= lam[i])."""
    n_rows = len(lam)

    def rec(i: int, remaining: int, prefix: tuple):
        if i == n_rows:
            if remaining == 0:
                yield prefix
            return
        lower = lam[i + 1] if i + 1 < n_rows else 0
        for nu_i in range(lam[i], lower - 1, -1):
            removed = lam[i] - nu_i
            if removed > remaining:
                break
            yield from rec(i + 1, remaining - removed, prefix + (nu_i,))

    for nu in rec(0, m, ()):
        yield tuple(p for p in nu if p)


@lru_cache(maxsize=None)
def _kostka(lam: tuple, weight: tuple) -> int:
    if not weight:
        return 1 if not lam else 0
    *rest, last = weight
    return sum(_kostka(nu, tuple(rest)) for nu in _horizontal_strips(lam, last))


def kostka_number(lam: Partition, weight) -> int:
    """Number of semistandard tableaux of shape `lam` and content `weight`.

    Equals the dimension of the `weight` weight space of the GL irreducible
    `lam`; it only depends on the weight up to permutation.
    """
    weight = tuple(sorted((w for w in weight if w), reverse=True))
    if sum(lam) != sum(weight):
        return 0
    return _kostka(tuple(lam), weight)
