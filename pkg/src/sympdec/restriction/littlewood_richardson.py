from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator

from sympdec.combinatorics.partitions import Partition


def _lr_fillings(lam: tuple, mu: tuple, content: tuple = None) -> Iterator[tuple]:
    """Backtrack over Littlewood-Richardson tableaux of skew shape lam/mu.

    Cells are filled row by row from the top, each row from right to left, so
    the order of placement is the reverse reading word and the lattice
    condition can be checked on every prefix. Yields the content of every
    complete tableau. With `content` given only tableaux of that content are
    produced.
    """
    n_rows = len(lam)
    mu = mu + (0,) * (n_rows - len(mu))
    cells = [(i, j) for i in range(n_rows) for j in range(lam[i] - 1, mu[i] - 1, -1)]
    n_cells = len(cells)
    filled = {}
    counts = [0] * (n_rows + 2)

    def rec(idx: int):
        if idx == n_cells:
            yield tuple(c for c in counts[1:] if c)
            return
        i, j = cells[idx]
        # entries in row i never exceed i + 1
        upper = min(i + 1, filled.get((i, j + 1), i + 1))
        lower = filled[(i - 1, j)] + 1 if i > 0 and j >= mu[i - 1] else 1
        if content is not None:
            upper = min(upper, len(content))
        for v in range(lower, upper + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if content is not None and counts[v] >= content[v - 1]:
                continue
            filled[(i, j)] = v
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1
            del filled[(i, j)]

    yield from rec(0)


def _fits(outer: tuple, inner: tuple) -> bool:
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def skew_lr_expansion(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Expansion of the skew Schur function s_(lam/mu) as {nu: c^lam_(mu nu)}."""
    lam, mu = tuple(lam), tuple(mu)
    if not _fits(lam, mu):
        return {}
    counts = Counter(_lr_fillings(lam, mu))
    return {Partition._trusted(nu): c for nu, c in counts.items()}


@lru_cache(maxsize=None)
def _lr_coefficient(lam: tuple, mu: tuple, nu: tuple) -> int:
    if not (_fits(lam, mu) and _fits(lam, nu)):
        return 0
    return sum(1 for _ in _lr_fillings(lam, mu, content=nu))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_(mu nu).

    Counts LR tableaux of shape lam/mu and content nu; zero when the sizes do
    not add up.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    return _lr_coefficient(tuple(lam), tuple(mu), tuple(nu))


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions whose diagram fits inside `lam`, the empty one
    included."""
    lam = tuple(lam)

    def rec(i: int, cap: int, prefix: tuple):
        yield prefix
        if i == len(lam):
            return
        for part in range(min(cap, lam[i]), 0, -1):
            yield from rec(i + 1, part, prefix + (part,))

    for mu in rec(0, lam[0] if lam else 0, ()):
        yield Partition._trusted(mu)
