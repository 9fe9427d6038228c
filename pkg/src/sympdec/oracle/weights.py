from __future__ import annotations

import itertools
from collections import Counter
from math import factorial, prod
from typing import Iterator, Mapping

from sympdec.combinatorics.kostka import kostka_number
from sympdec.combinatorics.partitions import Partition, sort_key
from sympdec.exceptions import IntegralityError


def content_partition(content) -> Partition:
    """Sorted nonzero letter counts, the dominant weight in the orbit."""
    return Partition._trusted(tuple(sorted((c for c in content if c), reverse=True)))


def orbit_size(mu: Partition, n_letters: int) -> int:
    """Number of distinct rearrangements of `mu` padded with zeros to
    `n_letters` entries."""
    padded = tuple(mu) + (0,) * (n_letters - len(mu))
    return factorial(n_letters) // prod(factorial(m) for m in Counter(padded).values())


def dominance_elimination(weight_dims: Mapping[Partition, int]) -> dict[Partition, int]:
    """Irreducible multiplicities from dominant weight-space dimensions.

    `weight_dims` maps every dominant weight mu (a partition) to the
    dimension of the mu weight space. Going down in decreasing lexicographic
    order, which refines dominance,

        m_lam = dim V[lam] - sum_(nu > lam) m_nu K_(nu lam)
    """
    shapes = sorted((Partition(mu) for mu in weight_dims), key=sort_key)
    found = {}
    for lam in shapes:
        m = weight_dims[lam] - sum(mult * kostka_number(nu, lam) for nu, mult in found.items())
        if m < 0:
            raise IntegralityError(
                f'Negative multiplicity {m} for {list(lam)}: weight dimensions are inconsistent'
            )
        if m:
            found[lam] = m
    return found


def signed_permutations(n: int) -> Iterator[tuple[tuple, tuple, int]]:
    """Weyl group of type C_n as (permutation, signs, determinant sign)."""
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        for signs in itertools.product((1, -1), repeat=n):
            yield perm, signs, (-1) ** inversions * prod(signs)


def symplectic_rho(genus: int) -> tuple:
    return tuple(range(genus, 0, -1))


def weyl_shifts(genus: int) -> Iterator[tuple[tuple, int]]:
    """(rho - w rho, sign of w) for every w in the Weyl group of Sp(2g).

    The multiplicity of the trivial module in V is the alternating sum of
    dim V[rho - w rho].
    """
    rho = symplectic_rho(genus)
    for perm, signs, sign in signed_permutations(genus):
        w_rho = tuple(signs[i] * rho[perm[i]] for i in range(genus))
        yield tuple(r - x for r, x in zip(rho, w_rho)), sign


def contents_with_sp_weight(nu: tuple, degree: int) -> Iterator[tuple]:
    """Letter contents (count of a_1..a_g, then b_1..b_g) of total `degree`
    whose Sp torus weight count(a_i) - count(b_i) equals `nu`."""
    genus = len(nu)
    excess = degree - sum(abs(x) for x in nu)
    if excess < 0 or excess % 2:
        return
    for split in _compositions(excess // 2, genus):
        a = tuple(max(x, 0) + t for x, t in zip(nu, split))
        b = tuple(max(-x, 0) + t for x, t in zip(nu, split))
        yield a + b


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
