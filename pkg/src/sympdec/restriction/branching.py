from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from sympdec.characters.formulas import chi_W
from sympdec.combinatorics.partitions import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    has_even_columns,
    sort_key,
)
from sympdec.decomposition.decomposition import Decomposition, multiplicity
from sympdec.exceptions import InvalidArgumentError
from sympdec.restriction.littlewood_richardson import skew_lr_expansion, subpartitions
from sympdec.utils.workers import parallel_map

logger = logging.getLogger(__name__)

GENUS_ONE = 'genus-one'
UNSTABLE = 'unstable'
STABLE = 'stable-even-column'

# published invariant dimensions, genus 1 to 8 followed by the stable value
PUBLISHED_INVARIANTS = {
    18: (57, 100908, 888099, 1548984, 1710798, 1728591, 1729620, 1729656, 1729657),
    20: (108, 869798, 12057806, 25062360, 29129790, 29688027, 29728348, 29729957, 29729988),
}


@dataclass(frozen=True)
class SpDecomposition:
    """Stable Sp decomposition, labelled by partitions of size <= k+2 with
    the parity of k+2."""

    degree: int
    multiplicities: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for mu, m in self.multiplicities.items():
            mu = Partition(mu)
            if mu.size > self.degree + 2 or (self.degree - mu.size) % 2:
                raise InvalidArgumentError(
                    f'Sp label {list(mu)} does not fit degree {self.degree}'
                )
            if m:
                cleaned[mu] = m
        object.__setattr__(self, 'multiplicities', cleaned)

    def __getitem__(self, mu) -> int:
        return self.multiplicities.get(Partition(mu), 0)

    def items(self) -> list[tuple[Partition, int]]:
        shapes = sorted(self.multiplicities, key=sort_key)
        return [(mu, self.multiplicities[mu]) for mu in shapes]

    @property
    def invariant_dimension(self) -> int:
        return self[EMPTY]


def stable_restrict(dec: Decomposition) -> SpDecomposition:
    """Stable GL -> Sp branching.

    mult(mu) = sum_lam m_lam sum_(beta even columns) c^lam_(mu beta)
    """

    def branch(lam: Partition) -> dict:
        out = {}
        for mu in subpartitions(lam):
            if (lam.size - mu.size) % 2:
                continue
            count = sum(
                c for beta, c in skew_lr_expansion(lam, mu).items() if has_even_columns(beta)
            )
            if count:
                out[mu] = count
        return out

    shapes = dec.partitions()
    totals = defaultdict(int)
    for lam, branched in zip(shapes, parallel_map(branch, shapes)):
        for mu, count in branched.items():
            totals[mu] += dec[lam] * count
    return SpDecomposition(dec.n - 2, dict(totals))


@lru_cache(maxsize=None)
def even_column_partitions(n: int) -> tuple:
    """Partitions of `n` with only even columns, conjugates of 2*rho."""
    if n % 2:
        return ()
    return tuple(
        conjugate(Partition._trusted(tuple(2 * p for p in rho)))
        for rho in enumerate_partitions(n // 2)
    )


@lru_cache(maxsize=None)
def _even_column_multiplicities(k: int) -> tuple:
    chi = chi_W(k)
    shapes = even_column_partitions(k + 2)
    values = parallel_map(lambda lam: multiplicity(lam, chi), shapes)
    return tuple((lam, m) for lam, m in zip(shapes, values) if m)


def stable_invariant_dim(k: int) -> int:
    """Stable dimension of the Sp invariants in degree `k`, sum of m_lam over
    even-column lam."""
    if k < 1:
        raise InvalidArgumentError(f'Degree must be a positive integer, got {k}')
    return sum(m for _, m in _even_column_multiplicities(k))


def genus_one_invariant_dim(k: int) -> int:
    """Sp(2) invariants at genus one: the multiplicity of [(k+2)/2, (k+2)/2]."""
    if k < 2 or k % 2:
        raise InvalidArgumentError(f'The genus one rule needs an even degree k >= 2, got {k}')
    half = (k + 2) // 2
    return multiplicity(Partition._trusted((half, half)), chi_W(k))


def spherical_invariant_multiplicity(lam: Partition, genus: int) -> int:
    """Dimension of the Sp(2g) invariants in the GL(2g) irreducible `lam`.

    (GL(2g), Sp(2g)) is a spherical pair: the invariants are at most one
    dimensional, and present exactly for the even-column diagrams with at most
    2g rows.
    """
    lam = Partition(lam)
    return int(len(lam) <= 2 * genus and has_even_columns(lam))


def invariant_method(k: int, genus: int) -> str:
    if genus == 1:
        return GENUS_ONE
    if 2 * genus >= k + 2:
        return STABLE
    return UNSTABLE


def unstable_invariant_dim(k: int, genus: int) -> int:
    """Dimension of the Sp(2g) invariants of h_(g,1)(k) at a given genus.

    sum_lam m_lam r_g(lam), with r_g the spherical multiplicity. Only the
    even-column diagrams contribute, so the cost is that of the stable value.
    """
    if k < 1 or genus < 1:
        raise InvalidArgumentError(f'Need k, g >= 1, got k={k}, g={genus}')
    return sum(
        m * spherical_invariant_multiplicity(lam, genus)
        for lam, m in _even_column_multiplicities(k)
    )


@dataclass(frozen=True)
class InvariantValue:
    degree: int
    genus: int | None
    value: int
    method: str

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'genus': self.genus,
            'value': self.value,
            'method': self.method,
        }


def invariant_value(k: int, genus: int = None) -> InvariantValue:
    """Invariant dimension at `genus` (None: stable) with the code path used."""
    if genus is None:
        return InvariantValue(k, None, stable_invariant_dim(k), STABLE)
    method = invariant_method(k, genus)
    if method == GENUS_ONE:
        value = genus_one_invariant_dim(k) if k % 2 == 0 else 0
    elif method == STABLE:
        value = stable_invariant_dim(k)
    else:
        value = unstable_invariant_dim(k, genus)
    return InvariantValue(k, genus, value, method)


def invariant_table(k: int, genera: Iterable[int] = None) -> list[InvariantValue]:
    """Per-genus invariant dimensions, by default up to the stable range."""
    if genera is None:
        genera = range(1, stable_range_genus(k) + 1)
    return [invariant_value(k, g) for g in genera]


def stable_range_genus(k: int) -> int:
    """Genus from which no diagram of size k+2 has too many rows."""
    return (k + 3) // 2


def stabilization_genus(k: int) -> int:
    """Smallest genus from which the invariant dimension equals its stable
    value, found by evaluating every genus up to the stable range."""
    stable = stable_invariant_dim(k)
    values = [unstable_invariant_dim(k, g) for g in range(1, stable_range_genus(k) + 1)]
    genus = len(values)
    while genus > 1 and values[genus - 2] == stable:
        genus -= 1
    logger.debug(f'Degree {k}: invariants stable ({stable}) from genus {genus}')
    return genus
