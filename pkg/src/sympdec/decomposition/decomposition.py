from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from sympdec.characters.class_function import ClassFunction
from sympdec.characters.formulas import chi_cyclic, chi_L, chi_W
from sympdec.characters.murnaghan_nakayama import mn_character
from sympdec.combinatorics.dimensions import gl_dimension
from sympdec.combinatorics.partitions import (
    Partition,
    centralizer_order,
    conjugate,
    enumerate_partitions,
    format_partition,
    hook_length_dimension,
    sort_key,
)
from sympdec.exceptions import IntegralityError, InvalidArgumentError
from sympdec.utils.workers import parallel_map

logger = logging.getLogger(__name__)

_source = re.compile(r'^(h|Lie|assoc)\((\d+)\)$')


@dataclass(frozen=True)
class Decomposition:
    """Irreducible decomposition, a multiset of partitions of `n`.

    Parameters
    ----------
    n : int
        Size of every partition in the decomposition.
    multiplicities : Mapping[Partition, int]
        Positive multiplicities; zero entries are dropped.
    source : str
        `h(k)`, `Lie(k)` or `assoc(k)`.
    """

    n: int
    multiplicities: Mapping[Partition, int] = field(default_factory=dict)
    source: str = ''

    def __post_init__(self):
        cleaned = {}
        for lam, m in self.multiplicities.items():
            lam = Partition(lam)
            if lam.size != self.n:
                raise InvalidArgumentError(f'{list(lam)} is not a partition of {self.n}')
            if m < 0 or m != int(m):
                raise IntegralityError(f'Invalid multiplicity {m} for {list(lam)}')
            if m:
                cleaned[lam] = int(m)
        object.__setattr__(self, 'multiplicities', cleaned)

    def __getitem__(self, lam) -> int:
        return self.multiplicities.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self.partitions())

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.n == other.n and self.multiplicities == other.multiplicities

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    @property
    def algebra(self) -> str:
        match = _source.match(self.source)
        return match.group(1) if match else ''

    @property
    def degree(self) -> int:
        """The degree k of the source, n = k + 2 for h and assoc."""
        match = _source.match(self.source)
        if match:
            return int(match.group(2))
        return self.n

    def partitions(self) -> list[Partition]:
        return sorted(self.multiplicities, key=sort_key)

    def items(self) -> list[tuple[Partition, int]]:
        return [(lam, self.multiplicities[lam]) for lam in self.partitions()]

    def conjugate(self) -> Decomposition:
        return Decomposition(
            self.n, {conjugate(lam): m for lam, m in self.multiplicities.items()}, self.source
        )

    def restricted(self, genus: int) -> Decomposition:
        """Keep only the diagrams with at most 2g rows (the GL(2g) part)."""
        return Decomposition(
            self.n,
            {lam: m for lam, m in self.multiplicities.items() if len(lam) <= 2 * genus},
            self.source,
        )

    def s_module_dimension(self) -> int:
        """Dimension of the symmetric group module, sum of m * f^lam."""
        return sum(m * hook_length_dimension(lam) for lam, m in self.multiplicities.items())

    def total_multiplicity(self) -> int:
        return sum(self.multiplicities.values())

    def __str__(self):
        terms = []
        for lam, m in self.items():
            term = format_partition(lam, exponent=True)
            terms.append(term if m == 1 else f'{m}{term}')
        return ' + '.join(terms) if terms else '0'


def multiplicity(lam: Partition, chi: ClassFunction) -> int:
    """Multiplicity of the irreducible `lam` in the class function `chi`.

    sum over the support of chi of chi(mu) chi_lam(mu) / z_mu. The sum only
    runs over the (small) support, never over all classes.
    """
    lam = Partition(lam)
    if lam.size != chi.degree:
        raise InvalidArgumentError(
            f'{format_partition(lam)} is not a partition of the degree {chi.degree}'
        )
    total = Fraction(0)
    for mu, value in chi.values.items():
        total += Fraction(value * mn_character(lam, mu), centralizer_order(mu))
    if total.denominator != 1 or total < 0:
        raise IntegralityError(
            f'Multiplicity of {format_partition(lam)} in {chi.label} came out as {total}'
        )
    return int(total)


def decompose(chi: ClassFunction, source: str = '', threads: int = None) -> Decomposition:
    """Decompose a character into irreducibles, in parallel over the shapes."""
    shapes = enumerate_partitions(chi.degree)
    values = parallel_map(lambda lam: multiplicity(lam, chi), shapes, threads=threads)
    logger.debug(f'Decomposed {chi.label} of degree {chi.degree} over {len(shapes)} shapes')
    return Decomposition(chi.degree, dict(zip(shapes, values)), source)


@lru_cache(maxsize=None)
def decompose_h(k: int) -> Decomposition:
    """Stable GL decomposition of the degree `k` symplectic derivations.

    Valid at every genus g once diagrams with more than 2g rows are dropped.
    """
    return decompose(chi_W(k), source=f'h({k})')


@lru_cache(maxsize=None)
def decompose_lie(k: int) -> Decomposition:
    """GL decomposition of the degree `k` part of the free Lie algebra."""
    return decompose(chi_L(k), source=f'Lie({k})')


@lru_cache(maxsize=None)
def decompose_cyclic(k: int) -> Decomposition:
    """Cyclic invariants of the (k+2)-fold tensor power, the character side
    description of the associative symplectic derivations."""
    return decompose(chi_cyclic(k), source=f'assoc({k})')


def dimension_of(dec: Decomposition, genus: int) -> int:
    """Dimension of the decomposition as a GL(2g) module."""
    if genus < 1:
        raise InvalidArgumentError(f'Genus must be at least 1, got {genus}')
    return sum(m * gl_dimension(lam, 2 * genus) for lam, m in dec.multiplicities.items())
