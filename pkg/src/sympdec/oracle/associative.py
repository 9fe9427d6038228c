"""Symplectic derivations of the free associative algebra without unit.

A degree k derivation is an element of H (x) H^(k+1); writing it as a sum of
words a u, the condition D(omega_0) = 0 reads sum (a u - u a) = 0. On each
weight space the constraint is the matrix w -> w - rot(w), with rot moving
the first letter to the end, and its kernel is spanned by the cyclic
invariants.
"""

from __future__ import annotations

import logging
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from math import factorial, prod

from sympy.utilities.iterables import multiset_permutations

from sympdec import config
from sympdec.combinatorics.partitions import Partition, enumerate_partitions, format_partition
from sympdec.decomposition.decomposition import Decomposition, decompose_cyclic
from sympdec.exceptions import InvalidArgumentError, ResourceLimitError
from sympdec.oracle.sparse import SparseExactMatrix, kernel_dimension
from sympdec.oracle.weights import dominance_elimination
from sympdec.utils.workers import parallel_map
from sympdec.warnings import ReferenceMismatchWarning

logger = logging.getLogger(__name__)

# published decompositions of a_g(k), stable in g
ASSOC_REFERENCE = {
    1: {(3,): 1, (1, 1, 1): 1},
    3: {(5,): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (1, 1, 1, 1, 1): 1},
}


def rotate(word: tuple) -> tuple:
    return word[1:] + word[:1]


def omega_block(mu, k: int) -> SparseExactMatrix:
    """The constraint w -> w - rot(w) on the weight space `mu` of
    H (x) H^(k+1)."""
    mu = Partition(mu)
    if mu.size != k + 2:
        raise InvalidArgumentError(f'Weight {format_partition(mu)} does not have size {k + 2}')
    size = factorial(mu.size) // prod(factorial(p) for p in mu)
    limit = config.settings.oracle['max_block_columns']
    if size > limit:
        raise ResourceLimitError(
            f'Associative block {format_partition(mu)}', size, limit, 'oracle.max_block_columns'
        )

    multiset = [letter for letter, count in enumerate(mu) for _ in range(count)]
    words = [tuple(w) for w in multiset_permutations(multiset)]
    index = {w: i for i, w in enumerate(words)}
    columns = {}
    for j, w in enumerate(words):
        column = defaultdict(int)
        column[j] += 1
        column[index[rotate(w)]] -= 1
        columns[j] = column
    return SparseExactMatrix(len(words), len(words), columns)


def assoc_weight_dimension(mu, k: int) -> int:
    return kernel_dimension(omega_block(mu, k))


def assoc_decompose(g: int | None, k: int) -> Decomposition:
    """GL decomposition of the degree `k` symplectic derivations of the free
    associative algebra.

    With `g` given only the diagrams with at most 2g rows are recovered;
    `None` gives the stable answer.
    """
    if k < 1:
        raise InvalidArgumentError(f'Degree must be a positive integer, got {k}')
    if g is not None and g < 1:
        raise InvalidArgumentError(f'Genus must be a positive integer, got {g}')
    max_length = None if g is None else 2 * g
    shapes = enumerate_partitions(k + 2, max_length=max_length)
    dims = parallel_map(lambda mu: assoc_weight_dimension(mu, k), shapes)
    logger.debug(f'Associative weight dimensions k={k}: {dict(zip(map(tuple, shapes), dims))}')
    return Decomposition(k + 2, dominance_elimination(dict(zip(shapes, dims))), f'assoc({k})')


@dataclass
class AssocReferenceReport:
    """Computed associative decomposition against the published one (when
    known) and against the induced character of the cyclic group."""

    degree: int
    computed: Decomposition
    cyclic: Decomposition
    reference: Decomposition | None = None
    discrepancies: list = field(default_factory=list)

    @property
    def agrees_with_cyclic(self) -> bool:
        return self.computed == self.cyclic

    @property
    def agrees_with_reference(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'has_reference': self.reference is not None,
            'agrees_with_reference': self.agrees_with_reference,
            'agrees_with_cyclic': self.agrees_with_cyclic,
            'discrepancies': [
                {'partition': list(lam), 'computed': computed, 'reference': reference}
                for lam, computed, reference in self.discrepancies
            ],
        }


def assoc_reference_check(k: int, computed: Decomposition = None) -> AssocReferenceReport:
    """Compare `assoc_decompose(None, k)` with the published values.

    Disagreements are returned and warned about, never corrected.
    """
    if computed is None:
        computed = assoc_decompose(None, k)
    cyclic = decompose_cyclic(k)

    reference = None
    discrepancies = []
    if k in ASSOC_REFERENCE:
        reference = Decomposition(k + 2, ASSOC_REFERENCE[k], f'assoc({k})')
        shapes = set(computed.partitions()) | set(reference.partitions())
        for lam in enumerate_partitions(k + 2):
            if lam in shapes and computed[lam] != reference[lam]:
                discrepancies.append((lam, computed[lam], reference[lam]))

    if discrepancies:
        listing = ', '.join(
            f'{format_partition(lam, exponent=True)}: {c} (published {r})'
            for lam, c, r in discrepancies
        )
        warnings.warn(
            f'assoc({k}) differs from the published decomposition: {listing}',
            ReferenceMismatchWarning,
            stacklevel=2,
        )
    if computed != cyclic:
        logger.error(f'assoc({k}) = {computed} but the cyclic character gives {cyclic}')

    return AssocReferenceReport(k, computed, cyclic, reference, discrepancies)
