"""Symplectic derivations of the free Lie algebra built as explicit matrices.

h_(g,1)(k) is the kernel of the bracket map H (x) L(k+1) -> L(k+2),
a (x) u -> [a, u]. The matrices below have one row per Lyndon word of the
target and one column per pair (a, u) of the domain, so that the kernel
dimension is `cols - rank`.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from functools import lru_cache

from sympdec import config
from sympdec.combinatorics.arithmetic import witt_dimension
from sympdec.combinatorics.partitions import Partition, enumerate_partitions, format_partition
from sympdec.decomposition.decomposition import Decomposition
from sympdec.exceptions import IntegralityError, InvalidArgumentError, ResourceLimitError
from sympdec.oracle.lyndon import (
    LyndonBasis,
    build_lyndon_basis,
    expand,
    expand_bracket,
    lyndon_count,
    lyndon_words_with_content,
    standard_bracketing,
)
from sympdec.oracle.sparse import SparseExactMatrix, kernel_dimension
from sympdec.oracle.weights import (
    content_partition,
    contents_with_sp_weight,
    dominance_elimination,
    orbit_size,
    weyl_shifts,
)
from sympdec.utils.workers import parallel_map

logger = logging.getLogger(__name__)

DIRECT = 'direct'
WEIGHTS = 'weights'
METHODS = (DIRECT, WEIGHTS)


def _check_cap(what: str, size: int, key: str) -> None:
    limit = config.settings.oracle[key]
    if size > limit:
        raise ResourceLimitError(what, size, limit, f'oracle.{key}')


def _check_degree(g: int, k: int) -> None:
    if g < 1 or k < 1:
        raise InvalidArgumentError(f'Need g, k >= 1, got g={g}, k={k}')


@lru_cache(maxsize=None)
def _content_basis(content: tuple) -> LyndonBasis:
    words = tuple(lyndon_words_with_content(content))
    return LyndonBasis(len(content), sum(content), words, content=content)


def _lower(content: tuple, letter: int) -> tuple:
    out = list(content)
    out[letter] -= 1
    return tuple(out)


def _word_content(word: tuple, n_letters: int) -> tuple:
    counts = Counter(word)
    return tuple(counts.get(i, 0) for i in range(n_letters))


def bracket_domain(g: int, k: int) -> list[tuple[int, tuple]]:
    """Column labels (a, u) of the bracket map, u a Lyndon word of length
    k+1."""
    source = build_lyndon_basis(g, k + 1)
    return [(a, u) for a in range(2 * g) for u in source.words]


def bracket_map_matrix(g: int, k: int) -> SparseExactMatrix:
    """Matrix of H (x) L(k+1) -> L(k+2) in the Lyndon bases.

    witt(2g, k+2) rows and 2g witt(2g, k+1) columns.
    """
    _check_degree(g, k)
    _check_cap('Bracket map', 2 * g * witt_dimension(2 * g, k + 1), 'max_matrix_columns')

    target = build_lyndon_basis(g, k + 2)
    domain = bracket_domain(g, k)

    def column(label):
        a, u = label
        return expand_bracket((a, standard_bracketing(u)), target)

    columns = parallel_map(column, domain)
    logger.debug(f'Bracket map g={g} k={k}: {len(target)}x{len(domain)}')
    return SparseExactMatrix(len(target), len(domain), dict(enumerate(columns)))


def _block_weight(mu, k: int) -> tuple:
    mu = Partition(mu)
    if mu.size != k + 2:
        raise InvalidArgumentError(
            f'Weight {format_partition(mu)} does not have size k+2 = {k + 2}'
        )
    return tuple(mu)


def weight_block(mu, k: int) -> SparseExactMatrix:
    """The bracket map restricted to the weight space `mu`, using one letter
    per part of `mu`."""
    content = _block_weight(mu, k)
    n_cols = sum(lyndon_count(_lower(content, a)) for a in range(len(content)))
    _check_cap(f'Weight block {format_partition(content)}', n_cols, 'max_block_columns')

    target = _content_basis(content)
    columns = {}
    for a in range(len(content)):
        for u in _content_basis(_lower(content, a)).words:
            columns[len(columns)] = expand_bracket((a, standard_bracketing(u)), target)
    return SparseExactMatrix(len(target), n_cols, columns)


@lru_cache(maxsize=None)
def _weight_block_kernel(content: tuple, k: int) -> int:
    block = weight_block(content, k)
    dim = kernel_dimension(block)
    logger.debug(f'Weight {list(content)} k={k}: {block.rows}x{block.cols}, kernel {dim}')
    return dim


def weight_block_kernel(mu, k: int) -> int:
    """Dimension of the `mu` weight space of h(k), for GL of any rank
    >= l(mu)."""
    return _weight_block_kernel(_block_weight(mu, k), k)


def oracle_kernel_dimension(g: int, k: int) -> int:
    """dim h_(g,1)(k) as the sum of the weight blocks over all GL(2g)
    weights, one block per dominant weight times the size of its orbit."""
    _check_degree(g, k)
    shapes = enumerate_partitions(k + 2, max_length=2 * g)
    dims = parallel_map(lambda mu: weight_block_kernel(mu, k), shapes)
    return sum(orbit_size(mu, 2 * g) * d for mu, d in zip(shapes, dims))


def oracle_weight_decomposition(k: int) -> Decomposition:
    """Stable GL decomposition of h(k) recovered from the weight blocks."""
    if k < 1:
        raise InvalidArgumentError(f'Degree must be a positive integer, got {k}')
    shapes = enumerate_partitions(k + 2)
    dims = parallel_map(lambda mu: weight_block_kernel(mu, k), shapes)
    multiplicities = dominance_elimination(dict(zip(shapes, dims)))
    return Decomposition(k + 2, multiplicities, f'h({k})')


def raising_operators(g: int) -> list[dict[int, tuple[int, int]]]:
    """Simple root vectors of sp(2g) acting on letters, letter -> (image,
    coefficient).

    X_i: a_(i+1) -> a_i, b_i -> -b_(i+1) for i < g, and Y: b_g -> a_g. They
    preserve the form with <a_i, b_i> = 1.
    """
    ops = [{i + 1: (i, 1), g + i: (g + i + 1, -1)} for i in range(g - 1)]
    ops.append({2 * g - 1: (g - 1, 1)})
    return ops


def apply_letterwise(op: dict, vec: dict[tuple, int]) -> dict[tuple, int]:
    """Extend a linear map on letters to words as a derivation of the tensor
    algebra."""
    out = defaultdict(int)
    for w, c in vec.items():
        for pos, letter in enumerate(w):
            image = op.get(letter)
            if image:
                new, coefficient = image
                out[w[:pos] + (new,) + w[pos + 1 :]] += coefficient * c
    return {w: c for w, c in out.items() if c}


def _weight_zero_domain(g: int, k: int) -> list[tuple[int, tuple]]:
    domain = []
    contents = list(contents_with_sp_weight((0,) * g, k + 2))
    n_cols = sum(lyndon_count(_lower(c, a)) for c in contents for a in range(2 * g) if c[a])
    _check_cap('Weight zero subspace', n_cols, 'max_matrix_columns')
    for c in contents:
        for a in range(2 * g):
            if c[a]:
                domain.extend((a, u) for u in _content_basis(_lower(c, a)).words)
    return domain


def invariant_matrix(g: int, k: int) -> SparseExactMatrix:
    """Bracket map stacked with the sp(2g) raising operators on the weight
    zero part of H (x) L(k+1).

    The raising operators act on the image of a (x) P(u) in the tensor
    algebra; their rows are labelled by words. A weight zero vector killed by
    all of them is a highest weight vector of weight zero, so the kernel is
    the space of invariants.
    """
    n = 2 * g
    ops = raising_operators(g)
    domain = _weight_zero_domain(g, k)

    def column(label):
        a, u = label
        tree = (a, standard_bracketing(u))
        content = _word_content((a,) + u, n)
        coords = expand_bracket(tree, _content_basis(content))
        out = {('bracket', content, i): v for i, v in coords.items()}
        embedded = {(a,) + w: y for w, y in expand(standard_bracketing(u)).items()}
        for n_op, op in enumerate(ops):
            for w, v in apply_letterwise(op, embedded).items():
                out[(n_op, w)] = v
        return out

    rows = {}
    columns = {}
    for j, keyed in enumerate(parallel_map(column, domain)):
        columns[j] = {rows.setdefault(key, len(rows)): v for key, v in keyed.items()}
    logger.debug(f'Invariant matrix g={g} k={k}: {len(rows)}x{len(domain)}')
    return SparseExactMatrix(len(rows), len(domain), columns)


def _invariants_from_weights(g: int, k: int) -> int:
    total = 0
    for shift, sign in weyl_shifts(g):
        dim = sum(
            weight_block_kernel(content_partition(c), k)
            for c in contents_with_sp_weight(shift, k + 2)
        )
        total += sign * dim
    if total < 0:
        raise IntegralityError(f'Negative invariant dimension {total} for g={g}, k={k}')
    return total


def sp_invariant_dimension(g: int, k: int, method: str = DIRECT) -> int:
    """Dimension of the sp(2g) invariants of h_(g,1)(k).

    Parameters
    ----------
    g, k : int
        Genus and degree.
    method : str
        `direct` intersects the kernel of the bracket map with the kernels
        of the raising operators on the weight zero subspace. `weights` takes
        the alternating sum of the weight space dimensions over the Weyl
        group of Sp(2g).
    """
    _check_degree(g, k)
    if method not in METHODS:
        raise InvalidArgumentError(f'Unknown method `{method}`, use one of {METHODS}')
    if k % 2:
        # no vector of weight zero in odd tensor degree
        return 0
    if method == WEIGHTS:
        return _invariants_from_weights(g, k)
    return kernel_dimension(invariant_matrix(g, k))
