from __future__ import annotations

import pytest

from sympdec.combinatorics import Partition, witt_dimension
from sympdec.decomposition import decompose_h, dimension_of
from sympdec.exceptions import InvalidArgumentError, ResourceLimitError
from sympdec.oracle import (
    DIRECT,
    WEIGHTS,
    bracket_map_matrix,
    invariant_matrix,
    kernel_dimension,
    oracle_kernel_dimension,
    oracle_weight_decomposition,
    sp_invariant_dimension,
    weight_block,
    weight_block_kernel,
)
from sympdec.oracle.derivations import apply_letterwise, raising_operators
from sympdec.oracle.weights import (
    dominance_elimination,
    orbit_size,
    signed_permutations,
    weyl_shifts,
)
from sympdec.restriction import invariant_value


def test_bracket_map_shape():
    # rows are the target Lyndon words, columns the pairs (letter, word)
    matrix = bracket_map_matrix(1, 2)
    assert matrix.shape == (witt_dimension(2, 4), 2 * witt_dimension(2, 3))
    assert matrix.shape == (3, 4)
    assert kernel_dimension(matrix) == 1


@pytest.mark.parametrize(['g', 'k', 'dim'], [(1, 1, 0), (1, 2, 1), (1, 3, 0), (2, 2, 20)])
def test_full_matrix_kernel(g, k, dim):
    assert kernel_dimension(bracket_map_matrix(g, k)) == dim


@pytest.mark.parametrize(['g', 'k'], [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3)])
def test_oracle_kernel_dimension(g, k):
    n = 2 * g
    expected = n * witt_dimension(n, k + 1) - witt_dimension(n, k + 2)
    assert oracle_kernel_dimension(g, k) == expected
    assert oracle_kernel_dimension(g, k) == dimension_of(decompose_h(k), g)


def test_oracle_kernel_matches_full_matrix():
    assert oracle_kernel_dimension(2, 2) == kernel_dimension(bracket_map_matrix(2, 2))


def test_weight_blocks():
    assert weight_block_kernel((2, 2), 2) == 1
    assert weight_block_kernel((1, 1, 1, 1), 2) == 2
    assert weight_block_kernel((4,), 2) == 0

    block = weight_block((2, 1, 1), 2)
    assert block.rows == 3  # Lyndon words with content (2, 1, 1)


def test_weight_block_wrong_size():
    with pytest.raises(InvalidArgumentError, match='k\\+2'):
        weight_block((2, 1), 2)


def test_weight_block_cap(oracle_caps):
    oracle_caps['max_block_columns'] = 5
    with pytest.raises(ResourceLimitError, match='oracle.max_block_columns'):
        weight_block((1, 1, 1, 1, 1), 3)


def test_bracket_map_cap(oracle_caps):
    oracle_caps['max_matrix_columns'] = 10
    with pytest.raises(ResourceLimitError, match='oracle.max_matrix_columns'):
        bracket_map_matrix(2, 2)


@pytest.mark.parametrize('k', (1, 2, 3, 4))
def test_oracle_weight_decomposition(k):
    dec = oracle_weight_decomposition(k)
    assert dec == decompose_h(k)
    assert dec.source == f'h({k})'


def test_dominance_elimination():
    # weight spaces of [2,1] + [1,1,1]
    dims = {Partition((3,)): 0, Partition((2, 1)): 1, Partition((1, 1, 1)): 3}
    assert dominance_elimination(dims) == {(2, 1): 1, (1, 1, 1): 1}


def test_orbit_size():
    assert orbit_size(Partition((2, 1)), 4) == 12
    assert orbit_size(Partition((1, 1)), 2) == 1


def test_weyl_group():
    assert len(list(signed_permutations(2))) == 8
    shifts = dict(weyl_shifts(1))
    assert shifts == {(0,): 1, (2,): -1}


def test_raising_operators():
    ops = raising_operators(2)
    assert len(ops) == 2
    # X_1: a2 -> a1, b1 -> -b2
    assert ops[0] == {1: (0, 1), 2: (3, -1)}
    # Y: b2 -> a2
    assert ops[1] == {3: (1, 1)}
    # omega = a1 b1 - b1 a1 + a2 b2 - b2 a2 is killed
    omega = {(0, 2): 1, (2, 0): -1, (1, 3): 1, (3, 1): -1}
    for op in ops:
        assert apply_letterwise(op, omega) == {}


@pytest.mark.parametrize('method', (DIRECT, WEIGHTS))
@pytest.mark.parametrize(['g', 'k'], [(1, 2), (1, 3), (1, 4), (2, 2), (2, 4)])
def test_sp_invariant_dimension(g, k, method):
    assert sp_invariant_dimension(g, k, method=method) == invariant_value(k, g).value


def test_sp_invariant_dimension_values():
    assert sp_invariant_dimension(1, 2) == 1
    assert sp_invariant_dimension(1, 5) == 0


def test_sp_invariant_dimension_invalid():
    with pytest.raises(InvalidArgumentError, match='Unknown method'):
        sp_invariant_dimension(1, 2, method='guess')
    with pytest.raises(InvalidArgumentError):
        sp_invariant_dimension(0, 2)


def test_invariant_matrix():
    matrix = invariant_matrix(1, 2)
    assert matrix.cols - matrix.rank() == 1


@pytest.mark.stretch
@pytest.mark.parametrize('k', (2, 4, 6))
def test_sp_invariants_genus_three(k):
    assert sp_invariant_dimension(3, k, method=WEIGHTS) == invariant_value(k, 3).value
