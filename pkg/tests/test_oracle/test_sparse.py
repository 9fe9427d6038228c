from __future__ import annotations

from fractions import Fraction

import pytest

from sympdec.exceptions import InvalidArgumentError
from sympdec.oracle import SparseExactMatrix, certified_rank, kernel_dimension
from sympdec.oracle.sparse import exact_rank, modular_rank


def test_identity():
    m = SparseExactMatrix.identity(4)
    assert m.shape == (4, 4)
    assert m.rank() == 4
    assert kernel_dimension(m) == 0


def test_rank_deficient():
    m = SparseExactMatrix.from_entries(2, 2, [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)])
    assert certified_rank(m) == 1
    assert kernel_dimension(m) == 1


def test_rational_entries():
    m = SparseExactMatrix.from_entries(
        2, 2, [(0, 0, Fraction(1, 2)), (0, 1, 1), (1, 0, 1), (1, 1, 2)]
    )
    assert certified_rank(m) == 1


def test_zero_columns_dropped():
    m = SparseExactMatrix(3, 2, {0: {0: 0}, 1: {2: 5}})
    assert m.columns == {1: {2: 5}}
    assert m.nnz == 1
    assert certified_rank(m) == 1


def test_out_of_range():
    with pytest.raises(InvalidArgumentError, match='Row'):
        SparseExactMatrix(2, 2, {0: {3: 1}})
    with pytest.raises(InvalidArgumentError, match='Column'):
        SparseExactMatrix(2, 2, {2: {0: 1}})


def test_components():
    m = SparseExactMatrix.from_entries(3, 3, [(0, 0, 1), (1, 1, 1), (2, 1, 1), (2, 2, 1)])
    blocks = sorted(m.components())
    assert blocks == [([0], [0]), ([1, 2], [1, 2])]


def test_transpose_and_dense():
    m = SparseExactMatrix.from_entries(2, 3, [(0, 2, 7), (1, 0, -1)])
    assert m.to_dense() == [[0, 0, 7], [-1, 0, 0]]
    assert m.transpose().to_dense() == [[0, -1], [0, 0], [7, 0]]


def test_modular_rank_can_drop():
    # 2 * 3 = 6 vanishes mod 3 but not over the rationals
    columns = [{0: 1, 1: 2}, {0: 3, 1: 12}]
    assert modular_rank(columns, prime=3) == 1
    assert exact_rank(columns, [0, 1]) == 2
    m = SparseExactMatrix(2, 2, dict(enumerate(columns)))
    assert certified_rank(m, prime=3) == 2
