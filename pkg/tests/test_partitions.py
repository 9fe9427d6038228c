from __future__ import annotations

import math
from contextlib import nullcontext as does_not_raise

import pytest

from sympdec.combinatorics import (
    EMPTY,
    Partition,
    centralizer_order,
    class_data,
    conjugate,
    enumerate_partitions,
    euler_partition_count,
    format_partition,
    has_even_columns,
    hook_length_dimension,
    parse_partition,
)
from sympdec.exceptions import InvalidArgumentError


def test_enumerate_order():
    shapes = enumerate_partitions(4)
    assert shapes == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert all(isinstance(lam, Partition) for lam in shapes)


def test_enumerate_empty():
    assert enumerate_partitions(0) == [EMPTY]


def test_enumerate_max_length():
    assert enumerate_partitions(5, max_length=2) == [(5,), (4, 1), (3, 2)]


@pytest.mark.parametrize('n', range(0, 21))
def test_partition_count(n):
    assert len(enumerate_partitions(n)) == euler_partition_count(n)


def test_partition_count_20():
    assert euler_partition_count(20) == 627


@pytest.mark.parametrize(
    ['parts', 'raises'],
    [
        ((3, 1), does_not_raise()),
        ((), does_not_raise()),
        ((1, 2), pytest.raises(InvalidArgumentError, match='weakly decreasing')),
        ((2, 0), pytest.raises(InvalidArgumentError, match='positive')),
        ((-1,), pytest.raises(InvalidArgumentError, match='positive')),
    ],
)
def test_partition_validation(parts, raises):
    with raises:
        Partition(parts)


def test_conjugate():
    assert conjugate(Partition((3, 1))) == (2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    assert Partition((4, 2)).conjugate() == (2, 2, 1, 1)


@pytest.mark.parametrize('n', (5, 7, 9))
def test_conjugate_is_involution(n):
    for lam in enumerate_partitions(n):
        assert conjugate(conjugate(lam)) == lam


def test_dominance():
    assert Partition((3, 1)).dominates(Partition((2, 2)))
    assert not Partition((2, 2)).dominates(Partition((3, 1)))
    # incomparable pair
    a, b = Partition((3, 1, 1, 1)), Partition((2, 2, 2))
    assert not a.dominates(b)
    assert not b.dominates(a)


@pytest.mark.parametrize('n', (4, 6, 8))
def test_class_sizes_sum_to_factorial(n):
    total = sum(math.factorial(n) // centralizer_order(mu) for mu in enumerate_partitions(n))
    assert total == math.factorial(n)


def test_class_data():
    cls = class_data(Partition((3, 1)), 4)
    assert cls.class_size == 8
    assert cls.centralizer_order == 3
    assert cls.sign == 1

    assert class_data((2, 1, 1), 4).sign == -1

    with pytest.raises(InvalidArgumentError):
        class_data((2, 1), 4)


@pytest.mark.parametrize(
    ['lam', 'dim'],
    [
        ((2, 1), 2),
        ((3, 2), 5),
        ((2, 2), 2),
        ((3, 1, 1), 6),
        ((1, 1, 1, 1, 1), 1),
    ],
)
def test_hook_length_dimension(lam, dim):
    assert hook_length_dimension(Partition(lam)) == dim


@pytest.mark.parametrize('n', (5, 8))
def test_sum_of_squares(n):
    total = sum(hook_length_dimension(lam) ** 2 for lam in enumerate_partitions(n))
    assert total == math.factorial(n)


@pytest.mark.parametrize(
    ['lam', 'expected'],
    [
        ((2, 2), True),
        ((1, 1), True),
        ((2, 2, 1, 1), True),
        ((3, 3), True),
        ((2, 1, 1), False),
        ((2, 2, 2), False),
        ((), True),
    ],
)
def test_has_even_columns(lam, expected):
    assert has_even_columns(lam) is expected


@pytest.mark.parametrize(
    ['text', 'expected'],
    [
        ('6,2', (6, 2)),
        ('6 2', (6, 2)),
        ('[2,2]', (2, 2)),
        ('2^2,1^4', (2, 2, 1, 1, 1, 1)),
        ('3', (3,)),
        ('', ()),
        ('0', ()),
    ],
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize('text', ('x', '2,a', '1,2', '2^'))
def test_parse_partition_invalid(text):
    with pytest.raises(InvalidArgumentError):
        parse_partition(text)


def test_format_partition():
    lam = Partition((2, 2, 1, 1, 1, 1))
    assert format_partition(lam) == '[2,2,1,1,1,1]'
    assert format_partition(lam, exponent=True) == '[2^2,1^4]'
    assert str(Partition((6, 2))) == '[6,2]'
    assert format_partition(EMPTY) == '[]'
