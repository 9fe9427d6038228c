from __future__ import annotations

import math

import pytest

from sympdec.characters import chi_W
from sympdec.combinatorics import Partition, witt_dimension
from sympdec.decomposition import (
    Decomposition,
    decompose,
    decompose_cyclic,
    decompose_h,
    decompose_lie,
    dimension_of,
    multiplicity,
)
from sympdec.exceptions import IntegralityError, InvalidArgumentError


def _dec(n, terms, source=''):
    return Decomposition(n, {Partition(lam): m for lam, m in terms.items()}, source)


@pytest.mark.parametrize(
    ['k', 'expected'],
    [
        (1, {(1, 1, 1): 1}),
        (2, {(2, 2): 1}),
        (3, {(3, 1, 1): 1}),
        (4, {(4, 2): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1}),
    ],
)
def test_decompose_h(k, expected):
    dec = decompose_h(k)
    assert dec == _dec(k + 2, expected)
    assert dec.source == f'h({k})'
    assert dec.algebra == 'h'
    assert dec.degree == k


@pytest.mark.parametrize(
    ['k', 'expected'],
    [
        (1, {(1,): 1}),
        (2, {(1, 1): 1}),
        (3, {(2, 1): 1}),
        (4, {(3, 1): 1, (2, 1, 1): 1}),
        (5, {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1}),
    ],
)
def test_decompose_lie(k, expected):
    dec = decompose_lie(k)
    assert dec == _dec(k, expected)
    assert dec.source == f'Lie({k})'


@pytest.mark.parametrize('k', range(1, 9))
def test_s_module_dimension(k):
    assert decompose_h(k).s_module_dimension() == math.factorial(k)
    assert decompose_lie(k + 1).s_module_dimension() == math.factorial(k)


@pytest.mark.parametrize(['g', 'k'], [(1, 2), (1, 3), (2, 2), (2, 3), (3, 4), (4, 6)])
def test_dimension_of(g, k):
    n = 2 * g
    expected = n * witt_dimension(n, k + 1) - witt_dimension(n, k + 2)
    assert dimension_of(decompose_h(k), g) == expected


def test_dimension_of_invalid():
    with pytest.raises(InvalidArgumentError, match='Genus'):
        dimension_of(decompose_h(2), 0)


def test_decompose_cyclic():
    assert decompose_cyclic(1) == _dec(3, {(3,): 1, (1, 1, 1): 1})
    assert decompose_cyclic(3) == _dec(
        5, {(5,): 1, (3, 2): 1, (3, 1, 1): 2, (2, 2, 1): 1, (1, 1, 1, 1, 1): 1}
    )


def test_multiplicity():
    assert multiplicity((2, 2), chi_W(2)) == 1
    assert multiplicity((4,), chi_W(2)) == 0
    with pytest.raises(InvalidArgumentError):
        multiplicity((2, 1), chi_W(2))


def test_multiplicity_not_integral():
    from sympdec.characters import ClassFunction

    with pytest.raises(IntegralityError):
        multiplicity((2,), ClassFunction(2, {(1, 1): 1}))


def test_decompose_threads():
    assert decompose(chi_W(4), source='h(4)', threads=1) == decompose_h(4)


def test_decomposition_ordering(h_small):
    dec = h_small[4]
    assert dec.partitions() == [(4, 2), (3, 1, 1, 1), (2, 2, 2)]
    assert str(dec) == '[4,2] + [3,1^3] + [2^3]'
    assert dec.total_multiplicity() == 3
    assert len(dec) == 3


def test_conjugate_and_restricted(h_small):
    dec = h_small[4]
    assert dec.conjugate()[(2, 2, 1, 1)] == 1
    assert dec.restricted(1) == _dec(6, {(4, 2): 1})
    assert dec.restricted(3) == dec


def test_decomposition_validation():
    with pytest.raises(InvalidArgumentError, match='not a partition of 4'):
        Decomposition(4, {Partition((2, 1)): 1})
    with pytest.raises(IntegralityError):
        Decomposition(3, {Partition((2, 1)): -1})

    dec = Decomposition(3, {Partition((2, 1)): 0})
    assert len(dec) == 0
    assert str(dec) == '0'
