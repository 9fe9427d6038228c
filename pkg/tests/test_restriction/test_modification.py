from __future__ import annotations

import pytest

from sympdec.combinatorics import Partition, enumerate_partitions
from sympdec.restriction import (
    modification_invariant_multiplicity,
    modify,
    spherical_invariant_multiplicity,
)


@pytest.mark.parametrize(
    ['lam', 'genus', 'value'],
    [
        ((2, 2), 1, 1),
        ((1, 1), 1, 1),
        ((2,), 1, 0),
        ((1, 1, 1, 1), 1, 0),
        ((1, 1, 1, 1), 2, 1),
        ((3, 3), 1, 1),
        ((2, 2, 1, 1), 2, 1),
        ((), 1, 1),
    ],
)
def test_spherical(lam, genus, value):
    assert spherical_invariant_multiplicity(Partition(lam), genus) == value


def test_modify():
    # h = 2 l(mu) - 2g - 2 = 0 kills the label
    assert modify((1, 1), 1) == (0, ())
    # the single column of length 4 is one boundary strip
    assert modify((1, 1, 1, 1), 1) == (-1, ())
    assert modify((2, 1), 2) == (1, (2, 1))


def test_alternating_sum_cancels():
    lam = Partition((1, 1, 1, 1))
    assert modification_invariant_multiplicity(lam, 1) == 0
    assert modification_invariant_multiplicity(lam, 1, truncate=False) == 0


@pytest.mark.parametrize('n', (2, 4, 6))
@pytest.mark.parametrize('genus', (1, 2, 3))
def test_modification_matches_spherical(n, genus):
    for lam in enumerate_partitions(n):
        assert modification_invariant_multiplicity(lam, genus) == (
            spherical_invariant_multiplicity(lam, genus)
        ), lam


@pytest.mark.stretch
@pytest.mark.parametrize('n', (8, 10))
def test_modification_matches_spherical_large(n):
    for genus in range(1, 5):
        for lam in enumerate_partitions(n):
            assert modification_invariant_multiplicity(lam, genus) == (
                spherical_invariant_multiplicity(lam, genus)
            )
