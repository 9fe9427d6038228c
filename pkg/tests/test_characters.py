from __future__ import annotations

from fractions import Fraction

import pytest

from sympdec.characters import (
    CLASS_FUNCTIONS,
    ClassFunction,
    character_table,
    check_sign_positivity,
    check_sign_twist,
    chi_cyclic,
    chi_induced,
    chi_irreducible,
    chi_L,
    chi_W,
    mn_character,
    sign_violations,
    support_bound,
    verify_difference_identity,
)
from sympdec.combinatorics import Partition, enumerate_partitions, sign
from sympdec.exceptions import InvalidArgumentError


@pytest.mark.parametrize(
    ['lam', 'mu', 'value'],
    [
        ((2, 1), (1, 1, 1), 2),
        ((2, 1), (2, 1), 0),
        ((2, 1), (3,), -1),
        ((2, 2), (1, 1, 1, 1), 2),
        ((2, 2), (2, 2), 2),
        ((2, 2), (3, 1), -1),
        ((2, 2), (2, 1, 1), 0),
        ((2, 2), (4,), 0),
        ((3, 1), (4,), -1),
        ((3, 2), (1, 1, 1, 1, 1), 5),
        ((), (), 1),
    ],
)
def test_mn_character(lam, mu, value):
    assert mn_character(Partition(lam), Partition(mu)) == value


@pytest.mark.parametrize('n', (4, 6))
def test_trivial_and_sign(n):
    for mu in enumerate_partitions(n):
        assert mn_character((n,), mu) == 1
        assert mn_character((1,) * n, mu) == sign(mu)


def test_mn_character_size_mismatch():
    with pytest.raises(InvalidArgumentError, match='different sizes'):
        mn_character((2, 1), (2, 2))


@pytest.mark.parametrize('n', range(1, 8))
def test_orthogonality(n):
    characters = [chi_irreducible(lam) for lam in enumerate_partitions(n)]
    for i, chi in enumerate(characters):
        for j, other in enumerate(characters):
            assert chi.inner_product(other) == Fraction(int(i == j))


def test_chi_W_4():
    chi = chi_W(4)
    assert chi.degree == 6
    assert chi.label == 'W'
    assert chi.values == {
        (1, 1, 1, 1, 1, 1): 24,
        (5, 1): -1,
        (2, 2, 2): 8,
        (3, 3): 3,
        (6,): -1,
    }


def test_chi_W_2():
    assert chi_W(2).values == {(1, 1, 1, 1): 2, (3, 1): -1, (2, 2): 2}


def test_chi_L():
    # (k-1)! on the identity, mu(k) on the long cycle
    chi = chi_L(4)
    assert chi[(1, 1, 1, 1)] == 6
    assert chi[(2, 2)] == -2
    assert chi[(4,)] == 0
    assert chi_L(3)[(3,)] == -1


@pytest.mark.parametrize('k', range(1, 13))
def test_difference_identity(k):
    assert verify_difference_identity(k)
    assert chi_W(k).same_values(chi_induced(k) - chi_L(k + 2))


@pytest.mark.parametrize('k', range(1, 21))
def test_support_bound(k):
    assert len(chi_W(k)) <= support_bound(k)


@pytest.mark.parametrize('k', [k for k in range(1, 21) if k % 4 in (2, 3)])
def test_sign_positivity(k):
    assert check_sign_positivity(k) is True
    assert check_sign_twist(k) is True


def test_sign_violation_outside_residue():
    # the 6-cycle is odd and carries chi_W(4)
    assert Partition((6,)) in sign_violations(4)
    assert not check_sign_twist(4)


def test_chi_cyclic():
    chi = chi_cyclic(2)
    # permutation character on S_4 / C_4
    assert chi[(1, 1, 1, 1)] == 6
    assert chi[(2, 2)] == 2
    assert chi[(4,)] == 2
    assert chi[(3, 1)] == 0


def test_class_function_arithmetic():
    a = ClassFunction(3, {(1, 1, 1): 2, (3,): -1})
    b = ClassFunction(3, {(1, 1, 1): 1, (2, 1): 1})
    assert (a + b).values == {(1, 1, 1): 3, (2, 1): 1, (3,): -1}
    assert (a - a).values == {}
    assert b.twist_by_sign()[(2, 1)] == -1
    assert a.support() == [(3,), (1, 1, 1)]

    with pytest.raises(InvalidArgumentError, match='different degree'):
        a + chi_W(2)


def test_class_function_validation():
    with pytest.raises(InvalidArgumentError):
        ClassFunction(3, {(2, 2): 1})
    with pytest.raises(InvalidArgumentError, match='integers'):
        ClassFunction(3, {(3,): 0.5})


def test_to_dict():
    d = chi_W(2).to_dict()
    assert d['label'] == 'W'
    assert d['degree'] == 4
    assert d['values'][0] == {'class': [3, 1], 'value': -1}


def test_class_functions_registry():
    assert set(CLASS_FUNCTIONS) == {'L', 'Induced', 'W', 'Cyclic'}


def test_character_table():
    table = character_table(3)
    assert list(table.index) == ['[3]', '[2,1]', '[1,1,1]']
    assert table.loc['[2,1]', '[1,1,1]'] == 2
    assert table.loc['[1,1,1]', '[2,1]'] == -1
