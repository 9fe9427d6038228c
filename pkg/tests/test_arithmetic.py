from __future__ import annotations

import logging
import warnings

import pytest

from sympdec.combinatorics import (
    Partition,
    gl_dimension,
    kostka_number,
    lemma_condition_holds,
    lemma_counterexamples,
    mobius,
    necklace_count,
    witt_dimension,
)
from sympdec.exceptions import InvalidArgumentError


@pytest.mark.parametrize(
    ['n', 'value'],
    [(1, 1), (2, -1), (3, -1), (4, 0), (6, 1), (12, 0), (30, -1)],
)
def test_mobius(n, value):
    assert mobius(n) == value


def test_mobius_zero():
    with pytest.raises(InvalidArgumentError, match='n >= 1'):
        mobius(0)


@pytest.mark.parametrize(
    ['n', 'k', 'dim'],
    [
        (2, 1, 2),
        (2, 2, 1),
        (2, 3, 2),
        (2, 4, 3),
        (2, 5, 6),
        (4, 3, 20),
        (4, 4, 60),
        (4, 7, 2340),
    ],
)
def test_witt_dimension(n, k, dim):
    assert witt_dimension(n, k) == dim


@pytest.mark.parametrize(['n', 'k'], [(0, 3), (2, 0)])
def test_witt_dimension_invalid(n, k):
    with pytest.raises(InvalidArgumentError):
        witt_dimension(n, k)


def test_necklace_count():
    assert necklace_count(2, 4) == 6
    assert necklace_count(3, 1) == 3
    assert necklace_count(2, 6) == 14


def test_lemma_condition():
    assert not lemma_condition_holds(2)
    assert not lemma_condition_holds(6)
    assert lemma_condition_holds(12)
    assert lemma_condition_holds(9)


def test_lemma_counterexamples():
    assert lemma_counterexamples(2000) == []


def test_lemma_fails_off_residue():
    failing = [c for c in range(2, 200, 4) if not lemma_condition_holds(c)]
    assert len(failing) == len(range(2, 200, 4))


@pytest.mark.parametrize(
    ['lam', 'N', 'dim'],
    [
        ((1,), 4, 4),
        ((1, 1), 4, 6),
        ((2,), 4, 10),
        ((2, 2), 2, 1),
        ((1, 1, 1), 2, 0),
        ((2, 2), 4, 20),
        ((), 3, 1),
    ],
)
def test_gl_dimension(lam, N, dim):
    assert gl_dimension(Partition(lam), N) == dim


def test_gl_dimension_invalid():
    with pytest.raises(InvalidArgumentError):
        gl_dimension(Partition((1,)), 0)


@pytest.mark.parametrize(
    ['lam', 'weight', 'value'],
    [
        ((2, 1), (1, 1, 1), 2),
        ((2, 1), (2, 1), 1),
        ((2, 1), (1, 2), 1),
        ((3,), (1, 1, 1), 1),
        ((2, 1), (3,), 0),
        ((2, 2), (1, 1, 1, 1), 2),
        ((2, 1), (1, 1), 0),
    ],
)
def test_kostka_number(lam, weight, value):
    assert kostka_number(Partition(lam), weight) == value


def test_mobius_without_warnings():
    mobius.cache_clear()
    with warnings.catch_warnings():
        warnings.simplefilter('error')
        assert [mobius(n) for n in (1, 2, 4, 6, 30, 105)] == [1, -1, 0, 1, -1, -1]


def test_lemma_scan_is_logged(caplog):
    with caplog.at_level(logging.DEBUG, logger='sympdec.combinatorics.arithmetic'):
        lemma_counterexamples(100)
    assert 'scanned up to 100: 0 counterexamples' in caplog.text
