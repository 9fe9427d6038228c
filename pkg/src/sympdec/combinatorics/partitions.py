from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from sympdec.exceptions import InvalidArgumentError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Used both as a Young diagram (irreducible representations of the
    symmetric and general linear groups) and as the cycle type of a
    conjugacy class. The empty partition is `Partition()`.

    Because this is a tuple, instances hash and compare like tuples. The
    canonical ordering of partitions of the same size is decreasing
    lexicographic, i.e. `sorted(..., reverse=True)`.

    Parameters
    ----------
    parts : Iterable[int]
        Parts in weakly decreasing order, all positive.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise InvalidArgumentError(f'Partition parts must be positive: {parts}')
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidArgumentError(f'Partition parts must be weakly decreasing: {parts}')
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> Partition:
        """Construct without validation, for parts known to be canonical."""
        return tuple.__new__(cls, parts)

    def __repr__(self):
        return f'Partition({list(self)})'

    def __str__(self):
        return format_partition(self)

    @cached_property
    def size(self) -> int:
        return sum(self)

    @cached_property
    def length(self) -> int:
        return len(self)

    @cached_property
    def parts(self) -> tuple:
        return tuple(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield the (row, column) coordinates of all boxes, row by row."""
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def contains(self, other: Partition) -> bool:
        """Whether the diagram of `other` fits inside this diagram."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def dominates(self, other: Partition) -> bool:
        """Dominance order, both partitions must have the same size."""
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True


EMPTY = Partition._trusted(())


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class data of the symmetric group of degree `n`."""

    cycle_type: Partition
    n: int
    class_size: int
    centralizer_order: int
    sign: int


def _partitions(n: int, max_part: int, max_length: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        # the remaining parts must fit in max_length - 1 rows of width `first`
        if first * max_length < n:
            break
        for rest in _partitions(n - first, first, max_length - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(n: int, max_length: int) -> tuple:
    return tuple(Partition._trusted(p) for p in _partitions(n, n, max_length))


def enumerate_partitions(n: int, max_length: int = None) -> list[Partition]:
    """All partitions of `n` in decreasing lexicographic order.

    `[4] > [3, 1] > [2, 2] > [2, 1, 1] > [1, 1, 1, 1]`

    Parameters
    ----------
    n : int
        Size, n >= 0. `0` gives the single empty partition.
    max_length : int, optional
        Only return partitions with at most this many parts.
    """
    if n < 0:
        raise InvalidArgumentError(f'Cannot enumerate partitions of a negative number: {n}')
    if max_length is None or max_length > n:
        max_length = n
    return list(_enumerate(n, max_length))


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram, rows become columns."""
    if not lam:
        return EMPTY
    return Partition._trusted(
        tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))
    )


@lru_cache(maxsize=None)
def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_a a^{m_a} m_a!"""
    z = 1
    for a, m in Counter(mu).items():
        z *= a**m * math.factorial(m)
    return z


def sign(mu: Partition) -> int:
    """Sign of a permutation with cycle type `mu`."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def class_data(mu: Partition, n: int) -> ConjClass:
    """Conjugacy class of S_n with cycle type `mu`."""
    mu = Partition(mu)
    if mu.size != n:
        raise InvalidArgumentError(f'Cycle type {list(mu)} is not a partition of {n}')
    z = centralizer_order(mu)
    class_size, rest = divmod(math.factorial(n), z)
    assert rest == 0, 'centralizer order must divide n!'
    return ConjClass(
        cycle_type=mu, n=n, class_size=class_size, centralizer_order=z, sign=sign(mu)
    )


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [row - j + conj[j] - i - 1 for i, row in enumerate(lam) for j in range(row)]


@lru_cache(maxsize=None)
def hook_length_dimension(lam: Partition) -> int:
    """Dimension f^lam of the irreducible S_n module, n!/prod(hooks)."""
    n = sum(lam)
    f, rest = divmod(math.factorial(n), math.prod(hook_lengths(lam)))
    assert rest == 0
    return f


def has_even_columns(lam: Partition) -> bool:
    """True if every column of the diagram has even length."""
    return all(part % 2 == 0 for part in conjugate(Partition(lam)))


_token = re.compile(r'^(\d+)(?:\^(\d+))?$')


def parse_partition(text: str) -> Partition:
    """Parse a partition from the command line.

    Accepts `6,2`, `6 2`, `[6,2]`, the exponent form `2^2,1^4` and `0` or
    an empty string for the empty partition.
    """
    cleaned = text.strip().strip('[]()').replace(' ', ',')
    tokens = [t for t in cleaned.split(',') if t]
    parts = []
    for token in tokens:
        match = _token.match(token)
        if not match:
            raise InvalidArgumentError(f'Cannot parse partition `{text}` (bad token `{token}`)')
        part, exponent = int(match.group(1)), int(match.group(2) or 1)
        parts.extend([part] * exponent)
    parts = [p for p in parts if p != 0]
    return Partition(parts)


def format_partition(lam: Partition, exponent: bool = False) -> str:
    """Format as `[6,2]`, or with `exponent=True` as `[2^2,1^4]`."""
    if not exponent:
        return '[' + ','.join(str(p) for p in lam) + ']'
    counts = Counter(lam)
    tokens = []
    for part in sorted(counts, reverse=True):
        m = counts[part]
        tokens.append(f'{part}^{m}' if m > 1 else f'{part}')
    return '[' + ','.join(tokens) + ']'


def sort_key(lam: Partition) -> tuple:
    """Key for the canonical order: larger size first, then decreasing lex."""
    return (-sum(lam), tuple(-p for p in lam))
