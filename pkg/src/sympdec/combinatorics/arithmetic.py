from __future__ import annotations

import logging
from functools import lru_cache

from sympy import totient
from sympy.ntheory import divisors
from sympy.functions.combinatorial.numbers import mobius as _sympy_mobius

from sympdec.exceptions import IntegralityError, InvalidArgumentError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Classical Möbius function, +1/-1 on squarefree `n` with an even/odd
    number of prime factors and 0 otherwise."""
    if n < 1:
        raise InvalidArgumentError(f'The Möbius function is defined for n >= 1, got {n}')
    return int(_sympy_mobius(n))


def euler_phi(n: int) -> int:
    return int(totient(n))


def witt_dimension(n: int, k: int) -> int:
    """Dimension of the degree `k` part of the free Lie algebra on `n`
    generators.

    (1/k) sum_{d | k} mu(d) n^{k/d}
    """
    if n < 1 or k < 1:
        raise InvalidArgumentError(f'witt_dimension needs n, k >= 1, got n={n}, k={k}')
    total = sum(mobius(d) * n ** (k // d) for d in divisors(k))
    value, rest = divmod(total, k)
    if rest:
        raise IntegralityError(f'Witt sum {total} is not divisible by {k}')
    return value


def necklace_count(n: int, m: int) -> int:
    """Number of necklaces of length `m` over `n` colours.

    This is the dimension of the cyclic invariants of the m-th tensor power of
    an n-dimensional space.
    """
    total = sum(euler_phi(d) * n ** (m // d) for d in divisors(m))
    value, rest = divmod(total, m)
    if rest:
        raise IntegralityError(f'Necklace sum {total} is not divisible by {m}')
    return value


@lru_cache(maxsize=None)
def euler_partition_count(n: int) -> int:
    """p(n) through the pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        s = 1 if k % 2 else -1
        total += s * euler_partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += s * euler_partition_count(n - g2)
        k += 1
    return total


def lemma_condition_holds(c: int) -> bool:
    """For every factorization c = a*b with `a` even and mu(a) != 0, `b` is
    even.

    Holds whenever c is not 2 mod 4. It is what makes the non-identity classes
    in the support of the W_k character even permutations.
    """
    for a in divisors(c):
        if a % 2 == 0 and mobius(a) != 0 and (c // a) % 2 == 1:
            return False
    return True


def lemma_counterexamples(bound: int) -> list[int]:
    """All c <= bound with c mod 4 != 2 that violate the lemma condition."""
    bad = [c for c in range(1, bound + 1) if c % 4 != 2 and not lemma_condition_holds(c)]
    logger.debug(f'Lemma condition scanned up to {bound}: {len(bad)} counterexamples')
    return bad
