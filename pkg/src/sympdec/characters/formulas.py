"""The class functions attached to the free Lie algebra and to the symplectic
derivation algebra.

* `chi_L(k)`: S_k acting on the multilinear part of the free Lie algebra
  (Witt-Brandt): (k-1)! on the identity, (b-1)! a^(b-1) mu(a) on the
  rectangular classes a^b with ab = k, zero elsewhere.
* `chi_induced(k)`: chi_L(k+1) induced from S_(k+1) to S_(k+2).
* `chi_W(k)`: the multiplicity module of the degree k symplectic derivations,
  the difference chi_induced(k) - chi_L(k+2) (Kontsevich).
* `chi_cyclic(k)`: the permutation character on the cosets of the cyclic
  group generated by a (k+2)-cycle, describing cyclic invariants.
"""

from __future__ import annotations

import logging
import math

import pandas as pd
from sympy.ntheory import divisors

from sympdec.characters.class_function import ClassFunction
from sympdec.characters.murnaghan_nakayama import mn_character
from sympdec.combinatorics.arithmetic import euler_phi, mobius
from sympdec.combinatorics.partitions import (
    Partition,
    enumerate_partitions,
    format_partition,
    sign,
)
from sympdec.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)


def _check_degree(k: int):
    if k < 1:
        raise InvalidArgumentError(f'Degree must be a positive integer, got {k}')


def _rectangular_value(a: int, b: int) -> int:
    return math.factorial(b - 1) * a ** (b - 1) * mobius(a)


def chi_L(k: int) -> ClassFunction:
    """Character of S_k on the multilinear part of the free Lie algebra."""
    _check_degree(k)
    values = {}
    # a = 1 is the identity class 1^k with value (k-1)!
    for a in divisors(k):
        b = k // a
        value = _rectangular_value(a, b)
        if value:
            values[Partition._trusted((a,) * b)] = value
    return ClassFunction(k, values, label='L')


def chi_induced(k: int) -> ClassFunction:
    """chi_L(k+1) induced to S_(k+2)."""
    _check_degree(k)
    n = k + 2
    values = {Partition._trusted((1,) * n): n * math.factorial(k)}
    for a in divisors(k + 1):
        if a < 2:
            continue
        b = (k + 1) // a
        value = _rectangular_value(a, b)
        if value:
            values[Partition._trusted((a,) * b + (1,))] = value
    return ClassFunction(n, values, label='Induced')


def chi_W(k: int) -> ClassFunction:
    """Character of the S_(k+2) module W_k.

    k! on the identity, (b-1)! a^(b-1) mu(a) on 1^1 a^b (ab = k+1, a >= 2) and
    -(b-1)! a^(b-1) mu(a) on a^b (ab = k+2, a >= 2).
    """
    _check_degree(k)
    n = k + 2
    values = {Partition._trusted((1,) * n): math.factorial(k)}
    for a in divisors(k + 1):
        if a >= 2:
            b = (k + 1) // a
            values[Partition._trusted((a,) * b + (1,))] = _rectangular_value(a, b)
    for a in divisors(k + 2):
        if a >= 2:
            b = (k + 2) // a
            values[Partition._trusted((a,) * b)] = -_rectangular_value(a, b)
    return ClassFunction(n, values, label='W')


def chi_cyclic(k: int) -> ClassFunction:
    """Permutation character of S_(k+2) on the cosets of the cyclic group
    generated by the long cycle.

    A power of the (k+2)-cycle of order `a` has cycle type a^b, and there are
    phi(a) of them, so the value on a^b is z_(a^b) phi(a) / (k+2).
    """
    _check_degree(k)
    n = k + 2
    values = {}
    for a in divisors(n):
        b = n // a
        value = euler_phi(a) * a ** (b - 1) * math.factorial(b - 1)
        values[Partition._trusted((a,) * b)] = value
    return ClassFunction(n, values, label='Cyclic')


def chi_irreducible(lam: Partition) -> ClassFunction:
    """Full irreducible character, only sensible for small degrees."""
    lam = Partition(lam)
    n = lam.size
    values = {mu: mn_character(lam, mu) for mu in enumerate_partitions(n)}
    return ClassFunction(n, values, label=f'Irreducible({format_partition(lam)})')


def verify_difference_identity(k: int) -> bool:
    """chi_W(k) equals chi_induced(k) - chi_L(k+2) on every class."""
    return chi_W(k).same_values(chi_induced(k) - chi_L(k + 2))


def sign_violations(k: int) -> list[Partition]:
    """Classes in the support of chi_W(k) that are odd permutations."""
    return [mu for mu in chi_W(k).support() if sign(mu) != 1]


def check_sign_positivity(k: int) -> bool:
    """Every class carrying chi_W(k) is an even permutation (k = 2, 3 mod 4)."""
    return not sign_violations(k)


def check_sign_twist(k: int) -> bool:
    """W_k is isomorphic to W_k tensored with the sign representation."""
    chi = chi_W(k)
    return chi.twist_by_sign().same_values(chi)


def support_bound(k: int) -> int:
    """Upper bound 1 + d(k+1) + d(k+2) on the support size of chi_W(k)."""
    return 1 + len(divisors(k + 1)) + len(divisors(k + 2))


CLASS_FUNCTIONS = {
    'L': chi_L,
    'Induced': chi_induced,
    'W': chi_W,
    'Cyclic': chi_cyclic,
}


def character_table(n: int) -> pd.DataFrame:
    """Character table of S_n, rows are shapes and columns cycle types."""
    shapes = enumerate_partitions(n)
    table = pd.DataFrame(
        [[mn_character(lam, mu) for mu in shapes] for lam in shapes],
        index=[format_partition(lam) for lam in shapes],
        columns=[format_partition(mu) for mu in shapes],
    )
    table.index.name = 'shape'
    table.columns.name = 'class'
    logger.debug(f'Character table of S_{n}: {len(shapes)} classes')
    return table
