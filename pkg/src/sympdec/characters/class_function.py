from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from sympdec.combinatorics.partitions import Partition, centralizer_order, sign, sort_key
from sympdec.exceptions import InvalidArgumentError

LABELS = ('L', 'Induced', 'W', 'Cyclic', 'AdHoc')


@dataclass(frozen=True)
class ClassFunction:
    """Sparse integer valued class function on the symmetric group S_degree.

    Parameters
    ----------
    degree : int
        Degree n of the symmetric group.
    values : Mapping[Partition, int]
        Value per cycle type; absent cycle types and zero values mean 0.
    label : str
        One of `L`, `Induced`, `W`, `Cyclic`, `AdHoc` or `Irreducible([...])`.
    """

    degree: int
    values: Mapping[Partition, int] = field(default_factory=dict)
    label: str = 'AdHoc'

    def __post_init__(self):
        cleaned = {}
        for mu, value in self.values.items():
            mu = Partition(mu)
            if mu.size != self.degree:
                raise InvalidArgumentError(
                    f'Cycle type {list(mu)} is not a partition of {self.degree}'
                )
            if value != int(value):
                raise InvalidArgumentError(f'Class function values must be integers: {value}')
            if value:
                cleaned[mu] = int(value)
        object.__setattr__(self, 'values', cleaned)

    def __getitem__(self, mu) -> int:
        return self.values.get(Partition(mu), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self.values)

    def support(self) -> list[Partition]:
        """Cycle types with a nonzero value, in canonical order."""
        return sorted(self.values, key=sort_key)

    def items(self) -> list[tuple[Partition, int]]:
        return [(mu, self.values[mu]) for mu in self.support()]

    def same_values(self, other: ClassFunction) -> bool:
        """Pointwise equality, ignoring the label."""
        return self.degree == other.degree and self.values == other.values

    def _check_degree(self, other: ClassFunction):
        if self.degree != other.degree:
            raise InvalidArgumentError(
                f'Class functions of different degree: {self.degree} and {other.degree}'
            )

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check_degree(other)
        values = dict(self.values)
        for mu, value in other.values.items():
            values[mu] = values.get(mu, 0) + value
        return ClassFunction(self.degree, values)

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check_degree(other)
        values = dict(self.values)
        for mu, value in other.values.items():
            values[mu] = values.get(mu, 0) - value
        return ClassFunction(self.degree, values)

    def twist_by_sign(self) -> ClassFunction:
        """Tensor with the sign character."""
        return ClassFunction(
            self.degree, {mu: sign(mu) * v for mu, v in self.values.items()}, self.label
        )

    def inner_product(self, other: ClassFunction) -> Fraction:
        """<self, other> = sum over classes of self(mu) other(mu) / z_mu."""
        self._check_degree(other)
        small, large = sorted((self, other), key=len)
        return sum(
            (Fraction(v * large[mu], centralizer_order(mu)) for mu, v in small.values.items()),
            Fraction(0),
        )

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'label': self.label,
            'values': [{'class': list(mu), 'value': v} for mu, v in self.items()],
        }
