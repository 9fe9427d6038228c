"""Sparse exact matrices and certified rank computation.

The rank is computed per connected component of the row/column incidence
graph. Each component is first eliminated modulo a large prime; since the
rank modulo p never exceeds the rank over the rationals, a component of full
modular rank is certified immediately. Anything else is re-ranked exactly over
QQ with sympy's sparse domain matrices.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from sympdec import config
from sympdec.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647


@dataclass
class SparseExactMatrix:
    """Sparse matrix over the rationals stored by column.

    Parameters
    ----------
    rows, cols : int
        Dimensions.
    columns : dict[int, dict[int, Fraction | int]]
        Column index to {row index: nonzero value}.
    """

    rows: int
    cols: int
    columns: dict = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for j, column in self.columns.items():
            if not 0 <= j < self.cols:
                raise InvalidArgumentError(f'Column {j} out of range for {self.cols} columns')
            entries = {}
            for i, value in column.items():
                if not 0 <= i < self.rows:
                    raise InvalidArgumentError(f'Row {i} out of range for {self.rows} rows')
                if value:
                    entries[i] = value
            if entries:
                cleaned[j] = entries
        self.columns = cleaned

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries) -> SparseExactMatrix:
        """Build from `(row, col, value)` triples, duplicates are summed."""
        columns = defaultdict(dict)
        for i, j, value in entries:
            columns[j][i] = columns[j].get(i, 0) + value
        return cls(rows, cols, dict(columns))

    @classmethod
    def identity(cls, n: int) -> SparseExactMatrix:
        return cls(n, n, {j: {j: 1} for j in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def set_column(self, j: int, column: dict):
        entries = {i: v for i, v in column.items() if v}
        if entries:
            self.columns[j] = entries
        else:
            self.columns.pop(j, None)

    def entries(self):
        """Yield `(row, col, value)` triples in column order."""
        for j in sorted(self.columns):
            for i in sorted(self.columns[j]):
                yield i, j, self.columns[j][i]

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self.columns.values())

    def transpose(self) -> SparseExactMatrix:
        return SparseExactMatrix.from_entries(
            self.cols, self.rows, ((j, i, v) for i, j, v in self.entries())
        )

    def to_dense(self) -> list[list]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            dense[i][j] = v
        return dense

    def components(self) -> list[tuple[list[int], list[int]]]:
        """Split into independent blocks (connected components of the
        bipartite row/column graph), as (row indices, column indices)."""
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for j, column in self.columns.items():
            parent.setdefault(('c', j), ('c', j))
            for i in column:
                parent.setdefault(('r', i), ('r', i))
                a, b = find(('c', j)), find(('r', i))
                if a != b:
                    parent[a] = b

        blocks = defaultdict(lambda: ([], []))
        for node in parent:
            kind, index = node
            rows, cols = blocks[find(node)]
            (rows if kind == 'r' else cols).append(index)
        return [(sorted(r), sorted(c)) for r, c in blocks.values()]

    def rank(self, prime: int = None) -> int:
        return certified_rank(self, prime=prime)


def _to_modular(value, prime: int) -> int:
    if isinstance(value, Fraction):
        return value.numerator * pow(value.denominator, -1, prime) % prime
    return int(value) % prime


def modular_rank(columns: list[dict], prime: int = DEFAULT_PRIME) -> int:
    """Rank modulo `prime` of a list of sparse columns.

    Incremental echelon form: every column is reduced against the pivots seen
    so far (pivot = smallest row index) and becomes a new pivot when
    something is left.
    """
    pivots = {}
    for column in columns:
        vec = {i: _to_modular(v, prime) for i, v in column.items()}
        vec = {i: v for i, v in vec.items() if v}
        while vec:
            lead = min(vec)
            pivot = pivots.get(lead)
            if pivot is None:
                inv = pow(vec[lead], -1, prime)
                pivots[lead] = {i: v * inv % prime for i, v in vec.items()}
                break
            factor = vec[lead]
            for i, v in pivot.items():
                new = (vec.get(i, 0) - factor * v) % prime
                if new:
                    vec[i] = new
                else:
                    vec.pop(i, None)
    return len(pivots)


def exact_rank(columns: list[dict], rows: list[int]) -> int:
    """Rank over QQ through sympy's sparse DomainMatrix."""
    row_index = {i: n for n, i in enumerate(rows)}
    dod = defaultdict(dict)
    for j, column in enumerate(columns):
        for i, v in column.items():
            if isinstance(v, Fraction):
                dod[row_index[i]][j] = QQ(v.numerator, v.denominator)
            else:
                dod[row_index[i]][j] = QQ(int(v))
    matrix = DomainMatrix(dict(dod), (len(rows), len(columns)), QQ)
    return matrix.rank()


def certified_rank(matrix: SparseExactMatrix, prime: int = None) -> int:
    """Exact rank over the rationals."""
    if prime is None:
        prime = config.settings.oracle.get('modular_prime', DEFAULT_PRIME)

    total = 0
    for rows, cols in matrix.components():
        columns = [matrix.columns[j] for j in cols if j in matrix.columns]
        if not columns:
            continue
        r = modular_rank(columns, prime)
        if r < min(len(rows), len(columns)):
            logger.debug(
                f'Block {len(rows)}x{len(columns)} has modular rank {r}, certifying over QQ'
            )
            r = exact_rank(columns, rows)
        total += r
    return total


def kernel_dimension(matrix: SparseExactMatrix) -> int:
    """cols - rank, with the rank certified over the rationals."""
    return matrix.cols - certified_rank(matrix)
