from __future__ import annotations

import logging
from dataclasses import dataclass, field

from sympdec.characters.formulas import chi_W
from sympdec.combinatorics.partitions import Partition, conjugate, format_partition
from sympdec.decomposition.decomposition import (
    Decomposition,
    decompose_h,
    decompose_lie,
    multiplicity,
)
from sympdec.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

GUARANTEED = 'guaranteed'
NOT_GUARANTEED = 'not-guaranteed'


@dataclass
class SymmetryReport:
    """Outcome of comparing m(lam) with m(lam') over a decomposition."""

    source: str
    symmetric: bool
    violations: list[tuple[Partition, int, int]] = field(default_factory=list)

    def __bool__(self):
        return self.symmetric

    def to_dict(self) -> dict:
        return {
            'source': self.source,
            'symmetric': self.symmetric,
            'violations': [
                {'partition': list(lam), 'multiplicity': m, 'conjugate_multiplicity': mc}
                for lam, m, mc in self.violations
            ],
        }


def check_conjugate_symmetry(dec: Decomposition) -> SymmetryReport:
    """Check m(lam) == m(lam') for every diagram, listing all violations."""
    violations = []
    for lam, m in dec.items():
        mc = dec[conjugate(lam)]
        if m != mc:
            violations.append((lam, m, mc))
    if violations:
        logger.info(f'{dec.source} is not conjugate symmetric ({len(violations)} violations)')
    return SymmetryReport(dec.source, not violations, violations)


def symmetry_expectation(algebra: str, k: int) -> str:
    """Whether conjugate symmetry is a theorem for this algebra and degree.

    h: k = 2, 3 mod 4; Lie: k = 0, 1, 3 mod 4; assoc: k odd.
    """
    residues = {
        'h': (2, 3),
        'lie': (0, 1, 3),
        'assoc': (1, 3),
    }
    try:
        allowed = residues[algebra.lower()]
    except KeyError:
        raise InvalidArgumentError(f'Unknown algebra `{algebra}`, use h, lie or assoc')
    return GUARANTEED if k % 4 in allowed else NOT_GUARANTEED


def negative_control_report(max_k: int) -> list[dict]:
    """Symmetry verdicts for the degrees outside the theorems.

    Nothing is asserted: the rows only record what happens.
    """
    rows = []
    for algebra, func in (('h', decompose_h), ('lie', decompose_lie)):
        for k in range(1, max_k + 1):
            if symmetry_expectation(algebra, k) == GUARANTEED:
                continue
            report = check_conjugate_symmetry(func(k))
            rows.append(
                {
                    'algebra': algebra,
                    'degree': k,
                    'symmetric': report.symmetric,
                    'violations': len(report.violations),
                }
            )
    return rows


@dataclass
class SeriesReport:
    """Multiplicities of the [2k,2] and [2^2,1^(4m)] series in h."""

    max_k: int
    entries: list[dict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(entry['multiplicity'] == 1 for entry in self.entries)

    @property
    def deviations(self) -> list[dict]:
        return [entry for entry in self.entries if entry['multiplicity'] != 1]

    def to_dict(self) -> dict:
        return {'max_k': self.max_k, 'holds': self.holds, 'entries': self.entries}


def multiplicity_series_check(max_k: int) -> SeriesReport:
    """m([2k,2]) = 1 in h(2k) for 2k <= max_k and m([2,2,1^(4m)]) = 1 in
    h(4m+2) for 4m+2 <= max_k."""
    if max_k < 2:
        raise InvalidArgumentError(f'max_k must be at least 2, got {max_k}')

    report = SeriesReport(max_k)
    for j in range(1, max_k // 2 + 1):
        lam = Partition._trusted((2 * j, 2))
        report.entries.append(
            {
                'series': '[2k,2]',
                'degree': 2 * j,
                'partition': list(lam),
                'multiplicity': multiplicity(lam, chi_W(2 * j)),
            }
        )

    m = 0
    while 4 * m + 2 <= max_k:
        lam = Partition._trusted((2, 2) + (1,) * (4 * m))
        report.entries.append(
            {
                'series': '[2^2,1^4m]',
                'degree': 4 * m + 2,
                'partition': list(lam),
                'multiplicity': multiplicity(lam, chi_W(4 * m + 2)),
            }
        )
        m += 1

    for entry in report.deviations:
        logger.warning(
            f"Series {entry['series']}: {format_partition(Partition(entry['partition']))} "
            f"has multiplicity {entry['multiplicity']} in h({entry['degree']})"
        )
    return report
