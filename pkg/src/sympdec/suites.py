"""Verification suites run by `sympdec verify`.

Every check is a row (suite, check, parameter, passed, detail). Rows marked
informational are reported but never make a suite fail.
"""

from __future__ import annotations

import logging
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from math import comb
from typing import Callable

from tqdm.auto import tqdm

from sympdec import config
from sympdec.characters import (
    check_sign_positivity,
    check_sign_twist,
    chi_irreducible,
    chi_W,
    verify_difference_identity,
)
from sympdec.combinatorics import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    euler_partition_count,
    format_partition,
    hook_length_dimension,
    lemma_condition_holds,
    lemma_counterexamples,
    witt_dimension,
)
from sympdec.decomposition import (
    GUARANTEED,
    Decomposition,
    check_conjugate_symmetry,
    decompose_cyclic,
    decompose_h,
    decompose_lie,
    dimension_of,
    multiplicity_series_check,
    negative_control_report,
    symmetry_expectation,
)
from sympdec.exceptions import InvalidArgumentError, SympdecError, VerificationError
from sympdec.restriction import (
    PUBLISHED_INVARIANTS,
    genus_one_invariant_dim,
    invariant_value,
    modification_invariant_multiplicity,
    skew_lr_expansion,
    spherical_invariant_multiplicity,
    stable_invariant_dim,
    stable_restrict,
    subpartitions,
    unstable_invariant_dim,
)

logger = logging.getLogger(__name__)

SUITES = ('characters', 'symmetry', 'dimensions', 'restriction', 'oracle')

# genera covered by the dimension consistency check
DIMENSION_GENERA = 12
# largest bracket map assembled in full by the oracle suite
FULL_MATRIX_COLUMNS = 5000
# largest degree whose full Sp branching is compared with the even-column count
STABLE_RESTRICTION_DEGREE = 12


@dataclass
class CheckResult:
    suite: str
    check: str
    parameter: str
    passed: bool
    detail: str = ''
    informational: bool = False

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'check': self.check,
            'parameter': self.parameter,
            'passed': self.passed,
            'detail': self.detail,
            'informational': self.informational,
        }


@dataclass
class SuiteReport:
    suite: str
    max_degree: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed and not c.informational]

    def raise_for_failures(self) -> None:
        """Raise `VerificationError` naming the first failed check."""
        if self.failures:
            c = self.failures[0]
            n = len(self.failures)
            raise VerificationError(
                f'{n} check(s) failed, first: {c.check} {c.parameter}: {c.detail}'
            )

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'max_degree': self.max_degree,
            'passed': self.passed,
            'n_checks': len(self.checks),
            'n_failed': len(self.failures),
            'checks': [c.to_dict() for c in self.checks],
        }


@dataclass
class Task:
    check: str
    parameter: str
    func: Callable[[], tuple[bool, str]]
    informational: bool = False


def _task(check: str, parameter: str, func, *args, informational: bool = False) -> Task:
    return Task(check, parameter, partial(func, *args), informational)


def _equal(computed, expected) -> tuple[bool, str]:
    return computed == expected, f'{computed} (expected {expected})'


def _holds(func, *args) -> tuple[bool, str]:
    return bool(func(*args)), ''


def _expected_kernel(g: int, k: int) -> int:
    n = 2 * g
    return n * witt_dimension(n, k + 1) - witt_dimension(n, k + 2)


# characters


def _orthogonality(n: int) -> tuple[bool, str]:
    shapes = enumerate_partitions(n)
    characters = [chi_irreducible(lam) for lam in shapes]
    bad = []
    for i, chi in enumerate(characters):
        for j in range(i, len(characters)):
            expected = 1 if i == j else 0
            if chi.inner_product(characters[j]) != expected:
                bad.append((format_partition(shapes[i]), format_partition(shapes[j])))
    return not bad, f'{len(shapes)} characters, {len(bad)} bad pairs {bad[:3]}'


def _conjugation_twist(n: int) -> tuple[bool, str]:
    bad = []
    for lam in enumerate_partitions(n):
        chi, chi_c = chi_irreducible(lam), chi_irreducible(conjugate(lam))
        if not chi.twist_by_sign().same_values(chi_c):
            bad.append(format_partition(lam))
    return not bad, f'{len(bad)} shapes fail {bad[:3]}'


def _partition_count(n: int) -> tuple[bool, str]:
    return _equal(len(enumerate_partitions(n)), euler_partition_count(n))


def _lemma(bound: int) -> tuple[bool, str]:
    found = lemma_counterexamples(bound)
    return not found, f'counterexamples off 2 mod 4: {found[:5]}'


def _lemma_negative_control(bound: int) -> tuple[bool, str]:
    failing = [c for c in range(2, bound + 1, 4) if not lemma_condition_holds(c)]
    return bool(failing), f'{len(failing)} values c = 2 mod 4 violate the condition'


def character_tasks(max_degree: int) -> list[Task]:
    settings = config.settings.verify
    n_max = min(max_degree + 2, settings['max_orthogonality_degree'])
    tasks = []
    for n in range(1, n_max + 1):
        tasks.append(_task('orthogonality', f'n={n}', _orthogonality, n))
        tasks.append(_task('conjugation twist', f'n={n}', _conjugation_twist, n))
    for n in (10, 20):
        if n <= max_degree + 2:
            tasks.append(_task('partition count', f'n={n}', _partition_count, n))
    for k in range(1, max_degree + 1):
        tasks.append(
            _task('difference identity', f'k={k}', _holds, verify_difference_identity, k)
        )
        if k % 4 in (2, 3):
            tasks.append(_task('sign positivity', f'k={k}', _holds, check_sign_positivity, k))
            tasks.append(_task('sign twist', f'k={k}', _holds, check_sign_twist, k))
    bound = settings['lemma_bound']
    tasks.append(_task('divisor lemma', f'c<={bound}', _lemma, bound))
    tasks.append(_task('divisor lemma, 2 mod 4', f'c<={bound}', _lemma_negative_control, bound))
    return tasks


# symmetry


def _symmetry(func, k: int) -> tuple[bool, str]:
    report = check_conjugate_symmetry(func(k))
    return report.symmetric, f'{len(report.violations)} violations'


def _series(max_degree: int) -> tuple[bool, str]:
    report = multiplicity_series_check(max_degree)
    return report.holds, f'{len(report.entries)} entries, deviations {report.deviations}'


def _negative_control(max_degree: int) -> tuple[bool, str]:
    rows = negative_control_report(max_degree)
    asymmetric = [f"{row['algebra']}({row['degree']})" for row in rows if not row['symmetric']]
    return True, f'{len(rows)} degrees outside the theorems, asymmetric: {asymmetric}'


def symmetry_tasks(max_degree: int) -> list[Task]:
    tasks = []
    for k in range(1, max_degree + 1):
        if symmetry_expectation('h', k) == GUARANTEED:
            tasks.append(_task('h symmetric', f'k={k}', _symmetry, decompose_h, k))
        if symmetry_expectation('lie', k) == GUARANTEED:
            tasks.append(_task('Lie symmetric', f'k={k}', _symmetry, decompose_lie, k))
        if symmetry_expectation('assoc', k) == GUARANTEED:
            tasks.append(_task('cyclic symmetric', f'k={k}', _symmetry, decompose_cyclic, k))
    if max_degree >= 2:
        tasks.append(_task('multiplicity one series', f'k<={max_degree}', _series, max_degree))
    tasks.append(
        _task(
            'negative control',
            f'k<={max_degree}',
            _negative_control,
            max_degree,
            informational=True,
        )
    )
    return tasks


# dimensions


def _base_case(k: int, expected: dict) -> tuple[bool, str]:
    return _equal(decompose_h(k), Decomposition(k + 2, expected, f'h({k})'))


def _dimension_consistency(k: int) -> tuple[bool, str]:
    dec = decompose_h(k)
    genera = range(1, DIMENSION_GENERA + 1)
    bad = [g for g in genera if dimension_of(dec, g) != _expected_kernel(g, k)]
    return not bad, f'genera 1..{DIMENSION_GENERA}, failing {bad}'


def _s_module_dimension(k: int) -> tuple[bool, str]:
    identity = Partition._trusted((1,) * (k + 2))
    return _equal(decompose_h(k).s_module_dimension(), chi_W(k)[identity])


def dimension_tasks(max_degree: int) -> list[Task]:
    tasks = [_task('base case', 'k=2', _base_case, 2, {(2, 2): 1})]
    if max_degree >= 3:
        tasks.append(_task('base case', 'k=3', _base_case, 3, {(3, 1, 1): 1}))
    for k in range(1, max_degree + 1):
        tasks.append(_task('dimension', f'k={k}', _dimension_consistency, k))
        tasks.append(_task('S-module dimension', f'k={k}', _s_module_dimension, k))
    return tasks


# restriction


def _lr_symmetry(n: int) -> tuple[bool, str]:
    bad = 0
    for lam in enumerate_partitions(n):
        for mu in subpartitions(lam):
            for nu, c in skew_lr_expansion(lam, mu).items():
                if skew_lr_expansion(lam, nu).get(mu, 0) != c:
                    bad += 1
    return not bad, f'{bad} asymmetric coefficients'


def _lr_sum_rule(n: int) -> tuple[bool, str]:
    """Induction: sum over lam |- n of c^lam_(mu nu) f^lam equals
    C(n, |mu|) f^mu f^nu for every pair with |mu| + |nu| = n."""
    totals = defaultdict(int)
    for lam in enumerate_partitions(n):
        f = hook_length_dimension(lam)
        for mu in subpartitions(lam):
            for nu, c in skew_lr_expansion(lam, mu).items():
                totals[mu, nu] += c * f
    bad = []
    for m in range(n + 1):
        for mu in enumerate_partitions(m):
            for nu in enumerate_partitions(n - m):
                expected = comb(n, m) * hook_length_dimension(mu) * hook_length_dimension(nu)
                if totals[mu, nu] != expected:
                    bad.append((format_partition(mu), format_partition(nu)))
    return not bad, f'{len(bad)} failures {bad[:3]}'


def _modification_rules(n: int, max_genus: int) -> tuple[bool, str]:
    bad = []
    for lam in enumerate_partitions(n):
        for g in range(1, max_genus + 1):
            expected = spherical_invariant_multiplicity(lam, g)
            if modification_invariant_multiplicity(lam, g) != expected:
                bad.append((format_partition(lam), g))
    return not bad, f'{len(bad)} disagreements {bad[:3]}'


def _stable_restriction(k: int) -> tuple[bool, str]:
    return _equal(stable_restrict(decompose_h(k))[EMPTY], stable_invariant_dim(k))


def _genus_one_rule(k: int) -> tuple[bool, str]:
    return _equal(unstable_invariant_dim(k, 1), genus_one_invariant_dim(k))


def _published_stable(k: int, value: int) -> tuple[bool, str]:
    return _equal(stable_invariant_dim(k), value)


def _published_genus_one(k: int, value: int) -> tuple[bool, str]:
    return _equal(genus_one_invariant_dim(k), value)


def _published_row(k: int, row: tuple) -> tuple[bool, str]:
    computed = tuple(unstable_invariant_dim(k, g) for g in range(1, len(row) + 1))
    return _equal(computed, row)


def restriction_tasks(max_degree: int) -> list[Task]:
    n_max = min(config.settings.verify['max_lr_size'], max_degree + 2)
    tasks = []
    for n in range(1, n_max + 1):
        tasks.append(_task('LR symmetry', f'n={n}', _lr_symmetry, n))
        tasks.append(_task('LR sum rule', f'n={n}', _lr_sum_rule, n))
        tasks.append(_task('modification rules', f'n={n}', _modification_rules, n, 4))
    for k in range(1, min(max_degree, STABLE_RESTRICTION_DEGREE) + 1):
        tasks.append(_task('stable restriction', f'k={k}', _stable_restriction, k))
    for k in range(2, max_degree + 1, 2):
        tasks.append(_task('genus one rule', f'k={k}', _genus_one_rule, k))
    for k, (*per_genus, stable) in PUBLISHED_INVARIANTS.items():
        if k > max_degree:
            continue
        tasks.append(_task('published stable value', f'k={k}', _published_stable, k, stable))
        tasks.append(
            _task('published genus one', f'k={k}', _published_genus_one, k, per_genus[0])
        )
        tasks.append(
            _task('published per-genus row', f'k={k}', _published_row, k, tuple(per_genus))
        )
    return tasks


# oracle


def _oracle_kernel(g: int, k: int) -> tuple[bool, str]:
    from sympdec.oracle import oracle_kernel_dimension

    return _equal(oracle_kernel_dimension(g, k), _expected_kernel(g, k))


def _oracle_vs_characters(g: int, k: int) -> tuple[bool, str]:
    from sympdec.oracle import oracle_kernel_dimension

    return _equal(oracle_kernel_dimension(g, k), dimension_of(decompose_h(k), g))


def _full_matrix(g: int, k: int) -> tuple[bool, str]:
    from sympdec.oracle import bracket_map_matrix, kernel_dimension

    return _equal(kernel_dimension(bracket_map_matrix(g, k)), _expected_kernel(g, k))


def _oracle_decomposition(k: int) -> tuple[bool, str]:
    from sympdec.oracle import oracle_weight_decomposition

    return _equal(oracle_weight_decomposition(k), decompose_h(k))


def _oracle_invariants(g: int, k: int, method: str) -> tuple[bool, str]:
    from sympdec.oracle import sp_invariant_dimension

    return _equal(sp_invariant_dimension(g, k, method=method), invariant_value(k, g).value)


def _assoc_vs_cyclic(k: int) -> tuple[bool, str]:
    from sympdec.oracle import assoc_decompose

    return _equal(assoc_decompose(None, k), decompose_cyclic(k))


def _assoc_symmetric(k: int) -> tuple[bool, str]:
    from sympdec.oracle import assoc_decompose

    return _symmetry(partial(assoc_decompose, None), k)


def _assoc_published(k: int) -> tuple[bool, str]:
    from sympdec.oracle import assoc_reference_check

    report = assoc_reference_check(k)
    return report.agrees_with_reference, f"discrepancies {report.to_dict()['discrepancies']}"


def oracle_tasks(max_degree: int) -> list[Task]:
    settings = config.settings.verify
    k_max = min(max_degree, settings['max_oracle_degree'])
    g_max = settings['max_oracle_genus']
    tasks = []
    for k in range(1, k_max + 1):
        for g in range(1, g_max + 1):
            parameter = f'g={g} k={k}'
            tasks.append(_task('oracle kernel', parameter, _oracle_kernel, g, k))
            tasks.append(_task('oracle vs characters', parameter, _oracle_vs_characters, g, k))
            if 2 * g * witt_dimension(2 * g, k + 1) <= FULL_MATRIX_COLUMNS:
                tasks.append(_task('bracket matrix', parameter, _full_matrix, g, k))
        tasks.append(_task('oracle decomposition', f'k={k}', _oracle_decomposition, k))
        if k % 2:
            continue
        # the raising operator method is used where its matrices stay small
        for g in (1, 2) if k <= 4 else (1,):
            check = 'oracle invariants, direct'
            tasks.append(_task(check, f'g={g} k={k}', _oracle_invariants, g, k, 'direct'))
        for g in range(1, g_max + 1):
            check = 'oracle invariants, weights'
            tasks.append(_task(check, f'g={g} k={k}', _oracle_invariants, g, k, 'weights'))
    for k in (1, 3, 5):
        if k > k_max:
            continue
        tasks.append(_task('associative vs cyclic', f'k={k}', _assoc_vs_cyclic, k))
        tasks.append(_task('associative symmetric', f'k={k}', _assoc_symmetric, k))
        tasks.append(
            _task('associative published', f'k={k}', _assoc_published, k, informational=True)
        )
    return tasks


TASKS = {
    'characters': character_tasks,
    'symmetry': symmetry_tasks,
    'dimensions': dimension_tasks,
    'restriction': restriction_tasks,
    'oracle': oracle_tasks,
}


def run_suite(suite: str, max_degree: int, progress: bool = True) -> SuiteReport:
    """Run one suite (or `all`) up to `max_degree`."""
    if suite == 'all':
        report = SuiteReport('all', max_degree)
        for name in SUITES:
            report.checks.extend(run_suite(name, max_degree, progress=progress).checks)
        return report
    if suite not in TASKS:
        raise InvalidArgumentError(f'Unknown suite `{suite}`, use one of {SUITES + ("all",)}')
    if max_degree < 1:
        raise InvalidArgumentError(f'--max-degree must be positive, got {max_degree}')

    report = SuiteReport(suite, max_degree)
    tasks = TASKS[suite](max_degree)
    for task in tqdm(tasks, desc=suite, file=sys.stderr, disable=not progress):
        try:
            passed, detail = task.func()
        except SympdecError as e:
            logger.exception(e)
            passed, detail = False, f'{e.__class__.__name__}: {e}'
        result = CheckResult(
            suite, task.check, task.parameter, bool(passed), detail, task.informational
        )
        if not result.passed:
            log = logger.info if task.informational else logger.error
            log(f'{suite}/{task.check} ({task.parameter}) failed: {detail}')
        report.checks.append(result)
    return report
