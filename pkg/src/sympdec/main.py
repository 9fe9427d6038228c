from __future__ import annotations

import argparse
import datetime
import logging
import pprint
import sys
import time
import warnings

import sympdec
from sympdec import config
from sympdec.cache import ResultCache
from sympdec.combinatorics import parse_partition
from sympdec.exceptions import InvalidArgumentError, ResourceLimitError, SympdecError
from sympdec.formats import FORMATS, ResultEnvelope, decomposition_payload, render
from sympdec.utils.workers import set_threads
from sympdec.warnings import ReferenceMismatchWarning

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_RESOURCE = 3

ALGEBRAS = ('h', 'lie', 'assoc')
GENUS_HELP = 'Annotate every row with its GL(2g) dimension.'
# global options left unset on the command line
GLOBAL_DEFAULTS = {'fmt': None, 'threads': None, 'cache': None, 'verbose': False}


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def show_info():
    """Show info about the current sympdec installation."""
    print('\n# Version')
    print(f'{sympdec.__long_title__}')

    print('\n# Locations')
    for name, value in config.locations.items():
        print(f' - ({name}) {value}')

    print('\n# settings.yaml')
    print(f' - {config.settings.location}')
    pprint.pprint(config.settings.mapping, sort_dicts=True)


def setup_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else config.settings.logging.get('level', 'INFO')
    fmt = '%(asctime)s | %(module)s:%(lineno)s | %(levelname)s | %(message)s'

    if config.settings.logging.get('to_file'):
        date = datetime.datetime.now().strftime('%Y-%m-%d')
        config.logs_drc.mkdir(parents=True, exist_ok=True)
        logfile = config.logs_drc / f'sympdec_{date}.log'
        logging.basicConfig(format=fmt, filename=logfile, level=level)
    else:
        logging.basicConfig(format=fmt, stream=sys.stderr, level=level)

    logging.captureWarnings(True)


# commands, each returns (payload, exit code)


def _character_decomposition(algebra: str, k: int, cache: ResultCache):
    from sympdec.decomposition import decompose_h, decompose_lie

    func = {'h': decompose_h, 'lie': decompose_lie}[algebra]
    return cache.decomposition(algebra, k, lambda: func(k), method='character')


def cmd_decompose(options, cache: ResultCache):
    algebra, k = options.algebra, options.degree
    if algebra == 'assoc':
        return cmd_oracle_decompose(options, cache)
    if options.method == 'oracle':
        if algebra != 'h':
            raise InvalidArgumentError('The oracle decomposes `h` and `assoc` only')
        from sympdec.oracle import oracle_weight_decomposition

        dec, hit = cache.decomposition(
            f'{algebra}-oracle', k, lambda: oracle_weight_decomposition(k), method='oracle'
        )
    else:
        dec, hit = _character_decomposition(algebra, k, cache)
    log.info(f'{algebra}({k}) from the cache: {hit}')
    return decomposition_payload(dec, genus=options.genus, method=options.method), EXIT_OK


def cmd_oracle_decompose(options, cache: ResultCache):
    from sympdec.oracle import (
        assoc_decompose,
        assoc_reference_check,
        oracle_weight_decomposition,
    )

    k = options.degree
    if options.algebra == 'lie':
        raise InvalidArgumentError('The oracle decomposes `h` and `assoc` only')
    if options.algebra == 'h':
        dec, hit = cache.decomposition(
            'h-oracle', k, lambda: oracle_weight_decomposition(k), method='oracle'
        )
        payload = decomposition_payload(dec, genus=options.genus, method='oracle')
    else:
        dec, hit = cache.decomposition(
            'assoc', k, lambda: assoc_decompose(None, k), method='oracle'
        )
        payload = decomposition_payload(dec, genus=options.genus, method='oracle')
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', ReferenceMismatchWarning)
            report = assoc_reference_check(k, computed=dec)
        if report.discrepancies:
            message = f'assoc({k}) differs from the published decomposition'
            log.warning(message)
            print(f'warning: {message}', file=sys.stderr)
        payload['reference_check'] = report.to_dict()
    log.info(f'{options.algebra}({k}) from the cache: {hit}')
    return payload, EXIT_OK


def cmd_symmetry(options, cache: ResultCache):
    from sympdec.decomposition import check_conjugate_symmetry, symmetry_expectation

    algebra, k = options.algebra, options.degree
    if algebra == 'assoc':
        from sympdec.oracle import assoc_decompose

        dec, _ = cache.decomposition('assoc', k, lambda: assoc_decompose(None, k), 'oracle')
    else:
        dec, _ = _character_decomposition(algebra, k, cache)
    report = check_conjugate_symmetry(dec)
    payload = report.to_dict()
    payload.update(algebra=algebra, degree=k, expected=symmetry_expectation(algebra, k))
    return payload, EXIT_OK if report.symmetric else EXIT_VERIFICATION


def cmd_series(options, cache: ResultCache):
    from sympdec.decomposition import multiplicity_series_check, negative_control_report

    report = multiplicity_series_check(options.max_degree)
    payload = report.to_dict()
    if options.negative_control:
        payload['rows'] = negative_control_report(options.max_degree)
    return payload, EXIT_OK if report.holds else EXIT_VERIFICATION


def cmd_invariants(options, cache: ResultCache):
    from sympdec.restriction import invariant_table, invariant_value, stabilization_genus

    k = options.degree
    payload = {'degree': k}
    if options.all_genera:
        payload['values'] = [v.to_dict() for v in invariant_table(k)]
        payload['stable'] = invariant_value(k).value
        payload['stabilization_genus'] = stabilization_genus(k)
    elif options.genus is not None:
        payload['values'] = [invariant_value(k, options.genus).to_dict()]
    else:
        payload['values'] = [invariant_value(k).to_dict()]
    return payload, EXIT_OK


def cmd_verify(options, cache: ResultCache):
    from sympdec.suites import run_suite

    report = run_suite(options.suite, options.max_degree, progress=not options.quiet)
    return report.to_dict(), EXIT_OK if report.passed else EXIT_VERIFICATION


def cmd_oracle_kernel(options, cache: ResultCache):
    from sympdec.combinatorics import witt_dimension
    from sympdec.oracle import bracket_map_matrix, kernel_dimension, oracle_kernel_dimension

    g, k = options.genus, options.degree
    if options.full_matrix:
        matrix = bracket_map_matrix(g, k)
        value = kernel_dimension(matrix)
        shape = [matrix.rows, matrix.cols]
    else:
        value = oracle_kernel_dimension(g, k)
        shape = None
    n = 2 * g
    expected = n * witt_dimension(n, k + 1) - witt_dimension(n, k + 2)
    payload = {
        'genus': g,
        'degree': k,
        'kernel_dimension': value,
        'expected': expected,
        'method': 'oracle',
        'matrix': 'full' if options.full_matrix else 'weight-blocks',
        'shape': shape,
    }
    return payload, EXIT_OK if value == expected else EXIT_VERIFICATION


def cmd_oracle_invariants(options, cache: ResultCache):
    from sympdec.oracle import sp_invariant_dimension
    from sympdec.restriction import invariant_value

    g, k = options.genus, options.degree
    value = sp_invariant_dimension(g, k, method=options.method)
    reference = invariant_value(k, g)
    payload = {
        'values': [
            {'degree': k, 'genus': g, 'value': value, 'method': 'oracle'},
            reference.to_dict(),
        ],
        'oracle_method': options.method,
        'agrees': value == reference.value,
    }
    return payload, EXIT_OK if value == reference.value else EXIT_VERIFICATION


def cmd_character(options, cache: ResultCache):
    from sympdec.characters import CLASS_FUNCTIONS, character_table, mn_character

    if options.table is not None:
        table = character_table(options.table)
        rows = [
            {'shape': shape, **{cls: int(v) for cls, v in row.items()}}
            for shape, row in table.iterrows()
        ]
        return {'n': options.table, 'rows': rows}, EXIT_OK
    if options.function:
        if options.degree is None:
            raise InvalidArgumentError('--function needs --degree')
        functions = {name.lower(): func for name, func in CLASS_FUNCTIONS.items()}
        chi = functions[options.function](options.degree)
        d = chi.to_dict()
        return {'label': d['label'], 'degree': d['degree'], 'classes': d['values']}, EXIT_OK
    if options.shape is None or options.cls is None:
        raise InvalidArgumentError('Give --shape and --class, --function or --table')
    lam, mu = parse_partition(options.shape), parse_partition(options.cls)
    value = mn_character(lam, mu)
    return {'shape': list(lam), 'class': list(mu), 'value': value}, EXIT_OK


def cmd_info(options, cache: ResultCache):
    if options.init:
        drc = config.initialize_config_dir()
        print(f'Configuration directory: {drc}', file=sys.stderr)
    show_info()
    return None, EXIT_OK


COMMANDS = {
    'decompose': cmd_decompose,
    'symmetry': cmd_symmetry,
    'series': cmd_series,
    'invariants': cmd_invariants,
    'verify': cmd_verify,
    'oracle kernel': cmd_oracle_kernel,
    'oracle invariants': cmd_oracle_invariants,
    'oracle decompose': cmd_oracle_decompose,
    'character': cmd_character,
    'info': cmd_info,
}


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'`{value}` is not an integer')
    if n < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {n}')
    return n


def build_parser() -> ArgumentParser:
    description = """Exact decompositions of the symplectic derivation Lie algebra h_(g,1)
and its relatives through symmetric group characters, with a brute force
oracle to check them.

Examples:
    sympdec decompose --algebra h --degree 6
    sympdec invariants --degree 18 --stable
    sympdec verify --suite all --max-degree 20"""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format',
        choices=FORMATS,
        dest='fmt',
        default=argparse.SUPPRESS,
        help='Output format (default: table on a terminal, json otherwise).',
    )
    common.add_argument(
        '--threads',
        type=_positive,
        default=argparse.SUPPRESS,
        help='Worker threads (default: one per cpu).',
    )
    common.add_argument(
        '--cache',
        action=argparse.BooleanOptionalAction,
        default=argparse.SUPPRESS,
        help='Read and write the result cache (default from settings.yaml).',
    )
    common.add_argument(
        '-v', '--verbose', action='store_true', default=argparse.SUPPRESS, help='Debug logging.'
    )

    parser = ArgumentParser(
        prog='sympdec',
        description=description,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
    )
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=ArgumentParser)
    sub.required = True

    p = sub.add_parser('decompose', parents=[common], help='Irreducible decomposition.')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('--degree', type=_positive, required=True)
    p.add_argument('--genus', type=_positive, help=GENUS_HELP)
    p.add_argument(
        '--method',
        choices=('character', 'oracle'),
        default='character',
        help='`oracle` recovers h from the weight blocks of the bracket map.',
    )

    p = sub.add_parser('symmetry', parents=[common], help='Conjugate symmetry check.')
    p.add_argument('--algebra', choices=ALGEBRAS, required=True)
    p.add_argument('--degree', type=_positive, required=True)

    p = sub.add_parser('series', parents=[common], help='Multiplicity one series in h.')
    p.add_argument('--max-degree', type=_positive, default=20)
    p.add_argument(
        '--negative-control',
        action='store_true',
        help='Also list the symmetry verdicts in the degrees outside the theorems.',
    )

    p = sub.add_parser('invariants', parents=[common], help='Sp invariant dimensions.')
    p.add_argument('--degree', type=_positive, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument('--stable', action='store_true', help='Stable value (default).')
    group.add_argument('--genus', type=_positive)
    group.add_argument(
        '--all-genera', action='store_true', help='Every genus up to the stable range.'
    )

    p = sub.add_parser('verify', parents=[common], help='Run verification suites.')
    p.add_argument(
        '--suite',
        choices=('characters', 'symmetry', 'dimensions', 'restriction', 'oracle', 'all'),
        default='all',
    )
    p.add_argument('--max-degree', type=_positive, default=12)
    p.add_argument('-q', '--quiet', action='store_true', help='No progress bar.')

    p = sub.add_parser('oracle', parents=[common], help='Brute force linear algebra.')
    osub = p.add_subparsers(dest='oracle_command', metavar='what', parser_class=ArgumentParser)
    osub.required = True

    o = osub.add_parser('kernel', parents=[common], help='Kernel dimension of the bracket map.')
    o.add_argument('--genus', type=_positive, required=True)
    o.add_argument('--degree', type=_positive, required=True)
    o.add_argument('--full-matrix', action='store_true', help='Assemble the whole matrix.')

    o = osub.add_parser('invariants', parents=[common], help='sp(2g) invariants of h.')
    o.add_argument('--genus', type=_positive, required=True)
    o.add_argument('--degree', type=_positive, required=True)
    o.add_argument('--method', choices=('direct', 'weights'), default='direct')

    o = osub.add_parser('decompose', parents=[common], help='GL decomposition from weights.')
    o.add_argument('--algebra', choices=('h', 'assoc'), required=True)
    o.add_argument('--degree', type=_positive, required=True)
    o.add_argument('--genus', type=_positive, help=GENUS_HELP)

    p = sub.add_parser('character', parents=[common], help='Symmetric group characters.')
    p.add_argument('--shape', help='Irreducible, e.g. `3,1,1` or `2^2,1`.')
    p.add_argument('--class', dest='cls', help='Cycle type, e.g. `5` or `2,1^3`.')
    p.add_argument('--function', type=str.lower, choices=('l', 'induced', 'w', 'cyclic'))
    p.add_argument('--degree', type=_positive)
    p.add_argument('--table', type=_positive, help='Full character table of S_n.')

    p = sub.add_parser('info', parents=[common], help='Version and locations.')
    p.add_argument('--init', action='store_true', help='Create the configuration directory.')

    return parser


def parse_options(argv: list[str] = None) -> argparse.Namespace:
    """Parse `argv`; global options may come before or after the command."""
    options = build_parser().parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(options, key):
            setattr(options, key, value)
    return options


def _command_name(options) -> str:
    if options.command == 'oracle':
        return f'oracle {options.oracle_command}'
    return options.command


def _parameters(options) -> dict:
    skip = {'command', 'oracle_command', 'fmt', 'threads', 'cache', 'verbose', 'quiet', 'init'}
    return {key: value for key, value in sorted(vars(options).items()) if key not in skip}


def main(argv: list[str] = None) -> int:
    options = parse_options(argv)

    setup_logging(verbose=options.verbose)
    log.info(f'sympdec started: {repr(options.__dict__)}')

    set_threads(options.threads)
    cache = ResultCache(enabled=options.cache)
    name = _command_name(options)

    t0 = time.perf_counter()
    try:
        payload, code = COMMANDS[name](options, cache)
    except (InvalidArgumentError, ValueError) as e:
        log.error(f'{name}: {e}')
        print(f'sympdec {name}: error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as e:
        log.error(f'{name}: {e}')
        print(f'sympdec {name}: {e}', file=sys.stderr)
        return EXIT_RESOURCE
    except SympdecError as e:
        log.exception(e)
        print(f'sympdec {name}: internal error: {e}', file=sys.stderr)
        return EXIT_VERIFICATION
    timing_ms = int(round((time.perf_counter() - t0) * 1000))

    if payload is not None:
        envelope = ResultEnvelope(name, _parameters(options), payload, timing_ms=timing_ms)
        sys.stdout.write(render(envelope, options.fmt))
    log.info(f'{name} finished in {timing_ms} ms with exit code {code}')
    return code


if __name__ == '__main__':
    sys.exit(main())
