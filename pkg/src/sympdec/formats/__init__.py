from __future__ import annotations

import sys

from .envelope import (
    ResultEnvelope,
    decomposition_from_payload,
    decomposition_payload,
    decomposition_rows,
    dumps,
    read_envelope,
    write_envelope,
)
from .tables import format_table, payload_tables, rows2df

FORMATS = ('json', 'table')


def default_format() -> str:
    """Table on a terminal, json otherwise (unless configured)."""
    from sympdec import config

    configured = config.settings.output.get('format')
    if configured:
        return configured
    return 'table' if sys.stdout.isatty() else 'json'


def render(envelope: ResultEnvelope, fmt: str = None) -> str:
    fmt = fmt or default_format()
    if fmt == 'json':
        return envelope.to_json()
    if fmt == 'table':
        return format_table(envelope)
    raise ValueError(f'Unknown output format `{fmt}`, use one of {FORMATS}')
