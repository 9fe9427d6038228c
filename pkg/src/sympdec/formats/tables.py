from __future__ import annotations

import pandas as pd

from sympdec.combinatorics.partitions import format_partition

# payload keys holding a list of rows, rendered as a table
TABLE_KEYS = ('decomposition', 'values', 'checks', 'entries', 'violations', 'classes', 'rows')


def _cell(value):
    if isinstance(value, list) and all(isinstance(v, int) for v in value):
        return format_partition(value)
    if isinstance(value, (list, dict)):
        return str(value)
    return value


def rows2df(rows: list[dict]) -> pd.DataFrame:
    """Convert a list of payload rows to a pandas DataFrame, partitions
    written as `[3,1,1]`."""
    df = pd.DataFrame([{key: _cell(value) for key, value in row.items()} for row in rows])
    return df


def payload_tables(payload: dict) -> dict[str, pd.DataFrame]:
    return {
        key: rows2df(payload[key])
        for key in TABLE_KEYS
        if isinstance(payload.get(key), list) and payload[key]
    }


def format_table(envelope) -> str:
    """Aligned text rendering of an envelope: scalar fields first, then one
    table per list of rows."""
    payload = envelope.payload
    lines = [f'# {envelope.command}']
    for key, value in sorted(envelope.parameters.items()):
        lines.append(f'{key}: {value}')
    for key, value in sorted(payload.items()):
        if key in TABLE_KEYS and isinstance(value, list):
            continue
        if isinstance(value, dict):
            value = ', '.join(f'{k}={_cell(v)}' for k, v in sorted(value.items()))
        lines.append(f'{key}: {_cell(value)}')
    for key, df in payload_tables(payload).items():
        lines.append('')
        lines.append(f'## {key}')
        lines.append(df.to_string(index=False))
    for key in TABLE_KEYS:
        if payload.get(key) == []:
            lines.append('')
            lines.append(f'## {key}: none')
    lines.append(f'({envelope.timing_ms} ms, sympdec {envelope.engine_version})')
    return '\n'.join(lines) + '\n'
