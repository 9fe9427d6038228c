from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from sympdec import ENGINE_VERSION, SCHEMA_VERSION
from sympdec.combinatorics.dimensions import gl_dimension
from sympdec.combinatorics.partitions import Partition
from sympdec.decomposition.decomposition import Decomposition
from sympdec.exceptions import InvalidArgumentError


@dataclass
class ResultEnvelope:
    """Wrapper around every result the command line prints or caches.

    `schema_version` changes whenever the shape of a payload changes.
    """

    command: str
    parameters: dict = field(default_factory=dict)
    payload: dict = field(default_factory=dict)
    timing_ms: int = 0
    engine_version: str = ENGINE_VERSION
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'parameters': self.parameters,
            'payload': self.payload,
            'engine_version': self.engine_version,
            'timing_ms': self.timing_ms,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> ResultEnvelope:
        try:
            return cls(
                command=d['command'],
                parameters=d['parameters'],
                payload=d['payload'],
                timing_ms=d['timing_ms'],
                engine_version=d['engine_version'],
                schema_version=d['schema_version'],
            )
        except KeyError as e:
            raise InvalidArgumentError(f'Not a result envelope, missing key {e}') from e

    @classmethod
    def from_json(cls, text: str) -> ResultEnvelope:
        return cls.from_dict(json.loads(text))


def dumps(obj) -> str:
    """Canonical json: sorted keys, two space indent, trailing newline.

    Parsing the output and dumping it again gives the same bytes.
    """
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def write_envelope(fn, envelope: ResultEnvelope) -> None:
    Path(fn).write_text(envelope.to_json())


def read_envelope(fn) -> ResultEnvelope:
    return ResultEnvelope.from_json(Path(fn).read_text())


def decomposition_rows(dec: Decomposition, genus: int = None) -> list[dict]:
    """Decomposition as rows in canonical order, optionally with the
    dimension of each GL(2g) irreducible."""
    rows = []
    for lam, m in dec.items():
        row = {'partition': list(lam), 'multiplicity': m}
        if genus is not None:
            row['gl_dimension'] = gl_dimension(lam, 2 * genus)
        rows.append(row)
    return rows


def decomposition_payload(dec: Decomposition, genus: int = None, method: str = 'character'):
    payload = {
        'source': dec.source,
        'n': dec.n,
        'method': method,
        'decomposition': decomposition_rows(dec, genus=genus),
        'total_multiplicity': dec.total_multiplicity(),
    }
    if genus is not None:
        payload['genus'] = genus
        payload['dimension'] = sum(
            row['multiplicity'] * row['gl_dimension'] for row in payload['decomposition']
        )
    return payload


def decomposition_from_payload(payload: dict) -> Decomposition:
    multiplicities = {
        Partition(row['partition']): row['multiplicity'] for row in payload['decomposition']
    }
    return Decomposition(payload['n'], multiplicities, payload['source'])
