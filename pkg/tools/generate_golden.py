"""Regenerate the golden payloads in `tests/test_data/golden`.

Run after a deliberate change of the payload shape (and bump
`SCHEMA_VERSION`), then review the diff.
"""

from __future__ import annotations

from pathlib import Path

from sympdec.decomposition import decompose_h, decompose_lie
from sympdec.formats import decomposition_payload, dumps
from sympdec.oracle import assoc_decompose

this_script = Path(__file__)
root = this_script.parents[1]
drc = root / 'tests' / 'test_data' / 'golden'
drc.mkdir(parents=True, exist_ok=True)

payloads = {}
for k in range(1, 7):
    payloads[f'h-k{k}'] = decomposition_payload(decompose_h(k))
for k in range(2, 7):
    payloads[f'lie-k{k}'] = decomposition_payload(decompose_lie(k))
for k in (1, 3, 5):
    payloads[f'assoc-k{k}'] = decomposition_payload(assoc_decompose(None, k), method='oracle')

for name, payload in payloads.items():
    fn = drc / f'{name}.json'
    fn.write_text(dumps(payload))
    print(f'Wrote {fn.relative_to(root)}')
