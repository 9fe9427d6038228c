from __future__ import annotations

import re

import pytest

from sympdec.decomposition import decompose_h, decompose_lie
from sympdec.formats import decomposition_payload, dumps
from sympdec.oracle import assoc_decompose

GOLDEN = sorted((pytest.TEST_DATA / 'golden').glob('*.json'))


def compute(algebra: str, k: int) -> dict:
    if algebra == 'h':
        return decomposition_payload(decompose_h(k))
    if algebra == 'lie':
        return decomposition_payload(decompose_lie(k))
    return decomposition_payload(assoc_decompose(None, k), method='oracle')


@pytest.mark.parametrize('fn', GOLDEN, ids=[fn.stem for fn in GOLDEN])
def test_golden(fn):
    algebra, k = re.match(r'(h|lie|assoc)-k(\d+)$', fn.stem).groups()
    assert dumps(compute(algebra, int(k))) == fn.read_text()


def test_golden_files_present():
    assert len(GOLDEN) >= 10
