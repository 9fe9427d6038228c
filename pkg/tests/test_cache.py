from __future__ import annotations

import pytest

from sympdec import ENGINE_VERSION
from sympdec.cache import ResultCache
from sympdec.decomposition import decompose_h
from sympdec.formats import ResultEnvelope


@pytest.fixture()
def cache(tmp_path) -> ResultCache:
    return ResultCache(tmp_path / 'cache', enabled=True)


def test_key():
    assert ResultCache.key('h', 6) == f'h-k6-v{ENGINE_VERSION}.json'


def test_store_and_load(cache):
    envelope = ResultEnvelope('decompose', {'source': 'h', 'degree': 2}, {'x': 1})
    fn = cache.store('h', 2, envelope)
    assert fn.exists()
    assert cache.load('h', 2) == envelope
    assert not list(cache.directory.glob('*.tmp'))


def test_miss(cache):
    assert cache.load('lie', 9) is None


def test_corrupt_file(cache):
    cache.directory.mkdir(parents=True)
    cache.path('h', 3).write_text('{not json')
    assert cache.load('h', 3) is None


def test_disabled(tmp_path):
    cache = ResultCache(tmp_path, enabled=False)
    assert cache.store('h', 2, ResultEnvelope('decompose')) is None
    assert cache.load('h', 2) is None
    assert list(tmp_path.iterdir()) == []


def test_decomposition_computed_once(cache):
    calls = []

    def compute():
        calls.append(1)
        return decompose_h(3)

    cold, hit = cache.decomposition('h', 3, compute, method='character')
    assert not hit
    warm, hit = cache.decomposition('h', 3, compute, method='character')
    assert hit
    assert warm == cold
    assert warm.source == 'h(3)'
    assert len(calls) == 1


def test_clear(cache):
    cache.store('h', 1, ResultEnvelope('decompose'))
    cache.store('h', 2, ResultEnvelope('decompose'))
    assert cache.clear() == 2
    assert cache.load('h', 1) is None
