from __future__ import annotations

import os
import tempfile
from pathlib import Path

import pytest

base_drc = Path(__file__).parent
os.environ['SYMPDEC_CONFIG_DIR'] = str(base_drc.absolute())
os.environ['SYMPDEC_CACHE_DIR'] = tempfile.mkdtemp(prefix='sympdec-cache-')

STRETCH = bool(os.environ.get('SYMPDEC_RUN_STRETCH'))


def pytest_configure(config):
    pytest.TEST_DATA = Path(__file__).parent / 'test_data'
    config.addinivalue_line('markers', 'stretch: long running check (set SYMPDEC_RUN_STRETCH)')


def pytest_collection_modifyitems(config, items):
    if STRETCH:
        return
    skip = pytest.mark.skip(reason='set SYMPDEC_RUN_STRETCH=1 to run')
    for item in items:
        if 'stretch' in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope='module')
def h_small():
    """Stable decompositions of h(k) for k <= 6."""
    from sympdec.decomposition import decompose_h

    return {k: decompose_h(k) for k in range(1, 7)}


@pytest.fixture()
def oracle_caps():
    """Restore the oracle caps after a test changes them."""
    from sympdec import config

    saved = dict(config.settings.oracle)
    yield config.settings.oracle
    config.settings.oracle.clear()
    config.settings.oracle.update(saved)
