from __future__ import annotations

from pathlib import Path

from sympdec import config


def test_settings_from_test_directory():
    assert config.settings.logging['to_file'] is False
    assert config.settings.threads == 2
    # keys missing in the test settings fall back to the packaged defaults
    assert config.settings.oracle['modular_prime'] == 2147483647
    assert config.settings.verify['max_oracle_degree'] == 4


def test_locations():
    assert set(config.locations) == {'base', 'config', 'logs', 'cache', 'settings'}
    assert config.locations['config'] == Path(__file__).parent / 'config'


def test_nested_update():
    d = {'a': {'b': 1, 'c': 2}, 'd': 3}
    config.nested_update(d, {'a': {'b': 5}, 'e': 6})
    assert d == {'a': {'b': 5, 'c': 2}, 'd': 3, 'e': 6}


def test_config_object():
    obj = config.ConfigObject({'x': 1, 'y': {'z': 2}}, name='test')
    assert obj.x == 1
    assert obj.y == {'z': 2}
    assert obj['x'] == 1
    assert obj.get('missing', 7) == 7
    obj.update({'y': {'w': 3}})
    assert obj.y == {'z': 2, 'w': 3}


def test_initialize_config_dir(tmp_path):
    drc = config.initialize_config_dir(tmp_path / 'sympdec')
    assert (drc / 'settings.yaml').exists()
    assert (drc / 'logs').is_dir()
    loaded = config.ConfigObject.from_file(drc / 'settings.yaml')
    assert loaded.oracle['max_basis_size'] == 250000


def test_cache_directory_from_environment():
    import os

    assert config.get_cache_drc() == Path(os.environ[config.CACHE_DIR_ENV])
