from __future__ import annotations

import logging
import os
import shutil
from collections.abc import Mapping
from pathlib import Path

import yaml

logger = logging.getLogger(__name__)


_settings_yaml = 'settings.yaml'
_logs = 'logs'
_sympdec = 'sympdec'

CONFIG_DIR_ENV = 'SYMPDEC_CONFIG_DIR'
CACHE_DIR_ENV = 'SYMPDEC_CACHE_DIR'


def nested_update(d: dict, u: dict) -> dict:
    """Merge `u` into `d` key by key, descending into mappings."""
    for k, v in u.items():
        if isinstance(v, Mapping):
            d[k] = nested_update(d.get(k, {}) or {}, v)
        else:
            d[k] = v
    return d


def get_base_drc() -> Path:
    """Figure out where the configuration files for sympdec are stored.

    The directory does not need to exist, in that case only the packaged
    defaults are used.
    """
    try:
        search = Path(os.environ[CONFIG_DIR_ENV])
    except KeyError:
        search = Path.home() / f'.{_sympdec}'
    logger.debug(f'Config directory: {search}')
    return search


def get_cache_drc() -> Path:
    """Cache directory, `SYMPDEC_CACHE_DIR` takes precedence over the
    settings."""
    try:
        return Path(os.environ[CACHE_DIR_ENV])
    except KeyError:
        pass
    if settings.cache.get('directory'):
        return Path(settings.cache['directory']).expanduser()
    return Path.home() / '.cache' / _sympdec


def initialize_config_dir(dst: Path = None) -> Path:
    """Create the configuration directory with a copy of the default
    settings."""
    dst = Path(dst) if dst else get_base_drc()
    dst.mkdir(exist_ok=True, parents=True)
    (dst / _logs).mkdir(exist_ok=True)

    target = dst / _settings_yaml
    if not target.exists():
        shutil.copy(Path(__file__).parent / _settings_yaml, target)
        logger.info(f'Wrote default settings to {target}')

    return dst


class ConfigObject:
    """Settings tree; top level keys are also available as attributes."""

    def __init__(self, mapping: dict, name: str = 'config', location: str = None):
        super().__init__()
        self.name = name
        self.location = location
        self.mapping = {}
        self.update(mapping)

    def __repr__(self):
        return f"{self.__class__.__name__}('{self.name}')"

    def __getitem__(self, item):
        return self.mapping[item]

    def get(self, item, default=None):
        return self.mapping.get(item, default)

    @classmethod
    def from_file(cls, path: str):
        """Load a yaml file, named after its stem."""
        name = Path(path).stem
        with open(path) as f:
            mapping = yaml.safe_load(f) or {}
        return cls(mapping, name=name, location=path)

    def update_from_file(self, path: str) -> None:
        """Overlay the keys of a yaml file; other keys keep their value."""
        with open(path) as f:
            self.update(yaml.safe_load(f) or {})
        self.location = path

    def update(self, mapping: dict):
        for key, value in mapping.items():
            if isinstance(value, dict):
                try:
                    nested_update(getattr(self, key), value)
                except AttributeError:
                    setattr(self, key, dict(value))
            else:
                setattr(self, key, value)
        nested_update(self.mapping, mapping)


def load_settings():
    global settings

    settings = ConfigObject.from_file(Path(__file__).parent / _settings_yaml)

    user_yaml = config_drc / _settings_yaml
    if user_yaml.exists():
        settings.update_from_file(user_yaml)
        logger.debug(f'Settings updated from {user_yaml}')


base_drc = get_base_drc()
config_drc = base_drc / 'config' if (base_drc / 'config').is_dir() else base_drc
logs_drc = base_drc / _logs

settings = None

load_settings()

locations = {
    'base': base_drc,
    'config': config_drc,
    'logs': logs_drc,
    'cache': get_cache_drc(),
    'settings': config_drc / _settings_yaml,
}
