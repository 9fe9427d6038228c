"""Disk cache of decomposition payloads.

Files are named `{source}-k{degree}-v{engine version}.json` and contain a full
result envelope. Writes go to a temporary file in the same directory that is
then renamed over the target, so concurrent processes never see a partial
file.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

from sympdec import ENGINE_VERSION, config
from sympdec.decomposition.decomposition import Decomposition
from sympdec.formats.envelope import (
    ResultEnvelope,
    decomposition_from_payload,
    decomposition_payload,
)

logger = logging.getLogger(__name__)


class ResultCache:
    """JSON envelope cache in `directory`.

    Parameters
    ----------
    directory : Path, optional
        Defaults to `SYMPDEC_CACHE_DIR`, then `cache.directory` in the
        settings, then `~/.cache/sympdec`.
    enabled : bool, optional
        Defaults to `cache.enabled`. A disabled cache never reads or writes.
    """

    def __init__(self, directory: Path = None, enabled: bool = None):
        self.directory = Path(directory) if directory else config.get_cache_drc()
        self.enabled = config.settings.cache['enabled'] if enabled is None else enabled

    def __repr__(self):
        return f'{self.__class__.__name__}({str(self.directory)!r}, enabled={self.enabled})'

    @staticmethod
    def key(source: str, degree: int) -> str:
        return f'{source}-k{degree}-v{ENGINE_VERSION}.json'

    def path(self, source: str, degree: int) -> Path:
        return self.directory / self.key(source, degree)

    def load(self, source: str, degree: int) -> ResultEnvelope | None:
        if not self.enabled:
            return None
        fn = self.path(source, degree)
        try:
            envelope = ResultEnvelope.from_json(fn.read_text())
        except FileNotFoundError:
            logger.debug(f'Cache miss: {fn.name}')
            return None
        except (json.JSONDecodeError, ValueError) as e:
            logger.warning(f'Ignoring unreadable cache file {fn}: {e}')
            return None
        if envelope.engine_version != ENGINE_VERSION:
            return None
        logger.debug(f'Cache hit: {fn.name}')
        return envelope

    def store(self, source: str, degree: int, envelope: ResultEnvelope) -> Path | None:
        if not self.enabled:
            return None
        self.directory.mkdir(parents=True, exist_ok=True)
        fn = self.path(source, degree)
        fd, tmp = tempfile.mkstemp(prefix=f'.{fn.stem}-', suffix='.tmp', dir=self.directory)
        try:
            with os.fdopen(fd, 'w') as f:
                f.write(envelope.to_json())
            os.replace(tmp, fn)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        logger.debug(f'Cache write: {fn.name}')
        return fn

    def clear(self) -> int:
        """Remove every cache file of this engine version."""
        removed = 0
        if self.directory.exists():
            for fn in self.directory.glob(f'*-v{ENGINE_VERSION}.json'):
                fn.unlink()
                removed += 1
        return removed

    def decomposition(
        self, source: str, degree: int, compute: Callable[[], Decomposition], method: str
    ) -> tuple[Decomposition, bool]:
        """Cached decomposition, `compute()` on a miss.

        Returns the decomposition and whether it came from the cache.
        """
        envelope = self.load(source, degree)
        if envelope is not None:
            return decomposition_from_payload(envelope.payload), True
        dec = compute()
        payload = decomposition_payload(dec, method=method)
        parameters = {'source': source, 'degree': degree}
        self.store(source, degree, ResultEnvelope('decompose', parameters, payload))
        return dec, False
