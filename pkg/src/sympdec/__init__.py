from __future__ import annotations

__version__ = '1.0.0'
__title__ = 'sympdec'
__long_title__ = f'{__title__} v{__version__}'
__author__ = 'sympdec developers'
__description__ = (
    'Exact stable decompositions of symplectic derivation Lie algebras '
    'via symmetric group characters'
)
__license__ = 'BSD License'

# The engine version enters cache keys and result envelopes.
ENGINE_VERSION = __version__
SCHEMA_VERSION = 1
