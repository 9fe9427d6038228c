from __future__ import annotations

import concurrent.futures
import logging
import os
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

_threads = None


def set_threads(threads: int = None) -> None:
    """Set the default pool size used by `parallel_map` (None: one per
    cpu)."""
    global _threads
    _threads = threads


def default_threads() -> int:
    if _threads:
        return _threads
    from sympdec import config

    return config.settings.threads or os.cpu_count() or 1


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: int = None) -> list[R]:
    """Apply `func` to every item on a thread pool, results in input order.

    With a single thread (or a single item) everything runs inline.
    """
    items = list(items)
    threads = threads or default_threads()

    if threads == 1 or len(items) < 2:
        return [func(item) for item in items]

    name = getattr(func, '__name__', repr(func))
    logger.debug(f'Mapping {name} over {len(items)} items with {threads} threads')
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(func, item) for item in items]
        return [future.result() for future in futures]
