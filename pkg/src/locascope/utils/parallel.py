"""Bounded worker pool for embarrassingly parallel per-class work."""

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from ..config.settings import locascope_config

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T], threads: int | None = None) -> list[R]:
    """Apply ``fn`` to every item, results in input order.

    The pool size is ``threads`` or ``LOCASCOPE_THREADS``; one thread runs inline.
    """
    workers = threads if threads is not None else locascope_config.threads
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
