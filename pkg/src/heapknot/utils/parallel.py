"""Progress bars and process-pool mapping for long enumerations."""

import logging
import multiprocessing
import os
from collections.abc import Callable, Iterable, Iterator
from typing import Any, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")

_BAR_FORMAT = "{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})"


def pbar(
    it: Iterable[T],
    total: int | None = None,
    desc: str | None = None,
    verbose: bool = True,
    leave: bool = False,
) -> Iterator[T] | Iterable[T]:
    """Wrap an iterable in a tqdm bar when ``verbose``."""
    if not verbose:
        return it
    return tqdm(it, total=total, desc=desc, leave=leave, ncols=80, bar_format=_BAR_FORMAT)


def resolve_workers(workers: int | None) -> int:
    """Worker count, defaulting to the available parallelism."""
    if workers is None:
        return os.cpu_count() or 1
    return max(1, workers)


def apply_pool(
    func: Callable[..., T],
    arguments: Iterable[tuple[Any, ...]],
    workers: int = 1,
    verbose: bool = True,
    desc: str | None = None,
) -> list[T]:
    """Apply ``func(*args)`` to every argument tuple, in order.

    Runs in-process for one worker, otherwise in a multiprocessing pool.
    Results keep the order of ``arguments`` regardless of the worker count.
    """
    arguments = list(arguments)
    if workers <= 1 or len(arguments) <= 1:
        return [func(*args) for args in pbar(arguments, len(arguments), desc, verbose)]

    logger.debug(f"Mapping {len(arguments)} tasks over {workers} processes")
    with multiprocessing.Pool(workers) as pool:
        results = pool.imap(_star, [(func, args) for args in arguments])
        return list(pbar(results, len(arguments), desc, verbose))


def _star(packed: tuple[Callable[..., T], tuple[Any, ...]]) -> T:
    func, args = packed
    return func(*args)
