"""
Worker pool helper built on joblib.

Every parallel map in the package goes through `parallel_map`, which keeps
results in input order so output never depends on the schedule.
"""
import logging
from typing import Callable, Iterable, List, TypeVar

from joblib import Parallel, delayed

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], n_jobs: int = 1) -> List[R]:
    """
    Apply `func` to every item, optionally on a thread pool.

    Args:
        func: Pure function of one argument.
        items: Inputs; the output list follows their order.
        n_jobs: 1 runs inline, 0 or negative values use every core
            (joblib semantics for -1), larger values size the pool.

    Returns:
        List of results in input order.
    """
    items = list(items)
    if n_jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    if n_jobs == 0:
        n_jobs = -1
    logger.debug("Dispatching %d tasks to joblib (n_jobs=%d)", len(items), n_jobs)
    return Parallel(n_jobs=n_jobs, prefer="threads")(delayed(func)(item) for item in items)
