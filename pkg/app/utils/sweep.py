from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from app.config import settings


def parallel_map(fn: Callable, items: Iterable, workers: int | None = None) -> list:
    """Map over a process pool; results keep the input order."""
    items = list(items)
    workers = workers or settings.WORKERS
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
