import logging
import os
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = 'COLEXCODE_THREADS'


def num_threads(threads=None):
    """Worker count: the explicit argument, else $COLEXCODE_THREADS, else 1."""
    if threads is None:
        value = os.environ.get(THREADS_ENV_VAR, '1')
        try:
            threads = int(value)
        except ValueError:
            raise ValueError('%s must be an integer, got %r' % (THREADS_ENV_VAR, value))
    if threads < 1:
        raise ValueError('number of threads must be positive, got %d' % threads)
    return threads


def parallel_map(fn, items, threads=None):
    """Like `list(map(fn, items))`; results keep the order of `items`."""
    items = list(items)
    threads = min(num_threads(threads), max(len(items), 1))
    if threads == 1:
        return [fn(item) for item in items]
    logger.debug('mapping %d shards over %d threads', len(items), threads)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))
