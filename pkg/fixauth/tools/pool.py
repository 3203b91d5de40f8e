#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

import os
try:
    from multiprocessing.pool import Pool
except ImportError:
    Pool = None
from ..core.config.fa_config import FACONF
from ..core.utils.log import logger


def worker_count(default=None):
    value = os.environ.get(FACONF.ENV_WORKERS)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            logger.warning('ignore {}={!r}, not an integer'.format(FACONF.ENV_WORKERS, value))
    return default if default is not None else (os.cpu_count() or 1)


class WorkerPool(object):
    """
    Ordered map over trials. One worker (or no multiprocessing) runs inline, so a
    result never depends on the worker count.
    """

    def __init__(self, workers=None):
        self.workers = worker_count() if workers is None else max(1, int(workers))
        self._pool = None

    def __enter__(self):
        if self.workers > 1 and Pool is not None:
            self._pool = Pool(self.workers)
        return self

    def __exit__(self, *args):
        self.close()

    def map(self, func, items):
        items = list(items)
        if self._pool is None or len(items) < 2:
            return [func(item) for item in items]
        return self._pool.map(func, items, chunksize=max(1, len(items) // (4 * self.workers)))

    def close(self):
        if self._pool is not None:
            try:
                self._pool.close()
                self._pool.join()
            except:
                pass
            self._pool = None

    def count(self):
        return self.workers
