#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Package logger. Records go to stderr only; stdout carries the CSV/JSON data.
"""

import logging
import functools
import sys

logging.VERBOSE = 5
logging.addLevelName(logging.VERBOSE, 'VERBOSE')

_LEVELS = {
    'VERBOSE': logging.VERBOSE,
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARN': logging.WARN,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL,
}


class Logger(logging.Logger):
    record_fmt = '[FIXAUTH][%(levelname)s][%(asctime)s][%(filename)s:%(lineno)d] - - %(message)s'
    date_fmt = '%Y-%m-%d %H:%M:%S'
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.VERBOSE)
    handler.setFormatter(logging.Formatter(record_fmt, date_fmt))

    logger = logging.Logger('fixauth')
    logger.setLevel(logging.VERBOSE)
    logger.addHandler(handler)

    def __new__(cls, *args, **kwargs):
        # singleton
        if not hasattr(cls, 'logger'):
            cls.logger = super(Logger, cls).__new__(cls, *args, **kwargs)
        return cls.logger


logger = Logger('fixauth')
logger.setLevel(logging.WARNING)
for _name, _level in _LEVELS.items():
    setattr(logger, _name, _level)
logger.verbose = functools.partial(logger.log, logging.VERBOSE)


def set_verbosity(count):
    """
    Map a repeated -v count onto a level: 0 WARNING, 1 INFO, 2 DEBUG, 3+ VERBOSE
    """
    levels = [logging.WARNING, logging.INFO, logging.DEBUG, logging.VERBOSE]
    logger.setLevel(levels[max(0, min(count, len(levels) - 1))])
    return logger.level
