#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

import inspect
import functools
from ..core.utils.log import logger
from ..core.config.fa_code import DomainError


def _bound_getter(func):
    sig = inspect.signature(func)

    def _get(args, kwargs):
        bound = sig.bind(*args, **kwargs)
        bound.apply_defaults()
        return bound.arguments
    return _get


def check_message(name='m', params='params'):
    def _check_message(func):
        get_args = _bound_getter(func)

        @functools.wraps(func)
        def decorator(*args, **kwargs):
            arguments = get_args(args, kwargs)
            m, space = arguments[name], arguments[params].message_space_size
            if not 0 <= m < space:
                raise DomainError('message {}={} outside [0, {})'.format(name, m, space))
            return func(*args, **kwargs)
        return decorator
    return _check_message


def check_tag(name='tag', params='params'):
    def _check_tag(func):
        get_args = _bound_getter(func)

        @functools.wraps(func)
        def decorator(*args, **kwargs):
            arguments = get_args(args, kwargs)
            tag, space = arguments[name], arguments[params].tag_space_size
            if not 0 <= tag < space:
                raise DomainError('tag {}={} outside [0, {})'.format(name, tag, space))
            return func(*args, **kwargs)
        return decorator
    return _check_tag


def check_otp(name='otp', params='params'):
    def _check_otp(func):
        get_args = _bound_getter(func)

        @functools.wraps(func)
        def decorator(*args, **kwargs):
            arguments = get_args(args, kwargs)
            otp, space = arguments[name], arguments[params].tag_space_size
            if not 0 <= otp.value < space:
                raise DomainError('otp value {} outside [0, {})'.format(otp.value, space))
            return func(*args, **kwargs)
        return decorator
    return _check_otp


def api_log(func):
    @functools.wraps(func)
    def decorator(self, *args, **kwargs):
        ret = func(self, *args, **kwargs)
        logger.info('{}, args={}, kwargs={}'.format(func.__name__, args, kwargs))
        return ret
    return decorator
