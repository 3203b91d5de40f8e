#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Fixed secret hash function with a one-time pad on the tag: t = f(m) XOR K.
"""

from dataclasses import dataclass

from ..core.config.fa_code import DomainError
from .decorator import check_otp
from .hash_family import evaluate


@dataclass(frozen=True)
class OtpKey:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise DomainError('otp value must be non-negative, got {}'.format(self.value))


@dataclass(frozen=True)
class AuthenticatedMessage:
    message: int
    tag: int


@check_otp()
def make_tag(params, key, m, otp):
    return evaluate(params, key, m) ^ otp.value


def verify(params, key, m, tag, otp):
    """
    Accept iff the tag matches. A tag outside the tag space is rejected, not raised.
    """
    return make_tag(params, key, m, otp) == tag


def authenticate(params, key, m, otp):
    return AuthenticatedMessage(m, make_tag(params, key, m, otp))
