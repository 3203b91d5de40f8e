#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
The H1 family of Wegman and Carter:

    f_(q, r)(m) = ((m * q + r) mod p) mod |T|,    0 < q < p, 0 <= r < p

with p the smallest prime strictly greater than |M|. Its p(p - 1) members are
indexed by index = (q - 1) * p + r, so a candidate bitmap built on one machine
means the same thing on any other.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, RangeError
from ..tools.utils import is_prime, is_power_of_two
from .decorator import check_message

# (p - 1)^2 + (p - 1) must fit an int64 for the vectorised path
_MAX_VECTOR_PRIME = 3037000499


def smallest_prime_geq(n):
    """
    Smallest prime strictly greater than n.

    :param n: integer, 1 <= n < 2^32
    :return: prime
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n < FACONF.Family.MAX_PRIME_INPUT:
        raise RangeError('prime search input {} outside [1, 2^32)'.format(n))
    c = int(n) + 1
    while not is_prime(c):
        c += 1
    return c


@dataclass(frozen=True)
class HashFamilyParams:
    message_space_size: int
    tag_space_size: int
    prime_p: int

    def __post_init__(self):
        if self.message_space_size < 1:
            raise DomainError('message space size must be positive, got {}'.format(self.message_space_size))
        if not is_power_of_two(self.tag_space_size):
            raise DomainError('tag space size must be a power of two, got {}'.format(self.tag_space_size))
        if self.prime_p != smallest_prime_geq(self.message_space_size):
            raise DomainError('prime_p={} is not the smallest prime > {}'.format(self.prime_p, self.message_space_size))

    @classmethod
    def from_sizes(cls, message_space_size, tag_space_size):
        return cls(message_space_size, tag_space_size, smallest_prime_geq(message_space_size))

    @classmethod
    def from_bits(cls, msg_bits, tag_bits):
        return cls.from_sizes(1 << msg_bits, 1 << tag_bits)

    @property
    def family_size(self):
        return self.prime_p * (self.prime_p - 1)

    @property
    def false_matches(self):
        """H, the number of false matches in a fresh family"""
        return self.family_size - 1

    @property
    def key_bits(self):
        """Length in bits of the fixed key naming one family member"""
        return math.log2(self.family_size)

    @property
    def bitmap_bytes(self):
        return (self.family_size + 7) // 8

    @property
    def max_preimage(self):
        """Largest number of keys sending one message to one tag"""
        return (self.prime_p - 1) * -(-self.prime_p // self.tag_space_size)

    def to_dict(self):
        return {
            'message_space_size': self.message_space_size,
            'tag_space_size': self.tag_space_size,
            'prime_p': self.prime_p,
            'family_size': self.family_size,
        }


@dataclass(frozen=True)
class HashKey:
    q: int
    r: int

    def __post_init__(self):
        if self.q < 1 or self.r < 0:
            raise DomainError('invalid key (q={}, r={})'.format(self.q, self.r))


def _check_key(params, key):
    if not (0 < key.q < params.prime_p and 0 <= key.r < params.prime_p):
        raise DomainError('key (q={}, r={}) outside the family of p={}'.format(key.q, key.r, params.prime_p))


@check_message()
def evaluate(params, key, m):
    """
    Hash one message with one key, exact integer arithmetic.
    """
    _check_key(params, key)
    return ((m * key.q + key.r) % params.prime_p) % params.tag_space_size


def index_of(params, key):
    _check_key(params, key)
    return (key.q - 1) * params.prime_p + key.r


def key_of(params, index):
    if not 0 <= index < params.family_size:
        raise RangeError('key index {} outside [0, {})'.format(index, params.family_size))
    q, r = divmod(int(index), params.prime_p)
    return HashKey(q + 1, r)


def iter_index_chunks(size, chunk=FACONF.Candidates.CHUNK_BITS):
    for start in range(0, size, chunk):
        yield start, min(start + chunk, size)


@check_message()
def evaluate_indices(params, indices, m):
    """
    Vectorised evaluate over an array of family indices.

    :param indices: integer ndarray of family indices
    :return: int64 ndarray of tags, same shape as indices
    """
    p = params.prime_p
    if p > _MAX_VECTOR_PRIME:
        raise RangeError('p={} too large for vectorised evaluation'.format(p))
    indices = np.asarray(indices, dtype=np.int64)
    q = indices // p + 1
    r = indices % p
    return ((m * q + r) % p) % params.tag_space_size


@check_message()
def preimage_histogram(params, m):
    """
    Count, over every key of the family, how many send m to each tag.

    :return: dict tag -> count, summing to p(p - 1)
    """
    counts = np.zeros(params.tag_space_size, dtype=np.int64)
    for start, stop in iter_index_chunks(params.family_size):
        tags = evaluate_indices(params, np.arange(start, stop, dtype=np.int64), m)
        counts += np.bincount(tags, minlength=params.tag_space_size)
    return {t: int(c) for t, c in enumerate(counts)}
