#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Eve's partial knowledge of the one-time pad.

In every round Eve learns a set of OTP values that have probability 0. The set
is redrawn independently each round, uniformly among the values other than the
true pad, so the true pad is never excluded.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, InvalidKnowledgeError
from ..tools.utils import is_power_of_two, round_half_even


@dataclass(frozen=True)
class KnowledgeModel:
    tag_space_size: int
    excluded_count: int
    mode: str = FACONF.Knowledge.Mode.FIXED_COUNT
    excluded_fraction: Optional[float] = None

    def __post_init__(self):
        if not is_power_of_two(self.tag_space_size):
            raise DomainError('tag space size must be a power of two, got {}'.format(self.tag_space_size))
        if self.excluded_count < 0:
            raise InvalidKnowledgeError('excluded count must be non-negative, got {}'.format(self.excluded_count))
        if self.excluded_count >= self.tag_space_size:
            raise InvalidKnowledgeError('{} excluded values leave no possible OTP in a tag space of {}'.format(
                self.excluded_count, self.tag_space_size))

    @classmethod
    def fixed_fraction(cls, fraction, tag_space_size):
        """
        Exclude round_half_even(fraction * |T|) values per round.

        The fraction must stay below 1 - 1/(2|T|); from there on the rounding
        excludes every value (0.997 at |T| = 128 already does).
        """
        limit = 1 - 1 / (2 * tag_space_size) if tag_space_size > 0 else 1
        if not 0 <= fraction < 1 or round_half_even(fraction * tag_space_size) >= tag_space_size > 0:
            raise InvalidKnowledgeError('excluded fraction must lie in [0, {}) for a tag space of {}, got {}'.format(
                limit, tag_space_size, fraction))
        return cls(tag_space_size, round_half_even(fraction * tag_space_size),
                   FACONF.Knowledge.Mode.FIXED_FRACTION, float(fraction))

    @classmethod
    def fixed_count(cls, count, tag_space_size):
        return cls(tag_space_size, int(count), FACONF.Knowledge.Mode.FIXED_COUNT, None)

    @classmethod
    def from_ratio(cls, ratio, tag_space_size):
        """
        Build the model from the surviving ratio h/H: |T_i| = round(ratio * |T|), at least 1.
        """
        if not 0 < ratio <= 1:
            raise InvalidKnowledgeError('ratio h/H must lie in (0, 1], got {}'.format(ratio))
        possible = min(tag_space_size, max(1, round_half_even(ratio * tag_space_size)))
        return cls.fixed_count(tag_space_size - possible, tag_space_size)

    @property
    def possible_count(self):
        return self.tag_space_size - self.excluded_count

    @property
    def ratio(self):
        """Expected h/H of one round"""
        return self.possible_count / self.tag_space_size

    def draw(self, rng, true_otp):
        """
        Draw one round of knowledge around the true pad value.

        :param rng: numpy Generator
        :param true_otp: the pad actually used this round
        :return: RoundKnowledge
        """
        others = rng.choice(self.tag_space_size - 1, size=self.excluded_count, replace=False)
        others = np.asarray(others, dtype=np.int64)
        others[others >= true_otp] += 1
        return RoundKnowledge(self.tag_space_size, frozenset(int(v) for v in others))

    def to_dict(self):
        return {
            'mode': self.mode,
            'excluded_fraction': self.excluded_fraction,
            'excluded_count': self.excluded_count,
            'possible_count': self.possible_count,
            'ratio': self.ratio,
            'rounding': FACONF.Knowledge.ROUNDING,
        }


@dataclass(frozen=True)
class RoundKnowledge:
    tag_space_size: int
    excluded: frozenset

    @property
    def possible_otps(self):
        return [k for k in range(self.tag_space_size) if k not in self.excluded]


def possible_tags(observed_encrypted_tag, round_knowledge):
    """
    Tags f(m) could take given the encrypted tag and the round's excluded pads.

    :return: frozenset of tag values, always holding the true unencrypted tag
    """
    if not 0 <= observed_encrypted_tag < round_knowledge.tag_space_size:
        raise DomainError('encrypted tag {} outside [0, {})'.format(
            observed_encrypted_tag, round_knowledge.tag_space_size))
    otps = round_knowledge.possible_otps
    if not otps:
        raise InvalidKnowledgeError('every OTP value is excluded')
    return frozenset(observed_encrypted_tag ^ k for k in otps)
