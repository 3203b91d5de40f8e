#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Eve's covert attack.

Each round Eve sees (m, f(m) XOR K) and a set of pad values known to be
impossible. She turns that into a set of possible tags for f(m), drops every
hash function that sends m outside that set, and stays passive until one of the
stop conditions holds:

    identify  a single candidate remains
    forge     all survivors agree on her target message m_E (forgery_ready) and
              on Alice's message of the round, which gives away the pad (recover_otp)
"""

import json
import math
from dataclasses import dataclass, field, asdict
from typing import Callable, List, Optional

import numpy as np

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, InconsistentCandidatesError
from ..core.utils.log import logger
from ..core.utils.seeds import make_rng
from ..version import __version__
from .auth import OtpKey, make_tag
from .candidates import CandidateSet
from .decorator import check_message, check_tag
from .hash_family import HashFamilyParams, key_of
from .knowledge import KnowledgeModel, possible_tags


def eliminate(candidates, params, m, tag_set):
    """
    Candidates whose hash of m lies in tag_set.

    :raise InconsistentCandidatesError: nothing survives
    """
    if candidates.count == 0:
        raise InconsistentCandidatesError('elimination needs a nonempty candidate set')
    if candidates.params != params:
        raise DomainError('candidate set belongs to another family')
    return candidates.eliminate(m, tag_set)


@check_message(name='m_e')
def forgery_ready(candidates, params, m_e):
    """
    :return: t_E when every survivor maps m_e to the same tag, else None
    """
    return candidates.common_tag(m_e)


@check_tag(name='observed_encrypted_tag')
@check_message(name='m_alice')
def recover_otp(candidates, params, m_alice, observed_encrypted_tag):
    """
    :return: OtpKey when every survivor maps m_alice to one tag t (K = observed XOR t), else None
    """
    t = candidates.common_tag(m_alice)
    if t is None:
        return None
    return OtpKey(observed_encrypted_tag ^ t)


@dataclass
class AttackConfig:
    params: HashFamilyParams
    knowledge: KnowledgeModel
    stop: str = FACONF.Stop.FORGE
    budget: int = FACONF.Attack.DEFAULT_BUDGET
    seed: int = 0
    target_message: Optional[int] = None
    forge_only: bool = False
    true_key_index: Optional[int] = None

    def __post_init__(self):
        if self.stop not in (FACONF.Stop.IDENTIFY, FACONF.Stop.FORGE):
            raise DomainError('unknown stop condition {!r}'.format(self.stop))
        if self.budget < 1:
            raise DomainError('round budget must be at least 1, got {}'.format(self.budget))
        if self.knowledge.tag_space_size != self.params.tag_space_size:
            raise DomainError('knowledge model and family disagree on the tag space size')
        if self.target_message is not None and not 0 <= self.target_message < self.params.message_space_size:
            raise DomainError('target message {} outside the message space'.format(self.target_message))
        if self.true_key_index is not None and not 0 <= self.true_key_index < self.params.family_size:
            raise DomainError('true key index {} outside the family'.format(self.true_key_index))

    def to_dict(self):
        return {
            'family': self.params.to_dict(),
            'knowledge': self.knowledge.to_dict(),
            'stop': self.stop,
            'forge_only': self.forge_only,
            'budget': self.budget,
            'seed': self.seed,
            'target_message': self.target_message,
        }


@dataclass
class RoundRecord:
    round: int
    message: int
    encrypted_tag: int
    possible_tags: int
    survivors: int
    realized_ratio: Optional[float]


@dataclass
class Outcome:
    kind: str
    round: int
    forged_tag: Optional[int] = None
    recovered_otp: Optional[int] = None

    def to_dict(self):
        d = {'kind': self.kind, 'round': self.round}
        if self.kind == FACONF.Outcome.FORGED:
            d['forged_tag'] = self.forged_tag
            d['recovered_otp'] = self.recovered_otp
        return d


@dataclass
class AttackTranscript:
    config: AttackConfig
    true_key_index: int
    target_message: int
    rounds: List[RoundRecord] = field(default_factory=list)
    outcome: Optional[Outcome] = None

    @property
    def lifetime(self):
        return self.outcome.round

    @property
    def realized_ratio(self):
        """False-match survival fraction of the first round, measured on the full family"""
        return self.rounds[0].realized_ratio if self.rounds else None

    def to_dict(self):
        key = key_of(self.config.params, self.true_key_index)
        return {
            'version': __version__,
            'config': self.config.to_dict(),
            'true_key': {'index': self.true_key_index, 'q': key.q, 'r': key.r},
            'target_message': self.target_message,
            'rounds': [asdict(r) for r in self.rounds],
            'outcome': self.outcome.to_dict() if self.outcome is not None else None,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_rows(self):
        return [tuple(getattr(r, c) for c in FACONF.Csv.TRANSCRIPT) for r in self.rounds]


def run_attack(config, observer: Optional[Callable] = None):
    """
    Simulate honest rounds until the stop condition or the budget.

    Every round draws a uniform message (repeats allowed) and a fresh uniform pad,
    then Eve's knowledge for that round. The random stream does not depend on the
    stop condition, so identify and forge runs with one seed see the same rounds.

    :param config: AttackConfig
    :param observer: optional callable(round, candidates, true_key_index) called after each elimination
    :return: AttackTranscript
    """
    params, knowledge = config.params, config.knowledge
    rng = make_rng(config.seed)
    true_index = config.true_key_index
    if true_index is None:
        true_index = int(rng.integers(params.family_size))
    key = key_of(params, true_index)
    m_e = config.target_message
    if m_e is None:
        m_e = int(rng.integers(params.message_space_size))
    transcript = AttackTranscript(config, true_index, m_e)
    logger.info('attack start: p={}, |T|={}, stop={}, seed={}, excluded={}'.format(
        params.prime_p, params.tag_space_size, config.stop, config.seed, knowledge.excluded_count))

    candidates = CandidateSet.full(params)
    for n in range(1, config.budget + 1):
        m = int(rng.integers(params.message_space_size))
        otp = OtpKey(int(rng.integers(params.tag_space_size)))
        t = make_tag(params, key, m, otp)
        tags = possible_tags(t, knowledge.draw(rng, otp.value))

        before = candidates.count
        candidates = eliminate(candidates, params, m, tags)
        ratio = (candidates.count - 1) / (before - 1) if before > 1 else None
        transcript.rounds.append(RoundRecord(n, m, t, len(tags), candidates.count, ratio))
        logger.verbose('round {}: m={}, |T_i|={}, survivors={}'.format(n, m, len(tags), candidates.count))
        if observer is not None:
            observer(n, candidates, true_index)

        if config.stop == FACONF.Stop.IDENTIFY:
            if candidates.count == 1:
                transcript.outcome = Outcome(FACONF.Outcome.IDENTIFIED, n)
                break
        else:
            t_e = forgery_ready(candidates, params, m_e)
            if t_e is None:
                continue
            if config.forge_only:
                transcript.outcome = Outcome(FACONF.Outcome.FORGED, n, t_e, None)
                break
            recovered = recover_otp(candidates, params, m, t)
            if recovered is not None:
                transcript.outcome = Outcome(FACONF.Outcome.FORGED, n, t_e, recovered.value)
                break
    else:
        transcript.outcome = Outcome(FACONF.Outcome.EXHAUSTED, config.budget)
    logger.info('attack stop: {} at round {}'.format(transcript.outcome.kind, transcript.outcome.round))
    return transcript


@dataclass
class GuessingConfig:
    tag_space_size: int
    seed: int = 0
    budget: int = FACONF.Guess.DEFAULT_BUDGET
    trials: int = FACONF.Guess.DEFAULT_TRIALS

    def __post_init__(self):
        if self.tag_space_size < 1:
            raise DomainError('tag space size must be positive, got {}'.format(self.tag_space_size))
        if self.budget < 1 or self.trials < 1:
            raise DomainError('budget and trials must be at least 1')


@dataclass
class GuessingResult:
    config: GuessingConfig
    rounds: List[int]
    exhausted: int

    @property
    def mean(self):
        return math.fsum(self.rounds) / len(self.rounds)

    @property
    def stderr(self):
        n = len(self.rounds)
        if n < 2:
            return 0.0
        return float(np.std(self.rounds, ddof=1)) / math.sqrt(n)

    def to_dict(self):
        return {
            'version': __version__,
            'tag_space_size': self.config.tag_space_size,
            'seed': self.config.seed,
            'budget': self.config.budget,
            'trials': self.config.trials,
            'mean': self.mean,
            'stderr': self.stderr,
            'exhausted': self.exhausted,
            'expected': self.config.tag_space_size,
        }


def run_guessing_attack(config):
    """
    Eve guesses the encrypted tag uniformly every round; each guess hits with
    probability 1/|T|. Independent trials run side by side, a block of rounds at a time.

    :return: GuessingResult with the stopping round of every trial
    """
    rng = make_rng(config.seed)
    size = config.tag_space_size
    stops = np.full(config.trials, config.budget, dtype=np.int64)
    active = np.arange(config.trials)
    offset = 0
    while active.size and offset < config.budget:
        block = min(FACONF.Guess.BLOCK_ROUNDS, config.budget - offset, max(1, (1 << 22) // active.size))
        guesses = rng.integers(size, size=(active.size, block), dtype=np.int32)
        tags = rng.integers(size, size=(active.size, block), dtype=np.int32)
        hit = guesses == tags
        done = hit.any(axis=1)
        stops[active[done]] = offset + hit[done].argmax(axis=1) + 1
        active = active[~done]
        offset += block
    return GuessingResult(config, [int(s) for s in stops], int(active.size))
