#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Security-loss ledger of QKD rounds authenticated with a fixed hash function.

Round n produces a 2^(n-1) (eps1 + eps2)-perfect key, and the authentication
of round n is ((2^(n-1) - 1) eps1 + 2^(n-1) eps2)-ideal. Coefficients are exact
integers; only the final loss is a float.
"""

import math
from dataclasses import dataclass
from typing import List

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, NoFeasibleRoundError, UnboundedRoundsError
from ..version import __version__


@dataclass(frozen=True)
class EpsilonParams:
    eps1: float
    eps2: float

    def __post_init__(self):
        for name in ('eps1', 'eps2'):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise DomainError('{} must be finite and non-negative, got {}'.format(name, v))


@dataclass(frozen=True)
class RoundLedgerEntry:
    n: int
    a_n: int
    b_n: int
    key_perfection: int
    loss: float
    saturated: bool = False


def _check_round(n):
    if not isinstance(n, int) or n < 1:
        raise DomainError('round must be an integer >= 1, got {}'.format(n))


def key_perfection(n):
    """Coefficient c with the round-n key (c (eps1 + eps2))-perfect"""
    _check_round(n)
    return 1 << (n - 1)


def _loss(a, b, eps):
    try:
        loss = a * eps.eps1 + b * eps.eps2
    except OverflowError:
        return math.inf, True
    return loss, math.isinf(loss)


def auth_ideality(n, eps):
    """
    :return: (loss, a_n, b_n) with loss = a_n eps1 + b_n eps2
    """
    _check_round(n)
    b = key_perfection(n)
    a = b - 1
    loss, _ = _loss(a, b, eps)
    return loss, a, b


def ledger_entry(n, eps):
    _check_round(n)
    b = key_perfection(n)
    loss, saturated = _loss(b - 1, b, eps)
    return RoundLedgerEntry(n, b - 1, b, b, loss, saturated)


def ledger(n_max, eps):
    """RoundLedger rows for rounds 1..n_max"""
    _check_round(n_max)
    return [ledger_entry(n, eps) for n in range(1, n_max + 1)]


def max_rounds_within_budget(eps, budget):
    """
    Largest n with auth_ideality(n) <= budget, the key-refresh interval.
    """
    if budget <= eps.eps2:
        raise NoFeasibleRoundError('budget {} does not exceed eps2={}'.format(budget, eps.eps2))
    total = eps.eps1 + eps.eps2
    if total == 0:
        raise UnboundedRoundsError('eps1 = eps2 = 0')
    # 2^(n-1) (eps1 + eps2) - eps1 <= budget
    n = max(1, int(math.floor(math.log2((budget + eps.eps1) / total))) + 1)
    while auth_ideality(n + 1, eps)[0] <= budget:
        n += 1
    while n > 1 and auth_ideality(n, eps)[0] > budget:
        n -= 1
    return n


@dataclass(frozen=True)
class RefreshPlan:
    interval: int
    key_bits: float
    bits_per_round: float


def refresh_plan(eps, budget, key_bits):
    """
    Change the fixed key every `interval` rounds; the fixed key then costs
    key_bits / interval bits of secret key per authentication round.
    """
    if key_bits <= 0:
        raise DomainError('key_bits must be positive, got {}'.format(key_bits))
    interval = max_rounds_within_budget(eps, budget)
    return RefreshPlan(interval, key_bits, key_bits / interval)


@dataclass
class RoundLedger:
    eps: EpsilonParams
    entries: List[RoundLedgerEntry]

    @classmethod
    def build(cls, n_max, eps):
        return cls(eps, ledger(n_max, eps))

    def to_rows(self):
        return [(e.n, e.a_n, e.b_n, e.key_perfection, e.loss) for e in self.entries]

    def to_dict(self):
        return {
            'version': __version__,
            'eps1': self.eps.eps1,
            'eps2': self.eps.eps2,
            'columns': list(FACONF.Csv.COMPOSE),
            'rows': [list(r) for r in self.to_rows()],
            'saturated': [e.n for e in self.entries if e.saturated],
        }
