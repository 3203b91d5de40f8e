#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Parameter sweeps over the message-space size: many seeded attacks per point,
aggregated, with the analytic lifetimes of the same family laid alongside.
"""

import math
from dataclasses import dataclass, field, fields, asdict
from typing import List, Optional, Tuple

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, FixAuthError, InfeasiblePointError
from ..core.utils.export import read_config
from ..core.utils.log import logger
from ..core.utils.seeds import derive_overlay_seed, derive_seed
from ..tools.pool import WorkerPool
from ..version import __version__
from .adversary import AttackConfig, run_attack
from .analytic import (ModelParams, chebyshev_bound_sqrt, expected_lifetime, family_lifetime,
                       independent_model_simulate)
from .hash_family import HashFamilyParams
from .knowledge import KnowledgeModel

SEED_DERIVATION = ('trial seed = SeedSequence(seed, spawn_key=(point_index, trial_index))'
                   '.generate_state(1, uint64)[0]; overlay seed = SeedSequence((seed, 0x6f766c79),'
                   ' spawn_key=(point_index,)).generate_state(1, uint64)[0]')


@dataclass
class SweepConfig:
    tag_bits: int = FACONF.Family.DEFAULT_TAG_BITS
    msg_bits: Tuple[int, ...] = FACONF.Family.DEFAULT_MSG_BITS
    knowledge: float = FACONF.Knowledge.DEFAULT_FRACTION
    ratio: Optional[float] = None
    stop: str = FACONF.Stop.FORGE
    forge_only: bool = False
    trials: int = FACONF.Sweep.DEFAULT_TRIALS
    seed: int = FACONF.Sweep.DEFAULT_SEED
    budget: int = FACONF.Attack.DEFAULT_BUDGET
    memory_ceiling: int = FACONF.Candidates.MEMORY_CEILING

    def __post_init__(self):
        self.msg_bits = tuple(int(b) for b in self.msg_bits)
        if self.tag_bits < 0 or any(b < 0 for b in self.msg_bits):
            raise DomainError('bit sizes must be non-negative')
        if self.trials < 1:
            raise DomainError('trials must be at least 1, got {}'.format(self.trials))
        if self.stop not in (FACONF.Stop.IDENTIFY, FACONF.Stop.FORGE):
            raise DomainError('unknown stop condition {!r}'.format(self.stop))

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise DomainError('unknown sweep config keys: {}'.format(', '.join(sorted(unknown))))
        return cls(**data)

    @classmethod
    def from_file(cls, path, **overrides):
        """Config file values, then every override that is not None"""
        data = read_config(path, {f.name for f in fields(cls)})
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_dict(data)

    def knowledge_model(self):
        size = 1 << self.tag_bits
        if self.ratio is not None:
            return KnowledgeModel.from_ratio(self.ratio, size)
        return KnowledgeModel.fixed_fraction(self.knowledge, size)

    def to_dict(self):
        d = asdict(self)
        d['msg_bits'] = list(self.msg_bits)
        return d


@dataclass(frozen=True)
class TrialSummary:
    lifetime: int
    realized_ratio: float
    exhausted: bool


def _run_trial(config):
    transcript = run_attack(config)
    return TrialSummary(transcript.lifetime, transcript.realized_ratio,
                        transcript.outcome.kind == FACONF.Outcome.EXHAUSTED)


@dataclass
class LifetimeAggregate:
    """Commutative monoid over trial summaries; integer sums keep it order independent"""
    count: int = 0
    total: int = 0
    total_sq: int = 0
    exhausted: int = 0
    ratios: List[float] = field(default_factory=list)

    @classmethod
    def of(cls, summary):
        return cls(1, summary.lifetime, summary.lifetime ** 2, int(summary.exhausted), [summary.realized_ratio])

    def merge(self, other):
        return LifetimeAggregate(self.count + other.count, self.total + other.total,
                                 self.total_sq + other.total_sq, self.exhausted + other.exhausted,
                                 self.ratios + other.ratios)

    @property
    def mean(self):
        return self.total / self.count

    @property
    def stderr(self):
        if self.count < 2:
            return 0.0
        var = (self.count * self.total_sq - self.total ** 2) / (self.count * (self.count - 1))
        return math.sqrt(var / self.count)

    @property
    def realized_ratio(self):
        return math.fsum(self.ratios) / len(self.ratios)


@dataclass
class SweepPoint:
    msg_bits: int
    tag_bits: int
    family: dict
    key_bits: float
    trials: int
    mean_lifetime: Optional[float] = None
    stderr: Optional[float] = None
    realized_ratio: Optional[float] = None
    exhausted: int = 0
    continuous: Optional[int] = None
    recursive: Optional[float] = None
    recursive_source: Optional[str] = None
    cheb_sqrt: Optional[float] = None
    skipped: Optional[str] = None


@dataclass(frozen=True)
class Overlay:
    continuous: Optional[int] = None
    recursive: Optional[float] = None
    recursive_source: Optional[str] = None
    cheb_sqrt: Optional[float] = None


def overlays(params, knowledge, trials=1, seed=0, ceiling=FACONF.Analytic.RECURSION_CEILING):
    """
    Analytic lifetimes of a fresh family: n_H continuous, the hypergeometric n_H and cheb_sqrt.

    The hypergeometric n_H comes from the recursion up to the ceiling and from
    independent_model_simulate(H, h, H, trials, seed) above it.

    :return: Overlay
    """
    H = params.false_matches
    if knowledge.ratio >= 1:
        return Overlay()
    model = ModelParams.from_ratio(H, knowledge.ratio)
    if model.h >= H:
        return Overlay()
    continuous = family_lifetime(H, model.ratio)
    bound = chebyshev_bound_sqrt(H, model.h, H) if H >= 2 else None
    if H <= ceiling:
        recursive = float(expected_lifetime(H, model.h, H, ceiling=ceiling)[H])
        source = FACONF.Sweep.SOURCE_RECURSION
    else:
        recursive = independent_model_simulate(H, model.h, H, trials, seed).mean
        source = FACONF.Sweep.SOURCE_MONTE_CARLO
    return Overlay(continuous, recursive, source, bound)


@dataclass
class SweepResult:
    config: SweepConfig
    points: List[SweepPoint]

    def to_rows(self):
        c = self.config
        label = c.ratio if c.ratio is not None else c.knowledge
        return [(p.msg_bits, p.tag_bits, label, c.stop, p.trials, p.mean_lifetime, p.stderr,
                 p.realized_ratio, p.continuous, p.cheb_sqrt)
                for p in self.points if p.skipped is None]

    def to_dict(self):
        return {
            'version': __version__,
            'config': self.config.to_dict(),
            'seed_derivation': SEED_DERIVATION,
            'columns': list(FACONF.Csv.SWEEP),
            'points': [asdict(p) for p in self.points],
        }


def sweep(config, workers=None):
    """
    Run config.trials attacks at every message size and aggregate them.

    Trial i of point j uses derive_seed(config.seed, j, i), the Monte Carlo overlay of
    point j derive_overlay_seed(config.seed, j). Points whose bitmap exceeds
    config.memory_ceiling are skipped with the reason recorded.

    :return: SweepResult
    """
    knowledge = config.knowledge_model()
    tag_size = 1 << config.tag_bits
    points = []
    with WorkerPool(workers) as pool:
        for point_index, msg_bits in enumerate(config.msg_bits):
            params = HashFamilyParams.from_sizes(1 << msg_bits, tag_size)
            point = SweepPoint(msg_bits, config.tag_bits, params.to_dict(), params.key_bits, config.trials)
            try:
                if params.bitmap_bytes > config.memory_ceiling:
                    raise InfeasiblePointError('bitmap of {} bytes exceeds the ceiling of {}'.format(
                        params.bitmap_bytes, config.memory_ceiling))
                overlay = overlays(params, knowledge, config.trials, derive_overlay_seed(config.seed, point_index))
                point.continuous, point.recursive = overlay.continuous, overlay.recursive
                point.recursive_source, point.cheb_sqrt = overlay.recursive_source, overlay.cheb_sqrt
            except FixAuthError as e:
                logger.warning('skip msg_bits={}: {}'.format(msg_bits, e))
                point.skipped = str(e)
                points.append(point)
                continue
            logger.info('sweep point msg_bits={}, p={}, trials={}'.format(msg_bits, params.prime_p, config.trials))
            trials = [AttackConfig(params, knowledge, config.stop, config.budget,
                                   derive_seed(config.seed, point_index, i), forge_only=config.forge_only)
                      for i in range(config.trials)]
            agg = LifetimeAggregate()
            for summary in pool.map(_run_trial, trials):
                agg = agg.merge(LifetimeAggregate.of(summary))
            point.mean_lifetime, point.stderr = agg.mean, agg.stderr
            point.realized_ratio, point.exhausted = agg.realized_ratio, agg.exhausted
            points.append(point)
    return SweepResult(config, points)
