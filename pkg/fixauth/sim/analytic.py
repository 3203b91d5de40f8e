#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Lifetime models of the attack under the independent-round assumption.

H is the number of false matches of a fresh family and h the number of them
that survive one round, so h/H is the surviving fraction per round. n_k is the
expected number of rounds until no false match is left when k remain.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy.special import gammaln
from scipy.stats import hypergeom

from ..core.config.fa_config import FACONF
from ..core.config.fa_code import DomainError, DivergenceError, DegenerateRecursionError
from ..core.utils.log import logger
from ..core.utils.seeds import make_rng
from ..version import __version__

# below this H the pmf is computed with exact integers
_EXACT_PMF_LIMIT = 5000


@dataclass(frozen=True)
class ModelParams:
    H: int
    h: int

    def __post_init__(self):
        if not 0 < self.h <= self.H:
            raise DomainError('need 0 < h <= H, got h={}, H={}'.format(self.h, self.H))

    @classmethod
    def from_ratio(cls, H, ratio):
        return cls(int(H), max(1, int(round(ratio * H))))

    @property
    def ratio(self):
        return self.h / self.H


def _check_ratio(ratio):
    if ratio >= 1:
        raise DivergenceError('h/H={} >= 1, the lifetime diverges'.format(ratio))
    if ratio <= 0:
        raise DomainError('h/H must be positive, got {}'.format(ratio))


def guessing_lifetime(tag_space_size):
    """Expected rounds until a uniform tag guess succeeds"""
    if tag_space_size < 1:
        raise DomainError('tag space size must be positive, got {}'.format(tag_space_size))
    return tag_space_size


def information_gain_bits(ratio):
    """Eve's min-entropy gain on the hash function per round, -log2(h/H)"""
    _check_ratio(ratio)
    return -math.log2(ratio)


def continuous_lifetime(k, ratio):
    """
    Smallest integer n with k * ratio^n < 1 (0 when k = 0).

    This is floor(log k / -log ratio) + 1, which keeps the strict inequality when
    log k / -log ratio is an exact integer.
    """
    if k < 0:
        raise DomainError('k must be non-negative, got {}'.format(k))
    _check_ratio(ratio)
    if k == 0:
        return 0
    n = max(1, int(math.floor(math.log(k) / -math.log(ratio))) + 1)
    # settle float rounding at the boundary on the defining inequality itself
    while k * ratio ** n >= 1:
        n += 1
    while n > 1 and k * ratio ** (n - 1) < 1:
        n -= 1
    return n


def family_lifetime(H, ratio):
    """n_H of the continuous model: key length over information gained per round"""
    return continuous_lifetime(H, ratio)


def _check_pmf_args(j, k, h, H):
    if not (0 <= k <= H and 0 <= h <= H and 0 <= j <= min(k, h)):
        raise DomainError('invalid hypergeometric arguments j={}, k={}, h={}, H={}'.format(j, k, h, H))


def hypergeom_pmf(j, k, h, H):
    """
    P(X_i = j | X_{i-1} = k) = C(k, j) C(H - k, h - j) / C(H, h)
    """
    _check_pmf_args(j, k, h, H)
    if h - j > H - k:
        return 0.0
    if H <= _EXACT_PMF_LIMIT:
        return math.comb(k, j) * math.comb(H - k, h - j) / math.comb(H, h)
    return float(hypergeom.pmf(j, H, k, h))


def hypergeom_mean_var(k, h, H, bound=False):
    """
    Mean and variance of X_i given X_{i-1} = k.

    With bound=True the variance is its upper bound k (h/H)(1 - h/H), the form the
    Chebyshev bounds are stated in; k may then exceed H.
    """
    ratio = h / H
    mean = k * ratio
    if bound:
        if k < 0 or not 0 <= h <= H:
            raise DomainError('invalid hypergeometric arguments k={}, h={}, H={}'.format(k, h, H))
        return mean, mean * (1 - ratio)
    _check_pmf_args(0, k, h, H)
    var = mean * (1 - ratio) * ((H - k) / (H - 1) if H > 1 else 0.0)
    return mean, var


def _log_falling(a, count):
    """Prefix sums of log(a - i), i = 0..count-1; -inf once a - i <= 0"""
    terms = a - np.arange(count, dtype=np.float64)
    with np.errstate(divide='ignore'):
        logs = np.where(terms > 0, np.log(np.where(terms > 0, terms, 1.0)), -np.inf)
    return np.concatenate(([0.0], np.cumsum(logs)))


def expected_lifetime(k_max, h, H, ceiling=FACONF.Analytic.RECURSION_CEILING):
    """
    Expected lifetimes n_0..n_k_max of the hypergeometric recursion

        n_0 = 0,  n_k = (1 + sum_{j<k} p_jk n_j) / (1 - p_kk)

    The transition probabilities are built from falling factorials in log space,
    and every inner sum is compensated (math.fsum).

    :return: float64 ndarray of length k_max + 1
    """
    if not 0 <= k_max <= ceiling:
        raise DomainError('k_max={} outside [0, {}]'.format(k_max, ceiling))
    if k_max > H:
        raise DomainError('k_max={} exceeds H={}'.format(k_max, H))
    ModelParams(H, h)
    if h >= H:
        raise DivergenceError('h={} = H, nothing is ever eliminated'.format(h))

    lf = gammaln(np.arange(k_max + 1, dtype=np.float64) + 1)
    a = _log_falling(h, k_max)
    b = _log_falling(H - h, k_max)
    d = _log_falling(H, k_max)
    n = np.zeros(k_max + 1, dtype=np.float64)
    for k in range(1, k_max + 1):
        j = np.arange(k + 1)
        p = np.exp(lf[k] - lf[j] - lf[k - j] + a[j] + b[k - j] - d[k])
        denom = 1.0 - p[k]
        if denom <= FACONF.Analytic.DEGENERATE_TOL:
            raise DegenerateRecursionError(k)
        n[k] = (1.0 + math.fsum(p[:k] * n[:k])) / denom
        if k % 1000 == 0:
            logger.debug('recursion at k={}: n_k={}'.format(k, n[k]))
    return n


def chebyshev_bound(k, h, H, s):
    """
    Upper bound on n_k obtained by splitting the recursion at s with the one-sided
    Chebyshev inequality; valid for k * h/H < s < k.
    """
    ratio = h / H
    _check_ratio(ratio)
    if k < 2:
        raise DomainError('the bound needs k >= 2, got {}'.format(k))
    mean, var = hypergeom_mean_var(k, h, H, bound=True)
    if not mean < s < k:
        raise DomainError('s={} outside ({}, {})'.format(s, mean, k))
    spread = 1 + var / (s - mean) ** 2
    return 1 / (1 - ratio) + spread * math.log(k) / -math.log(s / k)


def chebyshev_bound_sqrt(k, h, H):
    """chebyshev_bound at s = k * sqrt(h/H), in closed form"""
    ratio = h / H
    _check_ratio(ratio)
    if k < 2:
        raise DomainError('the bound needs k >= 2, got {}'.format(k))
    root = math.sqrt(ratio)
    spread = 1 + (1 + root) / (k * (1 - root))
    return 1 / (1 - ratio) + spread * 2 * math.log(k) / -math.log(ratio)


@dataclass
class SimulationSummary:
    H: int
    h: int
    k0: int
    trials: int
    seed: int
    mean: float
    stderr: float
    distribution: List[int]

    def to_dict(self):
        return {
            'H': self.H, 'h': self.h, 'k0': self.k0, 'trials': self.trials, 'seed': self.seed,
            'mean': self.mean, 'stderr': self.stderr, 'distribution': self.distribution,
        }


def independent_model_simulate(H, h, k0, trials, seed):
    """
    Monte Carlo of the independent-round model: X_i given X_{i-1} is hypergeometric
    (h draws out of H, X_{i-1} of them still false matches), until X = 0.

    :return: SimulationSummary; distribution[n] counts trials stopping after n rounds
    """
    if trials < 1:
        raise DomainError('trials must be at least 1, got {}'.format(trials))
    if not 0 <= k0 <= H:
        raise DomainError('k0={} outside [0, {}]'.format(k0, H))
    ModelParams(H, h)
    if h >= H and k0 > 0:
        raise DivergenceError('h={} = H, the walk never reaches 0'.format(h))
    rng = make_rng(seed)
    x = np.full(trials, k0, dtype=np.int64)
    steps = np.zeros(trials, dtype=np.int64)
    active = np.flatnonzero(x > 0)
    while active.size:
        xa = x[active]
        x[active] = rng.hypergeometric(xa, H - xa, h)
        steps[active] += 1
        active = active[x[active] > 0]
    mean = float(steps.mean())
    stderr = float(steps.std(ddof=1)) / math.sqrt(trials) if trials > 1 else 0.0
    return SimulationSummary(H, h, k0, trials, seed, mean, stderr, [int(c) for c in np.bincount(steps)])


@dataclass
class LifetimeRow:
    k: int
    continuous: int
    recursive: Optional[float]
    cheb_s: float
    cheb_sqrt: float


@dataclass
class LifetimeTable:
    H: int
    h: int
    s_factor: float
    ceiling: int
    rows: List[LifetimeRow] = field(default_factory=list)

    @property
    def ratio(self):
        return self.h / self.H

    def to_rows(self):
        return [(r.k, r.continuous, r.recursive, r.cheb_s, r.cheb_sqrt) for r in self.rows]

    def to_dict(self):
        return {
            'version': __version__,
            'provenance': {
                'H': self.H, 'h': self.h, 'ratio': self.ratio, 's_factor': self.s_factor,
                'recursion_ceiling': self.ceiling, 'degenerate_tol': FACONF.Analytic.DEGENERATE_TOL,
                'information_gain_bits': information_gain_bits(self.ratio),
                'family_lifetime': family_lifetime(self.H, self.ratio),
            },
            'columns': list(FACONF.Csv.ANALYTIC),
            'rows': [list(r) for r in self.to_rows()],
        }


def lifetime_table(k_max, h, H, s_factor=None, ceiling=FACONF.Analytic.RECURSION_CEILING):
    """
    Continuous, recursive and both Chebyshev columns for k = 0..k_max.

    The Chebyshev columns need k >= 2; row 1 carries the induction base 1/(1 - h/H)
    and row 0 is all zeros. The recursive column stops at the ceiling (None beyond).

    :param s_factor: split point s = k * s_factor for cheb_s, default (1 + h/H) / 2
    """
    ModelParams(H, h)
    ratio = h / H
    _check_ratio(ratio)
    if s_factor is None:
        s_factor = (1 + ratio) / 2
    if not ratio < s_factor < 1:
        raise DomainError('s_factor={} outside ({}, 1)'.format(s_factor, ratio))
    recursive = expected_lifetime(min(k_max, ceiling, H), h, H, ceiling=ceiling)
    table = LifetimeTable(H, h, s_factor, ceiling)
    base = 1 / (1 - ratio)
    for k in range(k_max + 1):
        rec = float(recursive[k]) if k < len(recursive) else None
        if k == 0:
            row = LifetimeRow(0, 0, 0.0, 0.0, 0.0)
        elif k == 1:
            row = LifetimeRow(1, continuous_lifetime(1, ratio), rec, base, base)
        else:
            row = LifetimeRow(k, continuous_lifetime(k, ratio), rec,
                              chebyshev_bound(k, h, H, k * s_factor), chebyshev_bound_sqrt(k, h, H))
        table.rows.append(row)
    return table
