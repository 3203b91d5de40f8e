#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Per-trial seed derivation.

A trial seed is a pure function of (master seed, point index, trial index):

    SeedSequence(master_seed, spawn_key=(point_index, trial_index)).generate_state(1, uint64)[0]

The spawn key acts as a counter, so appending trials or points never changes the
seeds of the trials that already exist.
"""

import numpy as np


def derive_seed(master_seed, point_index, trial_index):
    ss = np.random.SeedSequence(int(master_seed), spawn_key=(int(point_index), int(trial_index)))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed):
    return np.random.default_rng(np.random.SeedSequence(int(seed)))


# entropy word separating analytic overlay streams from trial streams
_OVERLAY_STREAM = 0x6f766c79


def derive_overlay_seed(master_seed, point_index):
    """Seed of the Monte Carlo overlay of one sweep point, disjoint from its trial seeds"""
    ss = np.random.SeedSequence((int(master_seed), _OVERLAY_STREAM), spawn_key=(int(point_index),))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
