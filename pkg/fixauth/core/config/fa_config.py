#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.


class FACONF(object):
    ENV_WORKERS = 'FIXAUTH_WORKERS'

    def __init__(self):
        pass

    class Family:
        DEFAULT_TAG_BITS = 7
        DEFAULT_MSG_BITS = (9, 10, 11, 12, 13)
        MAX_PRIME_INPUT = 1 << 32  # smallest_prime_geq accepts n < 2^32

    class Knowledge:
        DEFAULT_FRACTION = 0.1
        ROUNDING = 'half_even'

        class Mode:
            FIXED_FRACTION = 'fixed-fraction'
            FIXED_COUNT = 'fixed-count'

    class Stop:
        IDENTIFY = 'identify'
        FORGE = 'forge'

    class Outcome:
        IDENTIFIED = 'IdentifiedAt'
        FORGED = 'ForgedAt'
        EXHAUSTED = 'ExhaustedBudget'

    class Candidates:
        SPARSE_DENSITY = 1.0 / 64
        CHUNK_BITS = 1 << 20  # multiple of 8
        MEMORY_CEILING = 512 * 1024 * 1024  # bytes, 2^32 bits

    class Analytic:
        RECURSION_CEILING = 20000
        DEGENERATE_TOL = 1e-15
        DEFAULT_H = 4096

    class Attack:
        DEFAULT_BUDGET = 100000

    class Guess:
        DEFAULT_TRIALS = 1
        DEFAULT_BUDGET = 1 << 30
        BLOCK_ROUNDS = 256

    class Sweep:
        DEFAULT_TRIALS = 200
        DEFAULT_SEED = 0
        SOURCE_RECURSION = 'recursion'
        SOURCE_MONTE_CARLO = 'monte_carlo'

    class Csv:
        SWEEP = ('msg_bits', 'tag_bits', 'knowledge', 'stop', 'trials', 'mean_lifetime',
                 'stderr', 'realized_ratio', 'continuous', 'cheb_sqrt')
        ANALYTIC = ('k', 'continuous', 'recursive', 'cheb_s', 'cheb_sqrt')
        COMPOSE = ('n', 'a_n', 'b_n', 'key_perfection', 'loss')
        TRANSCRIPT = ('round', 'message', 'encrypted_tag', 'possible_tags', 'survivors', 'realized_ratio')
        GUESS = ('trial', 'rounds')
