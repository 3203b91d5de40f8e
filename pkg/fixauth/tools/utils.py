#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

import math

# deterministic for every n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 1 << 20


def _is_prime_trial(n):
    def _is_prime():
        for i in range(6, math.isqrt(n) + 2, 6):
            if n % (i - 1) == 0 or n % (i + 1) == 0:
                return False
        return True
    return n == 2 or n == 3 or (n > 1 and n % 2 != 0 and n % 3 != 0 and _is_prime())


def _is_prime_mr(n):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n):
    if n < _TRIAL_LIMIT:
        return _is_prime_trial(n)
    if n % 2 == 0 or n % 3 == 0:
        return False
    return _is_prime_mr(n)


def is_power_of_two(x):
    return x > 0 and not (x & (x - 1))


def round_half_even(x):
    return int(round(x))
