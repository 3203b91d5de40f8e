#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Description: security loss of repeated rounds and the key-refresh interval
"""

import os
import sys
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from fixauth import LifetimeAPI

eps1, eps2, budget = 1e-6, 1e-6, 1e-3

api = LifetimeAPI(tag_bits=7, msg_bits=13)
for n, a_n, b_n, perfection, loss in api.compose(10, eps1, eps2).to_rows():
    print('round {:2d}: {} eps1 + {} eps2 = {:.3g}'.format(n, a_n, b_n, loss))

plan = api.refresh_plan(eps1, eps2, budget)
print('refresh the fixed key every {} rounds: {:.2f} key bits per round'.format(plan.interval, plan.bits_per_round))
