#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Description: identify and forge stops on the same seeds
    Note: both runs see the same rounds, the forge stop never comes later
"""

import os
import sys
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from fixauth import LifetimeAPI


#######################################################
"""
Just for test example
"""
if len(sys.argv) >= 2:
    msg_bits = int(sys.argv[1])
else:
    msg_bits = 9
########################################################


def survivors(n, candidates, true_key_index):
    if n % 20 == 0:
        print('  round {}: {} candidates, true key kept: {}'.format(n, candidates.count, true_key_index in candidates))


api = LifetimeAPI(tag_bits=7, msg_bits=msg_bits, knowledge=0.1)
print('family: p={}, key bits={:.2f}'.format(api.params.prime_p, api.params.key_bits))

for seed in range(3):
    forge = api.simulate(stop='forge', seed=seed)
    identify = api.simulate(stop='identify', seed=seed, observer=survivors)
    print('seed={}, forge: {}, identify: {}'.format(seed, forge.lifetime, identify.lifetime))
    print('  forged tag={}, recovered otp={}'.format(forge.outcome.forged_tag, forge.outcome.recovered_otp))

result = api.guess(trials=10000, seed=0)
print('guessing baseline: mean={:.1f} +- {:.1f}, expected {}'.format(result.mean, result.stderr, api.params.tag_space_size))
