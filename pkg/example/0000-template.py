#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Description: this is just an example template
    1. Instantiate LifetimeAPI with the hash family (tag and message bits)
    2. Set the verbosity
    3. Run one attack
"""

import os
import sys
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from fixauth import LifetimeAPI
from fixauth.core.utils.log import set_verbosity


#######################################################
"""
Just for test example
"""
if len(sys.argv) >= 2:
    msg_bits = int(sys.argv[1])
else:
    msg_bits = 9
########################################################

set_verbosity(1)

api = LifetimeAPI(tag_bits=7, msg_bits=msg_bits, knowledge=0.1)
transcript = api.simulate(stop='forge', seed=0)
print(transcript.outcome)
