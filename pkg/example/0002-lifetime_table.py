#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
Description: analytic lifetimes against the independent-round Monte Carlo
"""

import os
import sys
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from fixauth import LifetimeAPI

H, h = 200, 180

api = LifetimeAPI()
table = api.analytic(50, H=H, h=h)
print('k, continuous, recursive, cheb_s, cheb_sqrt')
for row in table.to_rows()[::10]:
    print(', '.join(str(v) for v in row))

for k in (5, 10, 50):
    summary = api.independent_model(H, h, k, trials=100000, seed=k)
    print('k={}: recursion {:.3f}, monte carlo {:.3f} +- {:.3f}'.format(
        k, table.rows[k].recursive, summary.mean, summary.stderr))
