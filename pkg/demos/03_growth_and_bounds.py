"""
Genus growth
============

Sweep a range of discriminants and compare the genus with D^{3/2}.
"""

import numpy as np

from prymtopo import sweep
from prymtopo.topology import bound_failures, genus_lower_bound, genus_upper_bound

records = sweep(5, 20000)
D = np.array([r.D for r in records], dtype=float)
g = np.array([r.genus for r in records], dtype=float)

# g / D^{3/2} settles between the two explicit constants
ratio = g / D**1.5
print("g / D^1.5 on the last 1000 D:", ratio[-1000:].min(), ratio[-1000:].max())

# the explicit upper and lower bounds
up = np.array([genus_upper_bound(int(x)) for x in D])
low = np.array([genus_lower_bound(int(x)) for x in D])
print("upper bound slack (min):", (up - g).min())
print("lower bound first positive at D =", int(D[np.argmax(low > 0)]))

# audit of all five bounds; D = 5 has e3 = 1 > 5/6
for Dv, chk in bound_failures(r for r in records if r.D <= 5000):
    print("bound violated:", Dv, chk)
