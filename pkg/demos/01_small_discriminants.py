"""
The first few curves
====================

Invariants of W_D(6) for the smallest discriminants, and where the genus
first becomes positive.
"""

from prymtopo import invariants
from prymtopo.topology import nonsquare_discriminants

# one record per nonsquare discriminant
for D in nonsquare_discriminants(5, 40):
    r = invariants(D)
    print(f"D={D:3d}  g={r.genus:2d}  chi={str(r.chi):>7}  C={r.C:2d}  "
          f"e2={r.e2} e3={r.e3} e5={r.e5} e6={r.e6}")

# the genus formula balances exactly, with no rounding anywhere
r = invariants(21)
print(r.euler_deficit(), "=", 2 * r.h0 - 2 * r.genus)
