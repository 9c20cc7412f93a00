"""
Euler characteristics from divisor sums
=======================================

chi(W_D) = -7 chi(X_D), and chi(X_D) = 2 f^3 zeta_{D0}(-1) F(D).
"""

from prymtopo import chi_breakdown, parse_discriminant
from prymtopo.euler import chi_X_analytic

# D = f^2 D0: the conductor enters through f^3 and the Euler factor F
for D in (5, 20, 45, 200, 1009, 4 * 1009):
    b = chi_breakdown(D)
    d = parse_discriminant(D)
    print(f"D={D:5d} = {d.f}^2*{d.D0:<5d} zeta(-1)={str(b.zeta_m1):>8}  F={str(b.F):>6}  chi(W)={b.chi_W}")

# the same number from zeta(2) via the functional equation, in floating point
for D in (5, 13, 200):
    print(D, float(chi_breakdown(D).chi_X), chi_X_analytic(D))
