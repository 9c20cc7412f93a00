"""Exact Euler characteristics of Hilbert modular surfaces and of W_D(6).

``zeta_m1`` uses Siegel's divisor-sum evaluation of the Dedekind zeta value
at -1 for a real quadratic field of discriminant ``D0``::

    zeta_K(-1) = 1/60 * sum_{b^2 < D0, b = D0 mod 2} sigma1((D0 - b^2) / 4)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import (Discriminant, Rat, is_fundamental, kronecker, parse_discriminant,
                    prime_divisors, sigma1)
from .errors import DomainError, InternalError, SquareDiscriminant


@dataclass(frozen=True)
class ChiBreakdown:
    D: Discriminant
    zeta_m1: Rat
    F: Rat
    chi_X: Rat
    chi_W: Rat

    def __post_init__(self):
        f = self.D.conductor
        if (self.chi_X != 2 * f**3 * self.zeta_m1 * self.F or self.chi_W != -7 * self.chi_X
                or self.chi_X <= 0):
            raise InternalError(f"inconsistent Euler characteristic data for D = {self.D}")


def siegel_sum(D0: int, sigma=sigma1) -> int:
    """``sum sigma1((D0 - b^2)/4)`` over ``b^2 < D0``, ``b = D0 (mod 2)``.

    ``sigma`` may be any callable or indexable returning divisor sums (a
    precomputed table makes sweeps cheap).
    """
    get = sigma if callable(sigma) else sigma.__getitem__
    total = 0
    b = D0 % 2
    while b * b < D0:
        term = int(get((D0 - b * b) // 4))
        total += term if b == 0 else 2 * term
        b += 2
    return total


@lru_cache(maxsize=None)
def zeta_m1(D0: int) -> Rat:
    """Exact value of the Dedekind zeta function of Q(sqrt(D0)) at s = -1."""
    if D0 <= 1 or not is_fundamental(D0):
        raise DomainError(f"{D0} is not a fundamental discriminant > 1")
    return Fraction(siegel_sum(D0), 60)


def F_correction(D: int | Discriminant) -> Rat:
    """Euler factor ``prod_{p | f} (1 - (D0/p) p^-2)`` for conductor ``f``."""
    D = parse_discriminant(D)
    if D.is_square:
        raise SquareDiscriminant(f"{D.value} is a square discriminant")
    F = Fraction(1)
    for p in prime_divisors(D.conductor):
        F *= 1 - Fraction(kronecker(D.fundamental, p), p * p)
    return F


def chi_breakdown(D: int | Discriminant, zeta: Rat | None = None) -> ChiBreakdown:
    """chi(X_D) = 2 f^3 zeta_{D0}(-1) F(D) and chi(W_D) = -7 chi(X_D).

    ``zeta`` lets batch callers pass a precomputed ``zeta_{D0}(-1)``.
    """
    D = parse_discriminant(D)
    if D.is_square:
        raise SquareDiscriminant(f"{D.value} is a square discriminant; chi is not implemented")
    z = zeta_m1(D.fundamental) if zeta is None else zeta
    F = F_correction(D)
    chi_X = 2 * D.conductor**3 * z * F
    return ChiBreakdown(D, z, F, chi_X, -7 * chi_X)


def chi_W(D: int | Discriminant) -> Rat:
    return chi_breakdown(D).chi_W


def dedekind_zeta_2(D0: int, terms: int = 10**6) -> float:
    """``zeta_K(2) = zeta(2) * L(2, (D0/.))`` with the L-series cut at ``terms``."""
    # (D0/.) is a character mod D0 for fundamental D0
    period = np.array([kronecker(D0, r) for r in range(D0)], dtype=np.float64)
    n = np.arange(1, terms + 1, dtype=np.int64)
    L = math.fsum((period[n % D0] / (n.astype(np.float64) ** 2)).tolist())
    return math.pi**2 / 6 * L


def chi_X_analytic(D: int | Discriminant, terms: int = 10**6) -> float:
    """Floating-point ``D^(3/2) zeta_{D0}(2) F(D) / (2 pi^4)``."""
    D = parse_discriminant(D)
    return D.value**1.5 * dedekind_zeta_2(D.fundamental, terms) * float(F_correction(D)) / (2 * math.pi**4)
