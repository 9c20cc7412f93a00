"""Integer and rational helpers: square roots, divisor sums, Kronecker symbols
and the conductor decomposition of quadratic discriminants.

Python integers are arbitrary precision, and :class:`fractions.Fraction`
keeps every rational in lowest terms with a positive denominator, so both are
used directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NotADiscriminant

Rat = Fraction


def isqrt(n: int) -> int:
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        raise DomainError(f"is_square of negative number {n}")
    r = math.isqrt(n)
    return r * r == n


def sigma1(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    if n < 1:
        raise DomainError(f"sigma1 needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            q = n // d
            total += d if d == q else d + q
        d += 1
    return total


def prime_divisors(n: int) -> list[int]:
    """Distinct primes dividing ``n`` (trial division), ascending."""
    if n < 1:
        raise DomainError(f"prime_divisors needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor of 2 in n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n odd and positive: Jacobi symbol by quadratic reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _squarefree(m: int) -> bool:
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return True


def is_fundamental(d: int) -> bool:
    """True for fundamental discriminants (1 included, as the trivial one)."""
    if d == 1:
        return True
    if d % 4 == 1:
        return _squarefree(abs(d))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(abs(m))
    return False


@dataclass(frozen=True)
class Discriminant:
    """A positive discriminant ``value = conductor**2 * fundamental``."""

    value: int
    conductor: int
    fundamental: int

    @property
    def residue(self) -> int:
        return self.value % 4

    @property
    def is_square(self) -> bool:
        return self.fundamental == 1

    # short aliases used throughout the formulas
    @property
    def f(self) -> int:
        return self.conductor

    @property
    def D0(self) -> int:
        return self.fundamental

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def parse_discriminant(n: int | Discriminant) -> Discriminant:
    """Validate ``n`` and split off its conductor.

    Square factors are removed by trial division; the squarefree part ``s``
    becomes the fundamental discriminant if ``s = 1 (mod 4)`` and ``4s``
    otherwise.
    """
    if isinstance(n, Discriminant):
        return n
    n = int(n)
    if n <= 0 or n % 4 not in (0, 1):
        raise NotADiscriminant(f"{n} is not a discriminant (need n > 0 and n = 0, 1 mod 4)")
    s, f = n, 1
    p = 2
    while p * p <= s:
        while s % (p * p) == 0:
            s //= p * p
            f *= p
        p += 1
    if s % 4 != 1:
        # s = 2, 3 mod 4, so n = 0 mod 4 forces f even
        s *= 4
        f //= 2
    return Discriminant(n, f, s)


def sigma1_table(n: int) -> np.ndarray:
    """``sigma1(k)`` for ``0 <= k <= n`` (entry 0 is 0)."""
    out = np.zeros(n + 1, dtype=np.int64)
    for d in range(1, n + 1):
        out[d::d] += d
    return out


def totient_table(n: int) -> np.ndarray:
    """Euler's phi for ``0 <= k <= n`` (entry 0 is 0)."""
    phi = np.arange(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if phi[p] == p:  # p is prime
            phi[p::p] -= phi[p::p] // p
    return phi
