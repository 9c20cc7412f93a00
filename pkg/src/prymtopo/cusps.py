"""Cusps of W_D(6), counted through splitting prototypes of the genus-2 curve W_D(2).

Both curves have the same number of cusps, and the cusps of W_D(2) are in
bijection with quadruples ``(a, b, c, e)`` such that::

    D = e^2 + 4bc,  b > 0,  c > 0,  c + e < b,  0 <= a < gcd(b, c),
    gcd(a, b, c, e) = 1.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ._ragged import ragged_arange
from .arith import Discriminant, parse_discriminant, totient_table
from .errors import DomainError, SquareDiscriminant


class Prototype(NamedTuple):
    a: int
    b: int
    c: int
    e: int

    def is_valid_for(self, D: int) -> bool:
        a, b, c, e = self
        return (D == e * e + 4 * b * c and b > 0 and c > 0 and c + e < b
                and 0 <= a < math.gcd(b, c) and math.gcd(a, b, c, e) == 1)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def list_prototypes(D: int | Discriminant) -> list[Prototype]:
    """All prototypes of discriminant ``D``, sorted by (e, b, c, a)."""
    D = parse_discriminant(D)
    if D.is_square:
        raise SquareDiscriminant(f"{D.value} is a square discriminant; cusps are not implemented")
    if D.value < 5:
        raise DomainError("prototypes need D >= 5")
    D = D.value
    out = []
    emax = math.isqrt(D)
    for e in range(-emax, emax + 1):
        if (D - e * e) % 4:
            continue
        for b in _divisors((D - e * e) // 4):
            c = (D - e * e) // 4 // b
            if c + e >= b:
                continue
            g = math.gcd(b, c)
            out.extend(Prototype(a, b, c, e) for a in range(g) if math.gcd(a, g, e) == 1)
    return out


def count_cusps(D: int | Discriminant) -> int:
    return len(list_prototypes(D))


def cusp_count_table(lo: int, hi: int) -> np.ndarray:
    """Prototype counts for every ``lo <= D <= hi``, indexed by ``D - lo``.

    Entries at square ``D`` count the same quadruples but are not cusp counts.
    For fixed ``(b, c, e)`` the admissible ``a`` are the residues mod
    ``g = gcd(b, c)`` coprime to ``h = gcd(g, e)``; there are ``g phi(h) / h``.
    """
    lo = max(lo, 1)
    out = np.zeros(max(hi - lo + 1, 0), dtype=np.int64)
    if hi < lo:
        return out
    root = math.isqrt(hi)
    # D >= c^2 for every prototype, so c <= sqrt(hi)
    phi = totient_table(root)
    e = np.arange(-root, root + 1, dtype=np.int64)
    e = e[e * e < hi]
    for c in range(1, root + 1):
        rest_lo = lo - e * e
        rest_hi = hi - e * e
        bmin = np.maximum(np.maximum(-(-rest_lo // (4 * c)), c + e + 1), 1)
        bmax = rest_hi // (4 * c)
        idx, b = ragged_arange(bmin, bmax + 1)
        if b.size == 0:
            continue
        ee = e[idx]
        g = np.gcd(b, c)
        h = np.gcd(g, ee)
        weight = g // h * phi[h]
        D = ee * ee + 4 * b * c
        out += np.bincount(D - lo, weights=weight, minlength=out.size)[: out.size].astype(np.int64)
    return out
