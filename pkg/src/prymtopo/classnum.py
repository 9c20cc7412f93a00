"""Class numbers of imaginary quadratic orders via reduced binary quadratic forms."""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ._ragged import ragged_arange
from .errors import NotADiscriminant


class ReducedForm(NamedTuple):
    """Primitive reduced form ``a x^2 + b xy + c y^2``."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self
        if not (a >= 1 and abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def _check(C: int) -> None:
    if C <= 0 or C % 4 not in (0, 3):
        raise NotADiscriminant(f"-{C} is not a negative discriminant")


def list_reduced_forms(C: int) -> list[ReducedForm]:
    """All primitive reduced forms of discriminant ``-C``, sorted by (a, b, c)."""
    _check(C)
    forms = []
    amax = math.isqrt(C // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            num = b * b + C
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(a, b, c) != 1:
                continue
            forms.append(ReducedForm(a, b, c))
    return forms


def h_neg(C: int) -> int:
    """Class number h(-C) of the imaginary quadratic order of discriminant -C."""
    return len(list_reduced_forms(C))


def class_number_table(lo: int, hi: int) -> np.ndarray:
    """``h(-C)`` for every ``lo <= C <= hi`` as an array indexed by ``C - lo``.

    Entries for ``C`` that are not ``0, 3 mod 4`` are zero.
    """
    lo = max(lo, 1)
    out = np.zeros(max(hi - lo + 1, 0), dtype=np.int64)
    if hi < lo:
        return out
    for a in range(1, math.isqrt(hi // 3) + 1):
        b = np.arange(-a + 1, a + 1, dtype=np.int64)
        # 4ac - b^2 = C, so c runs over [ceil((lo + b^2)/4a), floor((hi + b^2)/4a)]
        cmin = np.maximum(-((-(lo + b * b)) // (4 * a)), a)
        cmax = (hi + b * b) // (4 * a)
        idx, c = ragged_arange(cmin, cmax + 1)
        bb = b[idx]
        keep = ((c > a) | (bb >= 0)) & (np.gcd(np.gcd(bb, c), a) == 1)
        disc = 4 * a * c[keep] - bb[keep] ** 2
        out += np.bincount(disc - lo, minlength=out.size)[: out.size]
    return out
