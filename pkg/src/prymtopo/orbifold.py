"""Counts of orbifold points of orders 2, 3, 5 and 6 on W_D(6)."""
from __future__ import annotations

import math
from typing import Iterator, NamedTuple

import numpy as np

from ._ragged import ragged_arange
from .arith import Discriminant, parse_discriminant
from .classnum import class_number_table, h_neg
from .errors import InternalError


class E3Solution(NamedTuple):
    """Triple with ``a^2 + 3j^2 + (2i - j)^2 = D`` and ``gcd(a, i, j) = 1``."""

    a: int
    i: int
    j: int


def _e2_from_class_numbers(D: int, h_of) -> int:
    if D % 2:
        return 0
    if D == 12:
        # h(-12) + h(-3) = 2, but one of the two points is the order-6 point
        return 1
    if D % 16 == 12:
        return h_of(D) + h_of(D // 4)
    return h_of(D)


def e2(D: int | Discriminant) -> int:
    """Number of orbifold points of order 2."""
    D = parse_discriminant(D).value
    return _e2_from_class_numbers(D, h_neg)


def e3_solutions(D: int | Discriminant) -> Iterator[E3Solution]:
    """Yield every primitive solution, ordered by (a, j) then i."""
    D = parse_discriminant(D).value
    amax = math.isqrt(D)
    jmax = math.isqrt(D // 3)
    for a in range(-amax, amax + 1):
        rest_a = D - a * a
        for j in range(-jmax, jmax + 1):
            rest = rest_a - 3 * j * j
            if rest < 0:
                continue
            t = math.isqrt(rest)
            if t * t != rest or (t + j) % 2:
                continue
            # i from 2i - j = -t and 2i - j = +t
            for s in ((-t, t) if t else (0,)):
                i = (s + j) // 2
                if math.gcd(a, i, j) == 1:
                    yield E3Solution(a, i, j)


def e3_raw(D: int | Discriminant) -> int:
    return sum(1 for _ in e3_solutions(D))


def e3(D: int | Discriminant) -> int:
    """Number of orbifold points of order 3 (zero for D = 12)."""
    D = parse_discriminant(D).value
    if D == 12:
        return 0
    raw = e3_raw(D)
    if raw % 12:
        raise InternalError(f"e3_raw({D}) = {raw} is not divisible by 12")
    return raw // 12


def e5(D: int | Discriminant) -> int:
    return 1 if parse_discriminant(D).value == 5 else 0


def e6(D: int | Discriminant) -> int:
    return 1 if parse_discriminant(D).value == 12 else 0


def e3_raw_table(lo: int, hi: int) -> np.ndarray:
    """``e3_raw(D)`` for every ``lo <= D <= hi``, indexed by ``D - lo``.

    Enumerates ``a, j, t >= 0`` with ``t = 2i - j`` and weights each triple by
    the number of sign changes it stands for; flipping the sign of ``a`` or of
    ``(j, t)`` or of ``t`` alone keeps both the equation and the gcd.
    """
    lo = max(lo, 1)
    out = np.zeros(max(hi - lo + 1, 0), dtype=np.int64)
    if hi < lo:
        return out
    jmax = math.isqrt(hi // 3)
    j = np.arange(jmax + 1, dtype=np.int64)
    for a in range(math.isqrt(hi) + 1):
        q = a * a + 3 * j * j
        ok = q <= hi
        jj, qq = j[ok], q[ok]
        tmin = np.array([math.isqrt(max(lo - x, 0) - 1) + 1 if lo - x > 0 else 0 for x in qq.tolist()],
                        dtype=np.int64)
        tmax = np.array([math.isqrt(hi - x) for x in qq.tolist()], dtype=np.int64)
        idx, t = ragged_arange(tmin, tmax + 1)
        jt = jj[idx]
        keep = (t - jt) % 2 == 0
        t, jt = t[keep], jt[keep]
        i = (t + jt) // 2
        keep = np.gcd(np.gcd(i, jt), a) == 1
        t, jt = t[keep], jt[keep]
        weight = (2 if a else 1) * np.where(jt > 0, 2, 1) * np.where(t > 0, 2, 1)
        D = a * a + 3 * jt * jt + t * t
        out += np.bincount(D - lo, weights=weight, minlength=out.size)[: out.size].astype(np.int64)
    return out


def e2_table(lo: int, hi: int) -> np.ndarray:
    """``e2(D)`` for every ``lo <= D <= hi`` (garbage at non-discriminants)."""
    lo = max(lo, 1)
    h = class_number_table(lo, hi)
    qlo, qhi = -(-lo // 4), hi // 4
    hq = class_number_table(qlo, qhi)

    def h_of(C: int) -> int:
        if lo <= C <= hi:
            return int(h[C - lo])
        return int(hq[C - qlo])

    return np.array([_e2_from_class_numbers(D, h_of) if D % 4 in (0, 1) else 0
                     for D in range(lo, hi + 1)], dtype=np.int64)
