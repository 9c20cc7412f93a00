"""Topological type of W_D(6): assembles the invariants and solves for the genus.

The genus comes from the orbifold Euler formula::

    2 h0 - 2 g = chi + C + sum_d e_d (1 - 1/d)

with ``h0 = 1`` since W_D(6) is connected for every D.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


from . import cusps, euler, orbifold
from .arith import Discriminant, Rat, is_square, parse_discriminant, sigma1_table
from .errors import DomainError, InternalError, NonIntegralGenus, SquareDiscriminant

H0 = 1
ORDERS = (2, 3, 5, 6)


@dataclass(frozen=True)
class InvariantRecord:
    D: int
    h0: int
    chi: Rat
    C: int
    e2: int
    e3: int
    e5: int
    e6: int
    genus: int

    def euler_deficit(self) -> Rat:
        """Right-hand side of the orbifold Euler formula."""
        return (self.chi + self.C + sum(Fraction(n * (d - 1), d)
                                        for n, d in zip((self.e2, self.e3, self.e5, self.e6), ORDERS)))

    def is_consistent(self) -> bool:
        return 2 * self.h0 - 2 * self.genus == self.euler_deficit() and self.genus >= 0

    @property
    def g(self) -> int:
        return self.genus


def solve_genus(chi: Rat, C: int, e2: int, e3: int, e5: int, e6: int, h0: int = H0) -> int:
    """Genus from the orbifold Euler formula; raises unless it is a nonnegative integer."""
    rhs = chi + C + Fraction(e2, 2) + Fraction(2 * e3, 3) + Fraction(4 * e5, 5) + Fraction(5 * e6, 6)
    two_g = 2 * h0 - rhs
    if two_g.denominator != 1 or two_g.numerator % 2 or two_g < 0:
        raise NonIntegralGenus(f"orbifold Euler formula gives g = {two_g / 2}")
    return two_g.numerator // 2


def _require_nonsquare(D: Discriminant) -> None:
    if D.is_square:
        raise SquareDiscriminant(f"{D.value} is a square discriminant; out of scope")
    if D.value < 5:
        raise DomainError("W_D(6) needs D >= 5")


def _record(D: int, chi: Rat, C: int, e2: int, e3: int) -> InvariantRecord:
    e5 = 1 if D == 5 else 0
    e6 = 1 if D == 12 else 0
    try:
        g = solve_genus(chi, C, e2, e3, e5, e6)
    except NonIntegralGenus as exc:
        raise NonIntegralGenus(f"D = {D}: {exc}") from None
    return InvariantRecord(D, H0, chi, C, e2, e3, e5, e6, g)


def invariants(D: int | Discriminant) -> InvariantRecord:
    """Full invariant record of W_D(6) for a nonsquare discriminant ``D >= 5``."""
    D = parse_discriminant(D)
    _require_nonsquare(D)
    chi = euler.chi_breakdown(D).chi_W
    return _record(D.value, chi, cusps.count_cusps(D), orbifold.e2(D), orbifold.e3(D))


def nonsquare_discriminants(lo: int, hi: int) -> list[int]:
    return [D for D in range(max(lo, 5), hi + 1) if D % 4 in (0, 1) and not is_square(D)]


def invariants_range(lo: int, hi: int) -> list[InvariantRecord]:
    """Records for every nonsquare discriminant in ``[lo, hi]``, sorted by D.

    Uses the vectorized range kernels instead of per-D enumeration.
    """
    Ds = nonsquare_discriminants(lo, hi)
    if not Ds:
        return []
    lo, hi = Ds[0], Ds[-1]
    e3_raw = orbifold.e3_raw_table(lo, hi)
    e2 = orbifold.e2_table(lo, hi)
    C = cusps.cusp_count_table(lo, hi)
    sigma = sigma1_table(hi // 4)
    zetas: dict[int, Rat] = {}
    out = []
    for D in Ds:
        disc = parse_discriminant(D)
        z = zetas.get(disc.fundamental)
        if z is None:
            z = zetas[disc.fundamental] = Fraction(euler.siegel_sum(disc.fundamental, sigma), 60)
        chi = euler.chi_breakdown(disc, zeta=z).chi_W
        raw = int(e3_raw[D - lo])
        if D == 12:
            e3 = 0
        elif raw % 12:
            raise InternalError(f"e3_raw({D}) = {raw} is not divisible by 12")
        else:
            e3 = raw // 12
        out.append(_record(D, chi, int(C[D - lo]), int(e2[D - lo]), e3))
    return out


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def _run_chunk(bounds: tuple[int, int]) -> list[InvariantRecord]:
    return invariants_range(*bounds)


def default_jobs() -> int:
    return int(os.environ.get("PRYM_TOPO_JOBS", "1"))


def sweep(lo: int, hi: int, jobs: int | None = None, chunk: int = 5000) -> list[InvariantRecord]:
    """Invariant records for all nonsquare ``lo <= D <= hi``.

    The range is cut into chunks that are processed by ``jobs`` worker
    processes; output is ordered by D and does not depend on ``jobs``.
    """
    jobs = default_jobs() if jobs is None else jobs
    parts = _chunks(max(lo, 5), hi, chunk)
    if jobs <= 1 or len(parts) <= 1:
        results = [_run_chunk(p) for p in parts]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, parts))
    records = [r for part in results for r in part]
    records.sort(key=lambda r: r.D)
    return records


# -- bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: float
    bound: float
    passed: bool

    def __str__(self) -> str:
        return f"{self.name}: {self.value:.6g} vs {self.bound:.6g} {'ok' if self.passed else 'FAIL'}"


MARGIN = 1e-6


def genus_upper_bound(D: int) -> float:
    return 1 + D**1.5 * 35 / (48 * math.pi**2)


def genus_lower_bound(D: int) -> float:
    return 3 / 200 * D**1.5 - D / 6 - D**0.75 - 150


def cusp_bound(D: int, chi_X: Rat) -> float:
    """Upper bound for C/2."""
    return D**0.75 + 150 + 1.25 * float(chi_X)


def check_bounds(D: int | Discriminant, rec: InvariantRecord | None = None) -> list[BoundCheck]:
    """Evaluate the explicit genus, cusp and orbifold-count bounds for ``D``."""
    D = parse_discriminant(D)
    rec = invariants(D) if rec is None else rec
    d = D.value
    chi_X = -rec.chi / 7
    up, low, cb = genus_upper_bound(d), genus_lower_bound(d), cusp_bound(d, chi_X)
    return [
        BoundCheck("genus upper", rec.genus, up, rec.genus < up + MARGIN),
        BoundCheck("genus lower", rec.genus, low, rec.genus >= low - MARGIN),
        BoundCheck("cusps", rec.C / 2, cb, rec.C / 2 <= cb + MARGIN),
        BoundCheck("e2", rec.e2, d / 2, rec.e2 < d / 2 + MARGIN),
        BoundCheck("e3", rec.e3, d / 6, rec.e3 < d / 6 + MARGIN),
    ]


def bound_failures(records: Iterable[InvariantRecord]) -> list[tuple[int, BoundCheck]]:
    return [(r.D, chk) for r in records for chk in check_bounds(r.D, r) if not chk.passed]


def genus_zero_classification(max_D: int, jobs: int | None = None) -> list[int]:
    """All nonsquare discriminants ``D <= max_D`` with g(W_D(6)) = 0."""
    if max_D < 21:
        raise DomainError("genus_zero_classification needs max >= 21")
    return [r.D for r in sweep(5, max_D, jobs) if r.genus == 0]
