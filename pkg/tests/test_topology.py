from fractions import Fraction

import pytest

from prymtopo import topology
from prymtopo.errors import DomainError, NonIntegralGenus, SquareDiscriminant
from prymtopo.topology import InvariantRecord, check_bounds, genus_zero_classification, invariants, solve_genus, sweep

GENUS_ZERO = [5, 8, 12, 13, 17, 20]


def test_D5():
    r = invariants(5)
    assert (r.genus, r.chi, r.C, r.e2, r.e3, r.e5, r.e6) == (0, Fraction(-7, 15), 1, 0, 1, 1, 0)
    assert r.h0 == 1 and r.g == 0


@pytest.mark.parametrize("D, g, chi, C, e2, e3", [
    (76, 11, Fraction(-133, 3), 21, 4, 2),
    (105, 27, Fraction(-84), 32, 0, 0),
    (200, 56, Fraction(-455, 3), 36, 6, 4),
])
def test_examples(D, g, chi, C, e2, e3):
    r = invariants(D)
    assert (r.genus, r.chi, r.C, r.e2, r.e3) == (g, chi, C, e2, e3)


def test_records_consistent():
    for r in sweep(5, 3000):
        assert r.is_consistent()
        assert 2 - 2 * r.genus == r.euler_deficit()


def test_shortcut_formula_beyond_12():
    # no order-5 or order-6 points once D > 12
    for r in sweep(13, 2000):
        assert r.e5 == r.e6 == 0
        assert r.genus == 1 - (r.chi + r.C + Fraction(r.e2, 2) + Fraction(2 * r.e3, 3)) / 2


def test_sweep_matches_per_D():
    batch = sweep(5, 1500)
    assert batch == [invariants(D) for D in topology.nonsquare_discriminants(5, 1500)]


def test_sweep_chunking_and_jobs():
    ref = sweep(5, 4000, jobs=1, chunk=10**6)
    assert sweep(5, 4000, jobs=1, chunk=333) == ref
    assert sweep(5, 4000, jobs=2, chunk=1000) == ref


def test_sweep_ordering():
    Ds = [r.D for r in sweep(5, 800, chunk=97)]
    assert Ds == sorted(Ds) == topology.nonsquare_discriminants(5, 800)


def test_genus_zero():
    assert genus_zero_classification(21) == GENUS_ZERO
    assert genus_zero_classification(200) == GENUS_ZERO
    with pytest.raises(DomainError):
        genus_zero_classification(20)


def test_invariants_rejects():
    with pytest.raises(SquareDiscriminant):
        invariants(49)
    with pytest.raises(DomainError):
        invariants(7)
    with pytest.raises(DomainError):
        invariants(4)


def test_nonintegral_genus():
    with pytest.raises(NonIntegralGenus):
        solve_genus(Fraction(-7, 15), 2, 0, 1, 1, 0)
    with pytest.raises(NonIntegralGenus):
        solve_genus(Fraction(1), 0, 0, 0, 0, 0)  # odd 2g
    with pytest.raises(NonIntegralGenus):
        solve_genus(Fraction(1), 3, 0, 0, 0, 0)  # negative genus


def test_bounds_examples():
    names = [b.name for b in check_bounds(200)]
    assert names == ["genus upper", "genus lower", "cusps", "e2", "e3"]
    assert all(b.passed for b in check_bounds(200))
    failing = [b.name for b in check_bounds(5) if not b.passed]
    assert failing == ["e3"]
    low = next(b for b in check_bounds(1053) if b.name == "genus lower")
    assert low.bound > 0 and low.passed


def test_bound_failures_list():
    fails = topology.bound_failures(sweep(5, 3000))
    assert [(D, b.name) for D, b in fails] == [(5, "e3")]


def test_record_is_frozen():
    r = invariants(13)
    assert isinstance(r, InvariantRecord)
    with pytest.raises(AttributeError):
        r.genus = 3
