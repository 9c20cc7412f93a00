import math

import pytest

from prymtopo import orbifold
from prymtopo.arith import is_square
from prymtopo.errors import InternalError
from prymtopo.orbifold import e2, e3, e3_raw, e3_solutions, e5, e6


def brute_e3_raw(D):
    r = math.isqrt(D) + 1
    return sum(1 for a in range(-r, r + 1) for i in range(-r, r + 1) for j in range(-r, r + 1)
               if a * a + 3 * j * j + (2 * i - j) ** 2 == D and math.gcd(a, i, j) == 1)


def discriminants(lo, hi):
    return [D for D in range(lo, hi + 1) if D % 4 in (0, 1)]


def test_e2_examples():
    assert e2(21) == 0
    assert e2(44) == 4
    assert e2(12) == 1
    assert e2(8) == 1
    assert e2(20) == 2


def test_e2_odd_is_zero():
    assert all(e2(D) == 0 for D in discriminants(5, 2000) if D % 2)


def test_e3_raw_examples():
    assert e3_raw(5) == brute_e3_raw(5) == 12
    assert e3_raw(33) == 0
    assert e3_raw(197) == 132


def test_e3_raw_against_brute_force():
    for D in discriminants(1, 300):
        assert e3_raw(D) == brute_e3_raw(D), D


def test_e3_examples():
    assert e3(13) == 2
    assert e3(12) == 0
    assert e3(85) == 6
    assert e3(5) == 1 and e3(8) == 1


def test_e5_e6():
    assert (e5(5), e5(8), e5(200)) == (1, 0, 0)
    assert (e6(12), e6(5), e6(48)) == (1, 0, 0)


def test_solutions_are_solutions():
    for D in (5, 13, 85, 197, 1000):
        sols = list(e3_solutions(D))
        assert len(set(sols)) == len(sols)
        for a, i, j in sols:
            assert a * a + 3 * j * j + (2 * i - j) ** 2 == D
            assert math.gcd(a, i, j) == 1


def test_sign_symmetry():
    for D in (5, 13, 37, 85, 197, 1001):
        sols = set(e3_solutions(D))
        assert {(-a, -i, -j) for a, i, j in sols} == sols
        assert {(-a, i, j) for a, i, j in sols} == sols


def test_divisible_by_twelve():
    table = orbifold.e3_raw_table(1, 5000)
    for D in discriminants(1, 5000):
        if D != 12 and not is_square(D):
            assert table[D - 1] % 12 == 0, D


def test_e3_raises_on_bad_count(monkeypatch):
    monkeypatch.setattr(orbifold, "e3_raw", lambda D: 13)
    with pytest.raises(InternalError):
        orbifold.e3(20)


def test_e2_bound():
    table = orbifold.e2_table(5, 5000)
    for D in discriminants(5, 5000):
        assert table[D - 5] < D / 2


def test_e3_bound_only_fails_at_five():
    # the bound e3 < D/6 is asymptotic in spirit: W_5 has one point of order 3 and 1 > 5/6
    table = orbifold.e3_raw_table(5, 5000)
    over = [D for D in discriminants(5, 5000) if D != 12 and not is_square(D) and table[D - 5] // 12 >= D / 6]
    assert over == [5]


def test_tables_match_per_d():
    raw = orbifold.e3_raw_table(1, 2500)
    two = orbifold.e2_table(5, 2500)
    for D in discriminants(5, 2500):
        assert raw[D - 1] == e3_raw(D)
        assert two[D - 5] == e2(D)


def test_table_chunks_agree():
    full = orbifold.e3_raw_table(1, 6000)
    for lo, hi in [(1, 999), (1000, 1001), (2500, 6000), (5997, 6000)]:
        assert (orbifold.e3_raw_table(lo, hi) == full[lo - 1:hi]).all()
