import math
from fractions import Fraction

import pytest

from prymtopo.arith import is_fundamental, is_square, kronecker, parse_discriminant
from prymtopo.errors import DomainError, SquareDiscriminant
from prymtopo.euler import F_correction, chi_breakdown, chi_W, chi_X_analytic, zeta_m1


def bernoulli_zeta_m1(D0):
    """zeta_K(-1) = zeta(-1) L(-1, chi) = B_{2,chi} / 24 with
    B_{2,chi} = D0 * sum_{a=1}^{D0} chi(a) (a^2/D0^2 - a/D0 + 1/6)."""
    B2 = D0 * sum(kronecker(D0, a) * (Fraction(a * a, D0 * D0) - Fraction(a, D0) + Fraction(1, 6))
                  for a in range(1, D0 + 1))
    return B2 / 24


def test_zeta_examples():
    assert zeta_m1(5) == Fraction(1, 30)
    assert zeta_m1(8) == Fraction(1, 12)
    assert zeta_m1(12) == Fraction(1, 6)


def test_zeta_against_bernoulli():
    for D0 in range(5, 1500):
        if is_fundamental(D0):
            assert zeta_m1(D0) == bernoulli_zeta_m1(D0), D0


@pytest.mark.parametrize("D0", [1, 0, 20, 45, 7, 16])
def test_zeta_domain(D0):
    with pytest.raises(DomainError):
        zeta_m1(D0)


def test_F_examples():
    assert F_correction(5) == 1
    assert F_correction(20) == Fraction(5, 4)
    assert F_correction(45) == Fraction(10, 9)
    assert F_correction(200) == Fraction(26, 25)


@pytest.mark.parametrize("D, chi", [(5, Fraction(-7, 15)), (20, Fraction(-14, 3)), (45, Fraction(-14)),
                                    (104, Fraction(-175, 3)), (200, Fraction(-455, 3))])
def test_chi_examples(D, chi):
    assert chi_W(D) == chi


def test_breakdown_invariants():
    for D in range(5, 3000):
        if D % 4 not in (0, 1) or is_square(D):
            continue
        br = chi_breakdown(D)
        f = br.D.conductor
        assert br.chi_X == 2 * f**3 * br.zeta_m1 * br.F
        assert br.chi_W == -7 * br.chi_X
        assert br.chi_X > 0 > br.chi_W


def test_square_rejected():
    with pytest.raises(SquareDiscriminant):
        chi_breakdown(49)
    with pytest.raises(SquareDiscriminant):
        F_correction(16)


def test_F_bounds():
    lo, hi = 6 / math.pi**2, 15 / math.pi**2
    for D in range(5, 5001):
        if D % 4 in (0, 1) and not is_square(D):
            F = float(F_correction(D))
            assert lo + 1e-9 < F < hi - 1e-9, D


@pytest.mark.parametrize("D", [5, 8, 12, 13, 17])
def test_functional_equation(D):
    exact = float(chi_breakdown(D).chi_X)
    assert abs(chi_X_analytic(D) - exact) <= 1e-9 * exact


def test_functional_equation_with_conductor():
    for D in (20, 45, 200):
        exact = float(chi_breakdown(D).chi_X)
        assert abs(chi_X_analytic(D) - exact) <= 1e-8 * exact
