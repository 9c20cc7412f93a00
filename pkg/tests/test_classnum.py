import math
from collections import defaultdict

import pytest

from prymtopo.classnum import ReducedForm, class_number_table, h_neg, list_reduced_forms
from prymtopo.errors import NotADiscriminant

LIMIT = 2000


def oracle_forms(limit):
    """Reduced primitive forms of every discriminant -C >= -limit, found by
    walking a, b, c upward (no closed-form bound on a or c)."""
    found = defaultdict(list)
    a = 1
    while True:
        hit = False
        for b in range(-a, a + 1):
            c = a
            while 4 * a * c - b * b <= limit:
                hit = True
                f = ReducedForm(a, b, c)
                if f.is_reduced() and f.is_primitive():
                    found[4 * a * c - b * b].append(f)
                c += 1
        if not hit:  # 4ac - b^2 >= 3a^2 grows with a
            break
        a += 1
    return {C: sorted(v) for C, v in found.items()}


@pytest.fixture(scope="module")
def oracle():
    return oracle_forms(LIMIT)


def test_examples():
    assert list_reduced_forms(3) == [(1, 1, 1)]
    assert list_reduced_forms(4) == [(1, 0, 1)]
    assert list_reduced_forms(20) == [(1, 0, 5), (2, 2, 3)]
    assert h_neg(8) == 1
    assert h_neg(3) == 1
    assert h_neg(44) + h_neg(11) == 4
    # primitive forms only: (2, 2, 2) has discriminant -12 but is imprimitive
    assert list_reduced_forms(12) == [(1, 0, 3)]


@pytest.mark.parametrize("C", [0, -3, 5, 6, 9, 10])
def test_rejects(C):
    with pytest.raises(NotADiscriminant):
        list_reduced_forms(C)


def test_oracle_agrees(oracle):
    for C in range(3, LIMIT + 1):
        if C % 4 in (0, 3):
            assert list_reduced_forms(C) == oracle.get(C, []), C


def test_form_invariants():
    for C in range(3, 1200):
        if C % 4 not in (0, 3):
            continue
        forms = list_reduced_forms(C)
        assert forms == sorted(forms)
        assert len(forms) >= 1
        if C >= 4:
            assert len(forms) < C / 3
        for f in forms:
            assert f.discriminant == -C and f.is_reduced() and f.is_primitive()
            assert math.gcd(*f) == 1


def test_table_matches_per_c():
    table = class_number_table(1, 3000)
    for C in range(3, 3001):
        if C % 4 in (0, 3):
            assert table[C - 1] == h_neg(C)


def test_table_subrange():
    full = class_number_table(1, 4000)
    assert (class_number_table(1234, 2345) == full[1233:2345]).all()


def test_known_class_numbers():
    # class numbers of the nine imaginary quadratic fields with h = 1
    for d in (3, 4, 7, 8, 11, 19, 43, 67, 163):
        assert h_neg(d) == 1
    assert h_neg(23) == 3 and h_neg(47) == 5 and h_neg(71) == 7
