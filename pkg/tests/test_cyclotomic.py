import cmath
from fractions import Fraction

import pytest

from dessins.cyclotomic import Cyclotomic, E, sqrt_neg7


def approx(c: Cyclotomic) -> complex:
    return complex(c)


def test_sqrt_neg7():
    s = sqrt_neg7()
    assert s * s == -7
    b7 = E(7) ** 3 + E(7) ** 5 + E(7) ** 6
    assert b7 == (-1 - s) / 2
    assert b7.conj() == (-1 + s) / 2


def test_conductor_reduction():
    assert E(9) ** 3 == E(3)
    assert E(4) ** 2 == -1
    assert (E(3) + E(3) ** 2) == -1
    assert (E(6)).is_rational() is False
    assert E(5) + E(5) ** 2 + E(5) ** 3 + E(5) ** 4 == -1


def test_rational_round_trip():
    r = Cyclotomic.rational(Fraction(3, 4))
    assert r.is_rational() and r.to_rational() == Fraction(3, 4)
    assert Cyclotomic.rational(5).to_int() == 5


def test_sum_of_roots_of_unity_is_zero():
    for n in (2, 3, 4, 6, 8, 12, 15):
        assert sum((E(n) ** k for k in range(n)), Cyclotomic.rational(0)).is_zero()


def test_numeric_agreement():
    z = E(7) + 2 * E(7) ** 3 - E(3)
    w = E(12) - Fraction(1, 2) * E(5)
    expect = (cmath.exp(2j * cmath.pi / 7) + 2 * cmath.exp(6j * cmath.pi / 7)
              - cmath.exp(2j * cmath.pi / 3))
    assert cmath.isclose(approx(z), expect, abs_tol=1e-12)
    assert cmath.isclose(approx(z * w), expect * approx(w), abs_tol=1e-10)
    assert cmath.isclose(approx(z / w), expect / approx(w), abs_tol=1e-10)
    assert cmath.isclose(approx(z ** 3), expect ** 3, abs_tol=1e-10)


def test_inverse():
    z = 1 + E(7) + E(7) ** 3
    assert z * z.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(0).inverse()


def test_galois_action():
    z = E(7)
    assert z.galois(3) == E(7) ** 3
    assert sqrt_neg7().galois(3) == -sqrt_neg7()
    assert sqrt_neg7().galois(2) == sqrt_neg7()


def test_equality_and_hash():
    a = E(8) ** 2
    b = E(4)
    assert a == b and hash(a) == hash(b)


def test_str_and_json():
    v = E(7) ** 3 + E(7) ** 5 + E(7) ** 6
    assert str(v) == "E(7)^3+E(7)^5+E(7)^6"
    assert Cyclotomic.from_json(v.to_json()) == v
