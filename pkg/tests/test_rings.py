from fractions import Fraction

import pytest

from combnull import GF, QQ, ZZ, ParseError, RingMismatch, UnsupportedField, Zmod, parse_ring


def test_modular_arithmetic_wraps():
    R = Zmod(6)
    assert R.mul(2, 3) == 0
    assert R.add(5, 5) == 4
    assert R.neg(2) == 4
    assert R.sub(1, 5) == 2


def test_integer_identity():
    assert ZZ.add(17, 0) == 17
    assert ZZ.mul(-3, 4) == -12


def test_rational_inverse_pair():
    assert QQ.mul(Fraction(2, 3), Fraction(3, 2)) == 1
    assert QQ.canon(Fraction(4, -6)) == Fraction(-2, 3)


def test_canonical_representatives():
    R = Zmod(7)
    assert R.canon(-1) == 6
    assert R.canon(14) == 0
    with pytest.raises(ParseError):
        ZZ.canon(Fraction(1, 2))


def test_units():
    assert Zmod(6).is_unit(5)
    assert not Zmod(6).is_unit(2)
    assert not ZZ.is_unit(2)
    assert ZZ.is_unit(-1)
    assert not QQ.is_unit(Fraction(0))
    assert QQ.is_unit(Fraction(-7, 3))


def test_zero_divisors():
    assert Zmod(6).is_zero_divisor(2)
    assert not Zmod(6).is_zero_divisor(5)
    # zero divides zero against any nonzero witness, in every ring here
    assert ZZ.is_zero_divisor(0)
    assert QQ.is_zero_divisor(Fraction(0))
    assert Zmod(6).is_zero_divisor(0)
    assert not ZZ.is_zero_divisor(3)


@pytest.mark.parametrize("m", range(2, 13))
def test_zero_divisor_matches_exhaustive_scan(m):
    R = Zmod(m)
    for a in R.elements():
        brute = any((a * w) % m == 0 for w in range(1, m))
        assert R.is_zero_divisor(a) == brute


@pytest.mark.parametrize("m", range(2, 13))
def test_unit_implies_not_zero_divisor(m):
    R = Zmod(m)
    for a in R.elements():
        if R.is_unit(a):
            assert not R.is_zero_divisor(a)


def test_condition_examples():
    assert not Zmod(6).condition_holds([0, 3], "D")
    assert ZZ.condition_holds([-5, 0, 7, 12], "D")
    assert Zmod(6).condition_holds([0, 1], "F")
    assert QQ.condition_holds([Fraction(1, 2), Fraction(1, 3), 0], "F")


def test_condition_f_implies_d_exhaustive():
    from itertools import combinations

    for m in range(2, 13):
        R = Zmod(m)
        for size in range(1, 5):
            for S in combinations(range(m), size):
                if R.condition_holds(S, "F"):
                    assert R.condition_holds(S, "D")


def test_gf_requires_prime():
    GF(7)
    with pytest.raises(UnsupportedField):
        GF(4)
    with pytest.raises(UnsupportedField):
        GF(9)
    with pytest.raises(UnsupportedField):
        GF(1)


def test_modulus_lower_bound():
    with pytest.raises(ValueError):
        Zmod(1)


def test_ring_text_round_trip():
    for text in ("ZZ", "QQ", "ZZ/6", "GF(7)"):
        assert str(parse_ring(text)) == text
    with pytest.raises(ParseError):
        parse_ring("ZZ/x")
    with pytest.raises(ParseError):
        parse_ring("RR")


def test_element_parsing():
    assert Zmod(6).parse_element("-1") == 5
    assert QQ.parse_element("2/3") == Fraction(2, 3)
    assert QQ.parse_element("-2/3") == Fraction(-2, 3)
    with pytest.raises(ParseError):
        ZZ.parse_element("2/3")
    with pytest.raises(ParseError):
        ZZ.parse_element("abc")


def test_require_same():
    with pytest.raises(RingMismatch):
        ZZ.require_same(Zmod(6))
    ZZ.require_same(ZZ)
    # GF(p) and ZZ/p are distinct descriptors on purpose
    with pytest.raises(RingMismatch):
        GF(5).require_same(Zmod(5))


def test_pow():
    assert Zmod(6).pow(5, 2) == 1
    assert QQ.pow(Fraction(2, 3), 3) == Fraction(8, 27)
    assert ZZ.pow(2, 10) == 1024
    assert ZZ.pow(7, 0) == 1
