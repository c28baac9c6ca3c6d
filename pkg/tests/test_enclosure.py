from fractions import Fraction

import pytest

from hcs.enclosure import Enclosure, as_enclosure, lower_bound, sqrt_enclosure, upper_bound


class TestSqrtEnclosure:
    def test_sqrt2_brackets(self):
        e = sqrt_enclosure(2)
        assert e.lo * e.lo <= 2 <= e.hi * e.hi
        assert e.width <= Fraction(1, 10**30)

    def test_perfect_square_is_exact(self):
        e = sqrt_enclosure(Fraction(9, 4))
        assert e.lo == e.hi == Fraction(3, 2)

    def test_zero(self):
        assert sqrt_enclosure(0).lo == 0 == sqrt_enclosure(0).hi

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            sqrt_enclosure(-1)


class TestArithmetic:
    def test_order_validated(self):
        with pytest.raises(ValueError):
            Enclosure(Fraction(1), Fraction(0))

    def test_add_sub(self):
        a = Enclosure(Fraction(1), Fraction(2))
        b = Enclosure(Fraction(-1), Fraction(1))
        assert (a + b).lo == 0 and (a + b).hi == 3
        assert (a - b).lo == 0 and (a - b).hi == 3
        assert (1 - a).lo == -1 and (1 - a).hi == 0

    def test_mul_signs(self):
        a = Enclosure(Fraction(-2), Fraction(1))
        b = Enclosure(Fraction(3), Fraction(4))
        prod = a * b
        assert prod.lo == -8 and prod.hi == 4
        assert (2 * a).lo == -4

    def test_division(self):
        a = Enclosure(Fraction(1), Fraction(2))
        assert (1 / a).lo == Fraction(1, 2) and (1 / a).hi == 1
        with pytest.raises(ZeroDivisionError):
            1 / Enclosure(Fraction(-1), Fraction(1))

    def test_pow(self):
        a = Enclosure(Fraction(-1), Fraction(2))
        sq = a**2
        assert sq.lo == -2 and sq.hi == 4  # interval square, not range of x^2

    def test_contains_true_value(self):
        # (sqrt(2))^2 enclosure contains 2
        e = sqrt_enclosure(2)
        assert (e * e).contains(2)


class TestComparisons:
    def test_certified_ordering(self):
        s2, s3 = sqrt_enclosure(2), sqrt_enclosure(3)
        assert s2.certainly_lt(s3)
        assert s3.certainly_ge(s2)
        assert not s2.certainly_le(Fraction(14, 10))  # 1.4 < sqrt(2)
        assert s2.certainly_le(Fraction(15, 10))

    def test_floor(self):
        assert sqrt_enclosure(2).floor() == 1
        assert as_enclosure(Fraction(7, 2)).floor() == 3

    def test_floor_ambiguous(self):
        with pytest.raises(ValueError):
            Enclosure(Fraction(1, 2), Fraction(3, 2)).floor()
        with pytest.raises(ValueError):
            # the squared enclosure straddles the integer 2
            (sqrt_enclosure(2) * sqrt_enclosure(2)).floor()

    def test_bound_helpers(self):
        assert lower_bound(Fraction(1, 3)) == Fraction(1, 3)
        assert upper_bound(sqrt_enclosure(2)) > lower_bound(sqrt_enclosure(2))
