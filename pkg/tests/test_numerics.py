"""
Test suite for the exact and high-precision arithmetic substrate
"""
import pytest
import random
import sys
import os
from fractions import Fraction

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.numerics.exact import (RadicalScaled, factorial, radical_mul, rising_factorial_exact,
                                sign_power, square_split)
from src.numerics.precision import (PrecisionContext, format_scientific, gamma, round_to,
                                    to_exact, to_high, ulp_distance)
from src.utils.decimal_input import parse_decimal, parse_decimal_list, parse_int_range

CTX = PrecisionContext()


class TestExactScalars:
    """Test big integers, rationals and radical-scaled rationals"""

    def test_factorial(self):
        """Test exact factorials"""
        assert factorial(0) == 1
        assert factorial(5) == 120
        assert factorial(20) == 2432902008176640000

        with pytest.raises(ValueError, match="negative"):
            factorial(-1)

    def test_rising_factorial(self):
        """Test the Pochhammer symbol"""
        assert rising_factorial_exact(Fraction(1, 2), 3) == Fraction(15, 8)
        assert rising_factorial_exact(4, 0) == 1
        assert rising_factorial_exact(1, 5) == 120

    def test_rational_field(self):
        """Test (a/b)(b/a) = 1 over random rationals"""
        rng = random.Random(7)
        for _ in range(500):
            value = Fraction(rng.randint(-10 ** 12, 10 ** 12) or 1, rng.randint(1, 10 ** 12))
            assert value * (1 / value) == 1

    def test_square_split(self):
        """Test square extraction"""
        assert square_split(1) == (1, 1)
        assert square_split(72) == (6, 2)
        assert square_split(factorial(10)) == (720, 7)

    def test_radical_mul_examples(self):
        """Test exact radical products"""
        assert radical_mul(RadicalScaled(1, 2), RadicalScaled(1, 2)) == RadicalScaled(2, 1)

        product = radical_mul(RadicalScaled(3, Fraction(1, 6)), RadicalScaled(-1, Fraction(1, 6)))
        assert product == RadicalScaled(Fraction(-1, 2), 1)
        assert product.is_rational

        assert radical_mul(RadicalScaled(Fraction(2, 3)), RadicalScaled(Fraction(9, 4))) == \
            RadicalScaled(Fraction(3, 2))

    def test_radical_canonical_form(self):
        """Test that value-equal radicals compare equal"""
        assert RadicalScaled(1, 8) == RadicalScaled(2, 2)
        assert RadicalScaled(Fraction(1, 2), Fraction(1, 2)) == RadicalScaled(Fraction(1, 4), 2)
        assert RadicalScaled(0, 5) == RadicalScaled()
        assert RadicalScaled(5, 0) == RadicalScaled()
        assert RadicalScaled.sqrt(Fraction(4, 9)) == RadicalScaled(Fraction(2, 3))

        with pytest.raises(ValueError, match="negative radicand"):
            RadicalScaled(1, -2)

    def test_radical_distinct_radicands(self):
        """Test multiplication and addition across radicands"""
        assert RadicalScaled(1, 2) * RadicalScaled(1, 3) == RadicalScaled(1, 6)
        assert RadicalScaled(1, 6) * RadicalScaled(1, 10) == RadicalScaled(2, 15)
        assert RadicalScaled(1, 2) + RadicalScaled(3, 2) == RadicalScaled(4, 2)
        assert (RadicalScaled(1, 2) * 3).square() == 18

        with pytest.raises(ValueError, match="cannot add"):
            RadicalScaled(1, 2) + RadicalScaled(1, 3)

    def test_sign_power(self):
        """Test (-1)**k"""
        assert sign_power(0) == 1
        assert sign_power(3) == -1
        assert sign_power(-2) == 1


class TestPrecision:
    """Test configurable-precision reals"""

    def test_minimum_precision(self):
        """Test the lower bound on mantissa bits"""
        assert PrecisionContext().mantissa_bits == 256
        with pytest.raises(ValueError, match="at least 64"):
            PrecisionContext(32)

    def test_contexts_are_independent(self):
        """Test that precision is a per-context setting"""
        low, high = PrecisionContext(64), PrecisionContext(512)
        assert low.mp.prec == 64
        assert high.mp.prec == 512
        assert low.mp.prec == 64

    def test_gamma_examples(self):
        """Test gamma at integer and half-integer points"""
        mp = CTX.mp
        assert gamma(1, CTX) == 1
        assert gamma(21, CTX) == factorial(20)
        assert ulp_distance(gamma("0.5", CTX), mp.sqrt(mp.pi), CTX) <= 4
        expected = mp.mpf(15) / 8 * mp.sqrt(mp.pi)
        assert ulp_distance(gamma("3.5", CTX), expected, CTX) <= 4
        assert abs(float(gamma("3.5", CTX)) - 3.323350970447843) < 1e-14

    def test_gamma_rejects_nonpositive(self):
        """Test that poles are out of scope"""
        with pytest.raises(ValueError, match="positive"):
            gamma(0, CTX)
        with pytest.raises(ValueError, match="positive"):
            gamma("-1.5", CTX)

    def test_gamma_recurrence(self):
        """Test Gamma(a+1) = a Gamma(a) to 8 ulp for random a in (0, 50]"""
        rng = random.Random(11)
        work = CTX.padded()
        for _ in range(1000):
            a = Fraction(rng.randint(1, 50000), 1000)
            shifted = round_to(to_high(a, work) * gamma(a, work), CTX)
            assert ulp_distance(gamma(a + 1, CTX), shifted, CTX) <= 8

    def test_conversion_is_correctly_rounded(self):
        """Test that rounding a higher-precision conversion reproduces the lower one"""
        rng = random.Random(3)
        low, high = PrecisionContext(128), PrecisionContext(256)
        for _ in range(200):
            value = Fraction(rng.randint(-10 ** 30, 10 ** 30), rng.randint(1, 10 ** 30))
            assert round_to(to_high(value, high), low) == to_high(value, low)
            radical = RadicalScaled(value, rng.randint(2, 1000))
            assert round_to(to_high(radical, high), low) == to_high(radical, low)

    def test_decimal_inputs_are_exact(self):
        """Test that decimal strings are not routed through binary floats"""
        assert to_exact("3.56") == Fraction(89, 25)
        assert to_high("0.1", CTX) != CTX.mp.mpf(0.1)
        assert to_exact(to_high("0.5", CTX)) == Fraction(1, 2)

    def test_ulp_distance(self):
        """Test distances in units in the last place"""
        mp = CTX.mp
        one = mp.mpf(1)
        assert ulp_distance(one, one, CTX) == 0
        assert ulp_distance(one, one + mp.mpf(2) ** -255, CTX) == 1
        assert ulp_distance(-one, one, CTX) > 10 ** 70

    def test_format_scientific_round_trip(self):
        """Test that printed values reparse bit-exactly"""
        rng = random.Random(5)
        for _ in range(50):
            value = to_high(Fraction(rng.randint(1, 10 ** 40), rng.randint(1, 10 ** 20)), CTX)
            text = format_scientific(value, CTX)
            assert "e" in text
            assert CTX.mp.mpf(text) == value
        assert format_scientific(CTX.mp.mpf(1), CTX).startswith("1.000")


class TestDecimalInput:
    """Test exact parsing of command-line numbers"""

    def test_parse_decimal(self):
        """Test decimal parsing"""
        assert parse_decimal("5.1") == Fraction(51, 10)
        assert parse_decimal(" 2 ") == 2
        assert parse_decimal(Fraction(1, 3)) == Fraction(1, 3)

        with pytest.raises(ValueError, match="not a decimal"):
            parse_decimal("abc")
        with pytest.raises(ValueError, match="finite"):
            parse_decimal("nan")

    def test_parse_lists_and_ranges(self):
        """Test point lists and integer ranges"""
        assert parse_decimal_list("0.1,0.5, 1") == [Fraction(1, 10), Fraction(1, 2), 1]
        assert parse_int_range("-2:2") == (-2, 2)
        assert parse_int_range("3") == (3, 3)

        with pytest.raises(ValueError, match="empty integer range"):
            parse_int_range("2:1")
        with pytest.raises(ValueError, match="not an integer range"):
            parse_int_range("a:b")
