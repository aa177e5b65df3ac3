from decimal import Decimal
from fractions import Fraction as F

from django.test import TestCase
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from peak_division.economy.exceptions import InvalidRational
from peak_division.economy.rationals import (
    format_both,
    format_decimal,
    format_rational,
    parse_rational,
    parse_vector,
)


class ParseRationalTest(TestCase):
    def test_fraction_literal(self):
        self.assertEqual(parse_rational("27/2"), F(27, 2))

    def test_decimal_literal_is_exact(self):
        self.assertEqual(parse_rational("13.5"), F(27, 2))
        self.assertEqual(parse_rational("0.1"), F(1, 10))
        self.assertEqual(parse_rational(Decimal("0.1")), F(1, 10))

    def test_integers(self):
        self.assertEqual(parse_rational(12), F(12))
        self.assertEqual(parse_rational(" 12 "), F(12))

    def test_float_uses_its_literal(self):
        self.assertEqual(parse_rational(10.5), F(21, 2))

    def test_rejects_garbage(self):
        for value in ("abc", "1/0", "", None, [1], True):
            with self.assertRaises(InvalidRational):
                parse_rational(value)

    def test_vector(self):
        self.assertEqual(parse_vector(["27/2", 9]), (F(27, 2), F(9)))


class FormatRationalTest(TestCase):
    def test_canonical_form(self):
        self.assertEqual(format_rational(F(6)), "6/1")
        self.assertEqual(format_rational(F(27, 2)), "27/2")
        self.assertEqual(format_rational(F(-2, 6)), "-1/3")

    def test_decimal_terminating(self):
        self.assertEqual(format_decimal(F(6)), "6")
        self.assertEqual(format_decimal(F(27, 2)), "13.5")
        self.assertEqual(format_decimal(F(1, 8)), "0.125")
        self.assertEqual(format_decimal(F(-1, 4)), "-0.25")

    def test_decimal_repeating(self):
        self.assertEqual(format_decimal(F(1, 3)), "~0.333333")
        self.assertEqual(format_decimal(F(2, 3)), "~0.666667")

    def test_both(self):
        self.assertEqual(format_both(F(6)), "6/1 (6)")
        self.assertEqual(format_both(F(10, 3)), "10/3 (~3.333333)")


class RationalPropertiesTest(HypothesisTestCase):
    @given(st.fractions())
    def test_parse_inverts_format(self, value):
        self.assertEqual(parse_rational(format_rational(value)), value)
