"""
Exact rational scalars.

Every amount handled by the suite (endowments, peaks, allotments, water
levels) is a :class:`fractions.Fraction`. Literals are written either as
``"p/q"`` or as a finite decimal string such as ``"13.5"``, which is read
exactly as ``27/2``.
"""
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .exceptions import InvalidRational

RationalLike = Union[Fraction, int, str, Decimal]

DECIMAL_PLACES = 6


def parse_rational(value: RationalLike) -> Fraction:
    if isinstance(value, bool):
        raise InvalidRational(f"{value!r} is not a rational literal")
    if isinstance(value, (Fraction, int, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        # json numbers reach us as floats only when a caller skipped
        # parse_float=str; their shortest repr is the literal the user wrote
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidRational(f"{value!r} is not a rational literal: {e}")
    raise InvalidRational(f"{value!r} is not a rational literal")


def parse_vector(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _terminates(value: Fraction) -> bool:
    den = value.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    return den == 1


def format_decimal(value: Fraction) -> str:
    """
    Decimal rendering for humans: exact when the expansion terminates,
    otherwise rounded and prefixed with "~".
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if _terminates(value):
        text = str(Decimal(value.numerator) / Decimal(value.denominator))
        return text.rstrip("0").rstrip(".") if "." in text else text
    rounded = round(value, DECIMAL_PLACES)
    text = f"{Decimal(rounded.numerator) / Decimal(rounded.denominator):.{DECIMAL_PLACES}f}"
    return f"~{text}"


def format_both(value: Fraction) -> str:
    return f"{format_rational(value)} ({format_decimal(value)})"
