import itertools
import logging

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from pydantic import validator

from .domain import Bundle, between
from .exceptions import BetweennessHolds, InvalidPreference, ShapeError
from .schemas.rational import ExactModel, Rational
from .settings import (
    PEAK_DIVISION_WITNESS_EXPONENTS,
    PEAK_DIVISION_WITNESS_WEIGHT_BASE,
)

logger = logging.getLogger(__name__)


class QuadraticPreference(ExactModel):
    """
    Weighted squared distance from the peak, lower is better.

    Any bundle between the peak and another bundle is at least as close
    in every coordinate, so these orderings are multidimensional
    single-peaked. They stand in for a full preference wherever a witness
    has to be exhibited.
    """

    peak: Tuple[Rational, ...]
    weights: Tuple[Rational, ...]

    @validator("weights")
    def validate_weights(cls, weights, values):
        peak = values.get("peak", ())
        if len(weights) != len(peak):
            raise ShapeError(f"{len(weights)} weights for a peak with {len(peak)} coordinates")
        if any(w <= 0 for w in weights):
            raise InvalidPreference(f"weights must be positive, got {weights}")
        return weights

    def distance(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != len(self.peak):
            raise ShapeError(f"{x} does not match peak {self.peak}")
        return sum(
            (w * (xc - pc) ** 2 for w, xc, pc in zip(self.weights, x, self.peak)),
            Fraction(0),
        )


def quad_strictly_prefers(pref: QuadraticPreference, x: Bundle, y: Bundle) -> bool:
    return pref.distance(x) < pref.distance(y)


def quad_weakly_prefers(pref: QuadraticPreference, x: Bundle, y: Bundle) -> bool:
    return pref.distance(x) <= pref.distance(y)


def weight_ladder(
    base: int = PEAK_DIVISION_WITNESS_WEIGHT_BASE,
    exponents: Tuple[int, int] = PEAK_DIVISION_WITNESS_EXPONENTS,
) -> Tuple[Fraction, ...]:
    """
    Ladder values ordered from the simplest outward: base**0, base**1,
    base**-1, base**2, ...
    """
    low, high = exponents
    ordered = sorted(range(low, high + 1), key=lambda e: (abs(e), -e))
    return tuple(Fraction(base) ** e for e in ordered)


def sp_witness_preference(
    peak: Bundle,
    better: Bundle,
    worse: Bundle,
    base: int = PEAK_DIVISION_WITNESS_WEIGHT_BASE,
    exponents: Tuple[int, int] = PEAK_DIVISION_WITNESS_EXPONENTS,
) -> Optional[QuadraticPreference]:
    """
    Looks for quadratic weights under which ``better`` beats ``worse``.

    ``worse`` must not lie between ``peak`` and ``better``. A preference
    with such a ranking always exists in the full single-peaked domain;
    the quadratic family only finds it when ``better`` is closer to the
    peak in at least one coordinate, so None is a legitimate answer.
    """
    if between(worse, peak, better):
        raise BetweennessHolds(
            f"{worse} lies between the peak {peak} and {better}: "
            "every single-peaked preference ranks it first"
        )
    gains = [
        (w - p) ** 2 - (b - p) ** 2 for p, b, w in zip(peak, better, worse)
    ]
    if all(g <= 0 for g in gains):
        logger.warning(
            f"No quadratic preference with peak {peak} ranks {better} over {worse}"
        )
        return None

    ladder = weight_ladder(base, exponents)
    for weights in itertools.product(ladder, repeat=len(peak)):
        if sum(w * g for w, g in zip(weights, gains)) > 0:
            return QuadraticPreference(peak=tuple(peak), weights=tuple(weights))

    logger.warning(
        f"Weight ladder {base}**{exponents} exhausted for peak {peak}, "
        f"{better} over {worse}"
    )
    return None
