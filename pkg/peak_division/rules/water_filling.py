"""
Exact water levels for one commodity.

Every rule of the sequential family hands agent i either
``min(p_i, b_i + t)`` or ``max(p_i, b_i - t)`` and picks the level t so
that the allotments add up to the endowment. Both maps are piecewise
linear and monotone in t with kinks at ``p_i - b_i``, so the level is
found exactly by walking the sorted kinks and solving the one linear
piece that crosses the target.
"""
import enum
import logging

from fractions import Fraction
from typing import Sequence

from peak_division.economy.schemas.rational import ExactModel, Rational

from .exceptions import InvalidPeak

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class Mode(str, enum.Enum):
    excess_demand = "ExcessDemand"
    excess_supply = "ExcessSupply"
    balanced = "Balanced"


class LambdaSolution(ExactModel):
    # named lam since lambda is a keyword
    lam: Rational
    mode: Mode


def water_level(
    caps: Sequence[Fraction],
    bases: Sequence[Fraction],
    target: Fraction,
    floor: Fraction,
) -> Fraction:
    """
    Least t >= floor with sum(min(cap_i, base_i + t)) == target.

    The caller guarantees the sum at ``floor`` does not exceed ``target``
    and that ``sum(caps)`` reaches it.
    """

    def level(t: Fraction) -> Fraction:
        return sum((min(c, b + t) for c, b in zip(caps, bases)), ZERO)

    current = level(floor)
    if current > target:
        raise ValueError(f"level {current} at floor {floor} already exceeds {target}")
    if current == target:
        return floor

    kinks = sorted({c - b for c, b in zip(caps, bases) if c - b > floor})
    previous = floor
    for kink in kinks:
        value = level(kink)
        if value >= target:
            return previous + (target - current) * (kink - previous) / (value - current)
        previous, current = kink, value
    raise ValueError(f"target {target} unreachable, the caps add up to {current}")


def check_peaks_1d(peaks: Sequence[Fraction], omega: Fraction) -> None:
    for i, p in enumerate(peaks):
        if not ZERO <= p <= omega:
            raise InvalidPeak(f"peak {p} of agent {i + 1} lies outside [0, {omega}]")


def solve_lambda(peaks: Sequence[Fraction], omega: Fraction) -> LambdaSolution:
    """
    Uniform water level for one commodity.

    ExcessDemand: least lambda with sum(min(p_i, lambda)) == omega.
    ExcessSupply: greatest lambda with sum(max(p_i, lambda)) == omega.
    Balanced: the peaks already add up to omega; lambda is max(p_i), the
    least value satisfying the demand form.
    """
    peaks = tuple(Fraction(p) for p in peaks)
    omega = Fraction(omega)
    check_peaks_1d(peaks, omega)
    total = sum(peaks, ZERO)

    if total == omega:
        return LambdaSolution(lam=max(peaks, default=ZERO), mode=Mode.balanced)

    zeros = [ZERO] * len(peaks)
    if total > omega:
        lam = water_level(peaks, zeros, omega, ZERO)
        return LambdaSolution(lam=lam, mode=Mode.excess_demand)

    # sum(max(p_i, lam)) == omega  <=>  sum(min(-p_i, -lam)) == -omega;
    # the least t = -lam is the greatest lam
    t = water_level([-p for p in peaks], zeros, -omega, -omega)
    return LambdaSolution(lam=-t, mode=Mode.excess_supply)
