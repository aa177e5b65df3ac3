import logging

from fractions import Fraction
from typing import List, Sequence, Tuple

from peak_division.economy.domain import Allocation, Economy, PeakProfile

from .exceptions import InvalidOrder, InvalidReference
from .water_filling import (
    LambdaSolution,
    Mode,
    ZERO,
    check_peaks_1d,
    solve_lambda,
    water_level,
)

logger = logging.getLogger(__name__)


def _columns(profile: Sequence[Sequence[Fraction]], l: int) -> List[Tuple[Fraction, ...]]:
    return [tuple(bundle[c] for bundle in profile) for c in range(l)]


def _rows(columns: Sequence[Sequence[Fraction]], n: int) -> Allocation:
    return tuple(tuple(column[i] for column in columns) for i in range(n))


def uniform_lambdas(econ: Economy, peaks: PeakProfile) -> Tuple[LambdaSolution, ...]:
    peaks = econ.check_profile(peaks)
    return tuple(
        solve_lambda(column, w)
        for column, w in zip(_columns(peaks, econ.l), econ.omega)
    )


def uniform_1d(peaks: Sequence[Fraction], omega: Fraction) -> Tuple[Fraction, ...]:
    solution = solve_lambda(peaks, omega)
    if solution.mode == Mode.excess_supply:
        return tuple(max(p, solution.lam) for p in peaks)
    return tuple(min(p, solution.lam) for p in peaks)


def uniform_allocate(econ: Economy, peaks: PeakProfile) -> Allocation:
    peaks = econ.check_profile(peaks)
    columns = [
        uniform_1d(column, w)
        for column, w in zip(_columns(peaks, econ.l), econ.omega)
    ]
    return _rows(columns, econ.n)


def check_reference(econ: Economy, reference: Sequence[Sequence[Fraction]]) -> Allocation:
    if len(reference) != econ.n or any(len(g) != econ.l for g in reference):
        raise InvalidReference(
            f"the reference point must be a {econ.n}x{econ.l} matrix"
        )
    for c, (column, w) in enumerate(zip(_columns(reference, econ.l), econ.omega)):
        if any(g < 0 or g > w for g in column):
            raise InvalidReference(
                f"reference of commodity {c + 1} leaves [0, {w}]: {column}"
            )
        if sum(column, ZERO) != w:
            raise InvalidReference(
                f"reference of commodity {c + 1} adds up to {sum(column, ZERO)}, not {w}"
            )
    return tuple(tuple(Fraction(x) for x in g) for g in reference)


def sequential_1d(
    peaks: Sequence[Fraction], reference: Sequence[Fraction], omega: Fraction
) -> Tuple[Fraction, ...]:
    """
    Water-filling from the reference point g: under excess demand agents
    get min(p_i, g_i + t), under excess supply max(p_i, g_i - t), with the
    least t >= 0 that clears the commodity.
    """
    check_peaks_1d(peaks, omega)
    if sum(peaks, ZERO) >= omega:
        t = water_level(peaks, reference, omega, ZERO)
        return tuple(min(p, g + t) for p, g in zip(peaks, reference))
    t = water_level([-p for p in peaks], [-g for g in reference], -omega, ZERO)
    return tuple(max(p, g - t) for p, g in zip(peaks, reference))


def sequential_allocate(
    econ: Economy, reference: Sequence[Sequence[Fraction]], peaks: PeakProfile
) -> Allocation:
    reference = check_reference(econ, reference)
    peaks = econ.check_profile(peaks)
    columns = [
        sequential_1d(column, g_column, w)
        for column, g_column, w in zip(
            _columns(peaks, econ.l), _columns(reference, econ.l), econ.omega
        )
    ]
    return _rows(columns, econ.n)


def check_orders(econ: Economy, orders: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """
    Zero-based priority orders, one per commodity; a single order is
    shared by every commodity.
    """
    orders = [tuple(order) for order in orders]
    if len(orders) == 1:
        orders = orders * econ.l
    if len(orders) != econ.l:
        raise InvalidOrder(f"expected 1 or {econ.l} orders, got {len(orders)}")
    for order in orders:
        if sorted(order) != list(range(econ.n)):
            raise InvalidOrder(f"{order} is not a permutation of the {econ.n} agents")
    return tuple(orders)


def serial_1d(
    peaks: Sequence[Fraction], order: Sequence[int], omega: Fraction
) -> Tuple[Fraction, ...]:
    shares = [ZERO] * len(peaks)
    remaining = omega
    for agent in order[:-1]:
        shares[agent] = min(peaks[agent], remaining)
        remaining -= shares[agent]
    shares[order[-1]] = remaining
    return tuple(shares)


def serial_allocate(
    econ: Economy, orders: Sequence[Sequence[int]], peaks: PeakProfile
) -> Allocation:
    orders = check_orders(econ, orders)
    peaks = econ.check_profile(peaks)
    columns = [
        serial_1d(column, order, w)
        for column, order, w in zip(_columns(peaks, econ.l), orders, econ.omega)
    ]
    return _rows(columns, econ.n)


def proportional_1d(peaks: Sequence[Fraction], omega: Fraction) -> Tuple[Fraction, ...]:
    total = sum(peaks, ZERO)
    if total > 0:
        return tuple(p * omega / total for p in peaks)
    return tuple(omega / len(peaks) for _ in peaks)


def proportional_allocate(econ: Economy, peaks: PeakProfile) -> Allocation:
    peaks = econ.check_profile(peaks)
    columns = [
        proportional_1d(column, w)
        for column, w in zip(_columns(peaks, econ.l), econ.omega)
    ]
    return _rows(columns, econ.n)
