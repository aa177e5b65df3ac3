"""
Option sets of strategy-proof peaks-only rules.

The option set of agent i, given the others' peaks, is everything the agent
can obtain by varying their own report. For strategy-proof own-peak-only
rules it is a product of closed intervals and the rule hands out the point
of that box closest to the reported peak, coordinate by coordinate. Here it
is approximated by sweeping the report over a peak grid.
"""
import itertools
import logging

from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from peak_division.axioms.grid import PeakGrid, Profile
from peak_division.axioms.table import RuleTable
from peak_division.economy.domain import Bundle, Economy, PeakProfile
from peak_division.economy.exceptions import ShapeError
from peak_division.economy.schemas.rational import ExactModel, Rational

logger = logging.getLogger(__name__)

Interval = Tuple[Fraction, Fraction]


class OptionBox(ExactModel):
    intervals: Tuple[Tuple[Rational, Rational], ...]
    # the swept allotments the intervals were read from
    points: FrozenSet[Tuple[Rational, ...]]
    valid: bool

    def contains(self, bundle: Sequence[Fraction]) -> bool:
        return all(a <= x <= b for x, (a, b) in zip(bundle, self.intervals))

    def within(self, other: "OptionBox") -> bool:
        return all(
            oa <= a and b <= ob
            for (a, b), (oa, ob) in zip(self.intervals, other.intervals)
        )

    def clamp(self, peak: Sequence[Fraction]) -> Bundle:
        return tuple(min(max(p, a), b) for p, (a, b) in zip(peak, self.intervals))

    def outside(self, other: "OptionBox") -> Optional[Bundle]:
        """
        A swept point of this box that ``other`` cannot offer, if any.
        """
        for point in sorted(self.points):
            if not other.contains(point):
                return point
        for corner in itertools.product(*self.intervals):
            if not other.contains(corner):
                return corner
        return None


def expected_axis(axis: Sequence[Fraction], interval: Interval) -> FrozenSet[Fraction]:
    a, b = interval
    return frozenset([a, b, *(v for v in axis if a <= v <= b)])


def box_from_points(points: Iterable[Bundle], sweep: PeakGrid) -> OptionBox:
    """
    Box hull of the swept allotments. The box is valid when the swept set
    is exactly the product, over commodities, of the grid values inside
    each interval together with its endpoints.
    """
    points = frozenset(tuple(p) for p in points)
    columns = list(zip(*points))
    intervals = tuple((min(column), max(column)) for column in columns)
    expected = itertools.product(
        *(expected_axis(axis, iv) for axis, iv in zip(sweep.axes, intervals))
    )
    valid = points == frozenset(expected)
    return OptionBox(intervals=intervals, points=points, valid=valid)


def insert_peak(others: Sequence, agent: int, peak) -> tuple:
    others = tuple(others)
    return others[:agent] + (peak,) + others[agent:]


def option_box(
    rule, econ: Economy, agent: int, others_peaks: PeakProfile, sweep: PeakGrid
) -> OptionBox:
    """
    ``agent`` is 0-based and ``others_peaks`` lists the other n-1 peaks in
    agent order.
    """
    if len(others_peaks) != econ.n - 1:
        raise ShapeError(f"expected {econ.n - 1} peaks for the others, got {len(others_peaks)}")
    points = [
        rule.allocate(econ, insert_peak(others_peaks, agent, bundle))[agent]
        for bundle in sweep.bundles
    ]
    box = box_from_points(points, sweep)
    if not box.valid:
        logger.info(
            f"Option set of agent {agent + 1} against {others_peaks} is not a box"
        )
    return box


def table_box(table: RuleTable, agent: int, others: Profile) -> OptionBox:
    """
    Same as :func:`option_box`, reading memoized outcomes off a rule
    table; ``others`` are grid bundle indices.
    """
    base = table.grid.index_of(insert_peak(others, agent, 0))
    points = [alloc[agent] for alloc in table.members(agent, base)]
    return box_from_points(points, table.grid)


def conditioning_profiles(
    size: int, others: int, sample: Optional[int] = None
) -> Iterable[Profile]:
    """
    Others-profiles in lexicographic order; with ``sample`` set, an evenly
    strided subset of that many profiles.
    """
    total = size ** others
    if sample is None or sample >= total:
        yield from itertools.product(range(size), repeat=others)
        return
    logger.warning(f"Conditioning on {sample} of {total} others-profiles")
    for k in range(sample):
        index, digits = k * total // sample, []
        for _ in range(others):
            index, digit = divmod(index, size)
            digits.append(digit)
        yield tuple(reversed(digits))
