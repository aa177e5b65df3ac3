import itertools

from fractions import Fraction
from typing import Iterator, Optional, Tuple

from pydantic import root_validator

from peak_division.economy.domain import Bundle, Economy
from peak_division.economy.rationals import RationalLike, parse_rational
from peak_division.economy.schemas.rational import ExactModel, Rational

from .exceptions import InvalidGrid

Profile = Tuple[int, ...]


class PeakGrid(ExactModel):
    """
    Finite stand-in for the continuum of peaks: one sorted list of values
    per commodity. Grid bundles are the cartesian product of the axes and
    a profile is a tuple of bundle indices, one per agent, enumerated in
    lexicographic order.
    """

    axes: Tuple[Tuple[Rational, ...], ...]
    # derived from the axes, never passed in
    bundles: Tuple[Tuple[Rational, ...], ...] = ()

    @root_validator(skip_on_failure=True)
    def expand_bundles(cls, values):
        values["bundles"] = tuple(itertools.product(*values["axes"]))
        return values

    @property
    def size(self) -> int:
        return len(self.bundles)

    @property
    def points_per_axis(self) -> Tuple[int, ...]:
        return tuple(len(axis) for axis in self.axes)

    def profile_count(self, n: int) -> int:
        return self.size ** n

    def profile_at(self, index: int, n: int) -> Profile:
        digits = []
        for _ in range(n):
            index, digit = divmod(index, self.size)
            digits.append(digit)
        return tuple(reversed(digits))

    def index_of(self, profile: Profile) -> int:
        index = 0
        for digit in profile:
            index = index * self.size + digit
        return index

    def profiles(self, n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Tuple[int, Profile]]:
        stop = self.profile_count(n) if stop is None else stop
        if start >= stop:
            return
        tail = itertools.product(range(self.size), repeat=n)
        for index, profile in enumerate(
            itertools.islice(tail, start, stop), start=start
        ):
            yield index, profile

    def bundle_index(self, bundle: Bundle) -> int:
        return self.bundles.index(tuple(bundle))


def check_grid(econ: Economy, grid: PeakGrid) -> PeakGrid:
    if len(grid.axes) != econ.l:
        raise InvalidGrid(f"grid has {len(grid.axes)} axes, the economy {econ.l} commodities")
    for c, (axis, w) in enumerate(zip(grid.axes, econ.omega)):
        if not axis:
            raise InvalidGrid(f"axis {c + 1} is empty")
        if any(a >= b for a, b in zip(axis, axis[1:])):
            raise InvalidGrid(f"axis {c + 1} is not strictly increasing: {axis}")
        if axis[0] < 0 or axis[-1] > w:
            raise InvalidGrid(f"axis {c + 1} leaves [0, {w}]: {axis}")
    return grid


def make_grid(econ: Economy, points_per_axis: int) -> PeakGrid:
    if points_per_axis < 2:
        raise InvalidGrid(f"a grid axis needs at least 2 points, got {points_per_axis}")
    steps = points_per_axis - 1
    axes = []
    for w in econ.omega:
        if w == 0:
            axes.append((Fraction(0),))
        else:
            axes.append(tuple(w * k / steps for k in range(points_per_axis)))
    return PeakGrid(axes=tuple(axes))


def grid_from_step(econ: Economy, step: RationalLike) -> PeakGrid:
    step = parse_rational(step)
    if step <= 0:
        raise InvalidGrid(f"grid step must be positive, got {step}")
    axes = []
    for w in econ.omega:
        count = int(w // step)
        axis = [step * k for k in range(count + 1)]
        if axis[-1] != w:
            axis.append(w)
        axes.append(tuple(axis))
    return PeakGrid(axes=tuple(axes))
