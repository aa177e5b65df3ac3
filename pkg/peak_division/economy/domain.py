import logging

from fractions import Fraction
from typing import Sequence, Tuple

from pydantic import validator

from .exceptions import (
    InfeasibleAllocation,
    InvalidDimensions,
    InvalidEndowment,
    InvalidPeak,
    ShapeError,
)
from .rationals import RationalLike, parse_vector
from .schemas.rational import ExactModel, Rational

logger = logging.getLogger(__name__)

Bundle = Tuple[Fraction, ...]
# one bundle per agent
PeakProfile = Tuple[Bundle, ...]
Allocation = Tuple[Bundle, ...]

ZERO = Fraction(0)


class Economy(ExactModel):
    """
    The arena shared by every rule: l commodities with social endowment
    omega, divided among n agents. The consumption set of each agent is
    the box X = [0, omega^1] x ... x [0, omega^l].
    """

    l: int
    omega: Tuple[Rational, ...]
    n: int

    @validator("l", "n")
    def validate_dimensions(cls, value, field):
        if value < 1:
            raise InvalidDimensions(
                f"an economy needs at least one commodity and one agent, got {field.name}={value}"
            )
        return value

    @validator("omega")
    def validate_omega(cls, omega, values):
        commodities = values.get("l")
        if commodities is not None and len(omega) != commodities:
            raise InvalidDimensions(f"omega has {len(omega)} entries, expected {commodities}")
        for w in omega:
            if w < 0:
                raise InvalidEndowment(f"negative endowment {w} in {omega}")
        return omega

    def contains(self, bundle: Sequence[Fraction]) -> bool:
        return len(bundle) == self.l and all(
            ZERO <= x <= w for x, w in zip(bundle, self.omega)
        )

    def check_bundle(self, bundle: Sequence[Fraction], what: str = "bundle") -> Bundle:
        if len(bundle) != self.l:
            raise ShapeError(
                f"{what} has {len(bundle)} coordinates, the economy has {self.l} commodities"
            )
        bundle = tuple(bundle)
        if not self.contains(bundle):
            raise InvalidPeak(f"{what} {bundle} lies outside the consumption set")
        return bundle

    def check_profile(self, profile: Sequence[Sequence[Fraction]]) -> PeakProfile:
        if len(profile) != self.n:
            raise ShapeError(f"expected {self.n} peaks, got {len(profile)}")
        return tuple(
            self.check_bundle(peak, what=f"peak of agent {i + 1}")
            for i, peak in enumerate(profile)
        )

    def check_allocation(self, alloc: Sequence[Sequence[Fraction]]) -> Allocation:
        _check_shape(alloc, self)
        alloc = tuple(tuple(b) for b in alloc)
        if not is_feasible(alloc, self):
            raise InfeasibleAllocation(
                f"{alloc} does not divide {self.omega} among {self.n} agents"
            )
        return alloc

    @property
    def equal_division(self) -> Bundle:
        return tuple(w / self.n for w in self.omega)


def make_economy(l: int, omega: Sequence[RationalLike], n: int) -> Economy:
    # InvalidRational surfaces here rather than as a pydantic error
    return Economy(l=l, omega=parse_vector(omega), n=n)


def equal_division(econ: Economy) -> Bundle:
    return econ.equal_division


def _check_shape(alloc: Sequence[Sequence[Fraction]], econ: Economy) -> None:
    if len(alloc) != econ.n:
        raise ShapeError(f"expected {econ.n} bundles, got {len(alloc)}")
    for i, bundle in enumerate(alloc):
        if len(bundle) != econ.l:
            raise ShapeError(
                f"bundle of agent {i + 1} has {len(bundle)} coordinates, expected {econ.l}"
            )


def is_feasible(alloc: Sequence[Sequence[Fraction]], econ: Economy) -> bool:
    _check_shape(alloc, econ)
    for c, w in enumerate(econ.omega):
        column = [bundle[c] for bundle in alloc]
        if any(x < 0 or x > w for x in column):
            return False
        if sum(column, ZERO) != w:
            return False
    return True


def between(x: Sequence[Fraction], a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """
    True when every coordinate of x lies in the closed interval spanned
    by the matching coordinates of a and b.
    """
    if not len(x) == len(a) == len(b):
        raise ShapeError(
            f"betweenness needs equal lengths, got {len(x)}, {len(a)}, {len(b)}"
        )
    for xc, ac, bc in zip(x, a, b):
        if ac <= bc:
            if not ac <= xc <= bc:
                return False
        elif not bc <= xc <= ac:
            return False
    return True
