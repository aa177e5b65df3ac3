import logging

from functools import lru_cache
from typing import Any, Callable, Dict, List, Tuple

from peak_division.economy.domain import Allocation, Economy, PeakProfile

from .grid import PeakGrid, Profile
from .settings import PEAK_DIVISION_TABLE_CACHE

logger = logging.getLogger(__name__)

# reads the outcomes of one agent's deviation group
Summarize = Callable[[List[Allocation], int], Any]


class RuleTable:
    """
    A rule restricted to a peak grid, evaluated lazily and memoized by
    lexicographic profile index. Every sweep reads outcomes through a
    table, so each profile is allocated once however many deviations
    point at it.

    Profiles that differ only in the report of agent i form that agent's
    deviation group. The group starting at ``base`` holds the indices
    ``base + m * strides[i]`` for every grid bundle m.
    """

    def __init__(self, rule, econ: Economy, grid: PeakGrid) -> None:
        self.rule = rule
        self.econ = econ
        self.grid = grid
        self.bundles = grid.bundles
        self.size = len(self.bundles)
        self.strides = tuple(self.size ** (econ.n - 1 - i) for i in range(econ.n))
        self._outcomes: Dict[int, Allocation] = {}
        self._summaries: Dict[Tuple[str, int, int], Any] = {}

    def peaks(self, profile: Profile) -> PeakProfile:
        return tuple(self.bundles[k] for k in profile)

    def outcome_at(self, index: int) -> Allocation:
        try:
            return self._outcomes[index]
        except KeyError:
            profile = self.grid.profile_at(index, self.econ.n)
            alloc = self.rule.allocate(self.econ, self.peaks(profile))
            self._outcomes[index] = alloc
            return alloc

    def outcome(self, profile: Profile) -> Allocation:
        return self.outcome_at(self.grid.index_of(profile))

    def neighbour(self, index: int, agent: int, own: int, report: int) -> int:
        """
        Index of the profile where ``agent`` reports bundle ``report``
        instead of ``own``.
        """
        return index + (report - own) * self.strides[agent]

    def group_base(self, index: int, agent: int, own: int) -> int:
        return index - own * self.strides[agent]

    def members(self, agent: int, base: int) -> List[Allocation]:
        stride = self.strides[agent]
        return [self.outcome_at(base + m * stride) for m in range(self.size)]

    def summary(self, name: str, agent: int, base: int, summarize: Summarize) -> Any:
        key = (name, agent, base)
        try:
            return self._summaries[key]
        except KeyError:
            value = summarize(self.members(agent, base), agent)
            self._summaries[key] = value
            return value

    def __repr__(self) -> str:
        return f"<RuleTable {rule_label(self.rule)} ({len(self._outcomes)} cached)>"


@lru_cache(maxsize=PEAK_DIVISION_TABLE_CACHE)
def tabulate(rule, econ: Economy, grid: PeakGrid) -> RuleTable:
    return RuleTable(rule, econ, grid)


def deviate(profile: Profile, agent: int, index: int) -> Profile:
    return profile[:agent] + (index,) + profile[agent + 1:]


def rule_label(rule) -> str:
    return getattr(rule, "label", None) or type(rule).__name__
