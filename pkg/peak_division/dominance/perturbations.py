"""
Box-enlargement edits.

An edit takes a rule, one agent and one others-profile, widens that
agent's option box by one grid step on one side of one commodity, and
re-materializes the agent's allotment as the clamp of the peak into the
wider box. The amount gained or lost is absorbed by a single other agent.
Outside the edited others-profile the rule is unchanged.
"""
import logging

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

from peak_division.axioms.grid import PeakGrid, Profile
from peak_division.axioms.table import rule_label, tabulate
from peak_division.economy.domain import Economy, PeakProfile

from .option_sets import Interval, OptionBox, conditioning_profiles, insert_peak, table_box
from .settings import (
    PEAK_DIVISION_CONDITIONING_SAMPLE,
    PEAK_DIVISION_PERTURBATION_BUDGET,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EditedRule:
    base: object
    agent: int
    others_peaks: PeakProfile
    box: tuple
    absorber: int
    commodity: int
    side: str

    @property
    def label(self) -> str:
        return (
            f"{rule_label(self.base)}/enlarge(agent={self.agent + 1},"
            f"commodity={self.commodity + 1},side={self.side},"
            f"absorber={self.absorber + 1})"
        )

    def _others(self, peaks: PeakProfile) -> PeakProfile:
        return peaks[:self.agent] + peaks[self.agent + 1:]

    def allocate(self, econ: Economy, peaks: Sequence[Sequence]):
        alloc = self.base.allocate(econ, peaks)
        peaks = tuple(tuple(p) for p in peaks)
        if self._others(peaks) != self.others_peaks:
            return alloc
        return econ.check_allocation(
            shift(alloc, self.agent, self.absorber, clamp(peaks[self.agent], self.box))
        )

    def edited_profiles(self, grid: PeakGrid) -> List[Profile]:
        others = tuple(grid.bundle_index(b) for b in self.others_peaks)
        return [insert_peak(others, self.agent, k) for k in range(grid.size)]


def clamp(peak: Sequence, box: Sequence[Interval]) -> tuple:
    return tuple(min(max(p, a), b) for p, (a, b) in zip(peak, box))


def shift(alloc, agent: int, absorber: int, bundle) -> tuple:
    rows = [tuple(row) for row in alloc]
    delta = [new - old for new, old in zip(bundle, rows[agent])]
    rows[agent] = tuple(bundle)
    rows[absorber] = tuple(x - d for x, d in zip(rows[absorber], delta))
    return tuple(rows)


def enlarged(box: OptionBox, axis: Sequence, commodity: int, side: str) -> Optional[tuple]:
    a, b = box.intervals[commodity]
    if side == "low":
        below = [v for v in axis if v < a]
        if not below:
            return None
        interval = (below[-1], b)
    else:
        above = [v for v in axis if v > b]
        if not above:
            return None
        interval = (a, above[0])
    intervals = list(box.intervals)
    intervals[commodity] = interval
    return tuple(intervals)


def perturbation_family(
    rule,
    econ: Economy,
    grid: PeakGrid,
    budget: int = PEAK_DIVISION_PERTURBATION_BUDGET,
    conditioning_sample: Optional[int] = PEAK_DIVISION_CONDITIONING_SAMPLE,
) -> Iterator[EditedRule]:
    """
    Yields at most ``budget`` edits of ``rule`` in a fixed order. Edits
    that would push the absorber outside the consumption set for some
    grid peak are skipped.
    """
    if budget <= 0:
        return
    table = tabulate(rule, econ, grid)
    produced = 0
    for others in conditioning_profiles(grid.size, econ.n - 1, conditioning_sample):
        others_peaks = tuple(grid.bundles[k] for k in others)
        for agent in range(econ.n):
            box = table_box(table, agent, others)
            profiles = [insert_peak(others, agent, k) for k in range(grid.size)]
            for commodity, axis in enumerate(grid.axes):
                for side in ("low", "high"):
                    wider = enlarged(box, axis, commodity, side)
                    if wider is None:
                        continue
                    for absorber in range(econ.n):
                        if absorber == agent:
                            continue
                        feasible = all(
                            econ.contains(
                                shift(
                                    table.outcome(p), agent, absorber,
                                    clamp(table.peaks(p)[agent], wider),
                                )[absorber]
                            )
                            for p in profiles
                        )
                        if not feasible:
                            continue
                        yield EditedRule(
                            base=rule,
                            agent=agent,
                            others_peaks=others_peaks,
                            box=wider,
                            absorber=absorber,
                            commodity=commodity,
                            side=side,
                        )
                        produced += 1
                        if produced >= budget:
                            logger.debug(f"Perturbation budget {budget} spent")
                            return
