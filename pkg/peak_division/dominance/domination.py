import logging
import time

from typing import Iterable, List, Optional, Tuple

from peak_division.axioms.checks import check_strategy_proof, default_grid
from peak_division.axioms.grid import PeakGrid, Profile
from peak_division.axioms.schemas.report import Witness
from peak_division.axioms.settings import PEAK_DIVISION_WORKERS
from peak_division.axioms.table import RuleTable, rule_label, tabulate
from peak_division.economy.domain import Economy, between

from .exceptions import NotStrategyProof
from .option_sets import conditioning_profiles, table_box
from .schemas.verdict import DominationVerdict, Evidence, Relation
from .settings import (
    PEAK_DIVISION_CONDITIONING_SAMPLE,
    PEAK_DIVISION_MAX_EVIDENCE,
)

logger = logging.getLogger(__name__)


def compare_tables(
    table_a: RuleTable, table_b: RuleTable, profiles: Iterable[Profile]
) -> Tuple[bool, Optional[Profile]]:
    """
    Walks ``profiles`` and tells whether rule A gives every agent a bundle
    between the peak and rule B's bundle, along with the first profile
    where the two allocations differ. Stops at the first profile breaking
    weak domination.
    """
    differs_at = None
    for profile in profiles:
        a, b = table_a.outcome(profile), table_b.outcome(profile)
        if a == b:
            continue
        peaks = table_a.peaks(profile)
        if not all(between(x, p, y) for x, p, y in zip(a, peaks, b)):
            return False, profile
        if differs_at is None:
            differs_at = profile
    return True, differs_at


def _all_profiles(econ: Economy, grid: PeakGrid) -> Iterable[Profile]:
    return (profile for _, profile in grid.profiles(econ.n))


def dominates_on_grid(
    rule_a,
    rule_b,
    econ: Economy,
    grid: PeakGrid,
    strict: bool = False,
    profiles: Optional[Iterable[Profile]] = None,
) -> bool:
    """
    Peak-based welfare comparison: A weakly dominates B when every
    agent's A-bundle lies between the peak and the B-bundle, which makes
    it weakly better under every single-peaked preference with that peak.
    """
    weak, differs_at = compare_tables(
        tabulate(rule_a, econ, grid),
        tabulate(rule_b, econ, grid),
        _all_profiles(econ, grid) if profiles is None else profiles,
    )
    if not strict:
        return weak
    return weak and differs_at is not None


def extensionally_equal(rule_a, rule_b, econ: Economy, grid: PeakGrid) -> bool:
    table_a, table_b = tabulate(rule_a, econ, grid), tabulate(rule_b, econ, grid)
    return all(
        table_a.outcome(profile) == table_b.outcome(profile)
        for profile in _all_profiles(econ, grid)
    )


def find_dominator(
    rule,
    econ: Economy,
    grid: PeakGrid,
    candidates: Iterable,
    workers: int = PEAK_DIVISION_WORKERS,
) -> Optional[Tuple[object, Witness]]:
    """
    First strategy-proof candidate that strictly dominates ``rule`` on the
    grid, with the first profile where it does better. Candidates exposing
    ``edited_profiles(grid)`` are only compared where they were edited.
    """
    table = tabulate(rule, econ, grid)
    for candidate in candidates:
        edited = getattr(candidate, "edited_profiles", None)
        weak, differs_at = compare_tables(
            tabulate(candidate, econ, grid),
            table,
            edited(grid) if edited else _all_profiles(econ, grid),
        )
        if not weak or differs_at is None:
            continue
        if not check_strategy_proof(candidate, econ, grid, workers).certified:
            logger.debug(f"{rule_label(candidate)} dominates but is manipulable")
            continue
        logger.info(f"{rule_label(candidate)} dominates {rule_label(rule)}")
        witness = Witness(
            profile_index=grid.index_of(differs_at),
            profile=table.peaks(differs_at),
            truthful=table.outcome(differs_at),
            deviated=tabulate(candidate, econ, grid).outcome(differs_at),
            counterpart=rule_label(candidate),
        )
        return candidate, witness
    return None


def _require_strategy_proof(rule, econ: Economy, grid: PeakGrid, workers: int) -> None:
    if not check_strategy_proof(rule, econ, grid, workers).certified:
        raise NotStrategyProof(rule_label(rule))


def check_domination(
    rule_a,
    rule_b,
    econ: Economy,
    grid: PeakGrid = None,
    conditioning_sample: Optional[int] = PEAK_DIVISION_CONDITIONING_SAMPLE,
    max_evidence: int = PEAK_DIVISION_MAX_EVIDENCE,
    workers: int = PEAK_DIVISION_WORKERS,
) -> DominationVerdict:
    """
    Compares two strategy-proof rules through their option boxes: A
    dominates B exactly when every option box of B sits inside the
    matching option box of A.
    """
    grid = default_grid(econ, grid)
    _require_strategy_proof(rule_a, econ, grid, workers)
    _require_strategy_proof(rule_b, econ, grid, workers)

    started = time.perf_counter()
    table_a, table_b = tabulate(rule_a, econ, grid), tabulate(rule_b, econ, grid)
    label_a, label_b = rule_label(rule_a), rule_label(rule_b)
    b_within_a = a_within_b = True
    evidence: List[Evidence] = []
    invalid = conditioned = 0

    for others in conditioning_profiles(grid.size, econ.n - 1, conditioning_sample):
        conditioned += 1
        for agent in range(econ.n):
            box_a = table_box(table_a, agent, others)
            box_b = table_box(table_b, agent, others)
            invalid += (not box_a.valid) + (not box_b.valid)
            for b_side, (box, other, offered_by) in (
                (True, (box_b, box_a, label_b)),
                (False, (box_a, box_b, label_a)),
            ):
                if box.within(other):
                    continue
                if b_side:
                    b_within_a = False
                else:
                    a_within_b = False
                if len(evidence) < max_evidence:
                    evidence.append(
                        Evidence(
                            offered_by=offered_by,
                            agent=agent + 1,
                            others=tuple(table_a.bundles[k] for k in others),
                            point=box.outside(other),
                        )
                    )
    if invalid:
        logger.warning(f"{invalid} swept option set(s) are not boxes")

    if b_within_a and a_within_b:
        relation = Relation.equivalent
    elif b_within_a:
        relation = Relation.a_dominates_b
    elif a_within_b:
        relation = Relation.b_dominates_a
    else:
        relation = Relation.incomparable
    elapsed = time.perf_counter() - started
    logger.info(f"{label_a} vs {label_b}: {relation.value} in {elapsed:.3f}s")
    return DominationVerdict(
        rule_a=label_a,
        rule_b=label_b,
        relation=relation,
        evidence=evidence,
        conditioning_profiles=conditioned,
        invalid_boxes=invalid,
        elapsed=elapsed,
    )
